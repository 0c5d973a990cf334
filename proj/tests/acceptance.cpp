// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gyro/einstein.hpp"
#include "gyro/io.hpp"
#include "gyro/mobius.hpp"
#include "gyro/quotient.hpp"
#include "oracles.hpp"

using namespace gyro;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<std::string> kTables = {"z4", "klein4", "z6", "s3", "z8", "gyro8", "gyro16"};
const std::vector<std::string> kFiniteChains = {"z8_chain", "z6_chain", "gyro8_chain", "gyro8_fine_chain",
                                                "gyro16_chain"};
const std::vector<std::string> kRadialChains = {"mobius_chain", "mobius_metric_chain", "mobius_geometric_chain"};
const std::vector<std::pair<std::string, std::string>> kBases = {
    {"z6", "z6_base"}, {"z8", "z8_base"}, {"gyro8", "gyro8_base"}, {"s3", "s3_base"}};

std::string path_of(const std::string& name) { return oracle::fixture(name + ".json").string(); }

ModelPtr model(const std::string& name) {
  return std::make_shared<const CayleyGyro>(table_load(read_json_file(path_of(name))));
}

FiniteChain finite_chain(const std::string& name) {
  return certify(std::get<FiniteChain>(load_chain(path_of(name))), ChainLevel::triple_level);
}

RadialChain radial_chain(const std::string& name) {
  return certify(std::get<RadialChain>(load_chain(path_of(name))), ChainLevel::triple_level);
}

QuotientMetric metric_of(const FiniteChain& c) {
  return QuotientMetric(CosetSpace(chain_intersection(c)), FinitePrenorm(build_dyadic(c, default_depth(c))));
}

bool has_nonidentity_gyration(const CayleyGyro& g) {
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      for (Index c = 0; c < g.order(); ++c)
        if (g.gyr(a, b, c) != c) return true;
  return false;
}

std::vector<FinSubset> invariant_symmetric_sets(const ModelPtr& m) {
  std::vector<FinSubset> out;
  for (auto& s : all_symmetric_sets(m))
    if (is_gyr_invariant(s)) out.push_back(std::move(s));
  return out;
}

std::vector<FinSubset> l_subgyrogroups(const ModelPtr& m) {
  std::vector<FinSubset> out;
  for (auto& s : all_symmetric_sets(m))
    if (is_subgyrogroup(s) && is_L_subgyrogroup(s)) out.push_back(std::move(s));
  return out;
}

// Every choice of one element per coset.
std::vector<FinSubset> transversals(const CosetSpace& space) {
  std::vector<FinSubset> out{FinSubset(space.model())};
  for (std::size_t c = 0; c < space.size(); ++c) {
    std::vector<FinSubset> next;
    for (const auto& partial : out)
      for (Index a : space.coset(c).elements()) {
        FinSubset s = partial;
        s.insert(a);
        next.push_back(std::move(s));
      }
    out = std::move(next);
  }
  return out;
}

std::string fmt(double x) { return format_number(x); }

std::string secs(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", t);
  return buf;
}

Outcome axioms() {
  const auto t0 = Clock::now();
  bool ok = true, nonidentity = false;
  std::size_t tuples = 0;
  for (const auto& name : kTables) {
    const auto g = model(name);
    const auto r = check_axioms(*g);
    ok = ok && r.verdict();
    tuples += r.tuples_checked();
    nonidentity = nonidentity || has_nonidentity_gyration(*g);
  }
  const double sweep = seconds_since(t0);
  std::size_t mutations = 0, caught = 0;
  for (const auto& name : kTables) {
    const CayleyTable base = model(name)->table();
    for (Index a = 0; a < base.order; ++a)
      for (Index b = 0; b < base.order; ++b) {
        CayleyTable t = base;
        t.at(a, b) = (t.at(a, b) + 1) % base.order;
        const auto r = check_axioms(t, Strategy::exhaustive());
        ++mutations;
        if (!r.verdict() && !r.witnesses().empty()) ++caught;
      }
  }
  const bool pass = ok && nonidentity && sweep < 10.0 && caught == mutations;
  return {pass, std::to_string(kTables.size()) + " tables, " + std::to_string(tuples) + " tuples in " + secs(sweep) +
                    ", nonidentity gyration present: " + (nonidentity ? "yes" : "no") + "; " +
                    std::to_string(caught) + "/" + std::to_string(mutations) + " single-entry mutations caught"};
}

Outcome mobius() {
  const MobiusDisk<double> disk;
  const auto ax = check_axioms(disk, Strategy::sampled(1, 10000), 1e-12);
  const auto id = check_identities(disk, Strategy::sampled(2, 10000), 1e-12);
  Rng rng(3);
  double modulus = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const auto a = disk.sample(rng), b = disk.sample(rng);
    modulus = std::max(modulus, std::abs(abs(mobius_gyr_factor(a, b)) - 1.0));
  }
  const MobiusDisk<Rational> exact;
  const Complex<Rational> half(Rational(1, 2)), i_half(Rational(0), Rational(1, 2));
  const bool spot1 = exact.add(half, half) == Complex<Rational>(Rational(4, 5));
  const bool spot2 = exact.add(i_half, half) == Complex<Rational>(Rational(6, 17), Rational(10, 17));
  const bool pass = ax.verdict() && id.verdict() && modulus < 1e-12 && spot1 && spot2;
  return {pass, "axioms residual " + fmt(ax.max_residual()) + ", identities residual " + fmt(id.max_residual()) +
                    ", |gyr factor| deviation " + fmt(modulus) + ", exact spot checks " +
                    (spot1 && spot2 ? "bit-exact" : "wrong")};
}

Outcome einstein() {
  const EinsteinBall<double> ball(1.0);
  using V = Vec3<double>;
  Rng rng(4);
  double identity = 0.0;
  std::size_t escaped = 0;
  for (int k = 0; k < 10000; ++k) {
    const V u = ball.sample(rng, 0.999), v = ball.sample(rng, 0.999);
    identity = std::max({identity, abs(ball.add(V{}, u) - u), abs(ball.add(u, V{}) - u)});
    if (!ball.contains(ball.add(u, v))) ++escaped;
  }
  const double collinear = std::abs(ball.add(V{0.5, 0, 0}, V{0.5, 0, 0})[0] - 0.8);
  const double gamma = std::abs(ball.gamma(V{0.6, 0, 0}) - 1.25);
  const bool pass = identity < 1e-12 && collinear < 1e-12 && gamma < 1e-12 && escaped == 0;
  return {pass, "identity residual " + fmt(identity) + ", 0.5+0.5 off by " + fmt(collinear) + ", gamma(0.6) off by " +
                    fmt(gamma) + ", " + std::to_string(escaped) + " of 10000 sums left the ball"};
}

Outcome generation() {
  const auto t0 = Clock::now();
  std::size_t sets = 0, invariant_inputs = 0, structural_failures = 0, invariant_failures = 0;
  std::vector<std::string> counterexamples;
  for (const auto& name : kTables) {
    const auto g = model(name);
    if (g->order() > 12) continue;
    for (const auto& u : all_symmetric_sets(g)) {
      ++sets;
      const auto h = generate_invariant(u).subgyrogroup;
      if (!(generation_step(h) == h) || !is_subgyrogroup(h)) ++structural_failures;
      const bool u_invariant = is_gyr_invariant(u);
      invariant_inputs += u_invariant;
      if (!is_gyr_invariant(h)) {
        if (u_invariant) ++invariant_failures;
        counterexamples.push_back(name + " U=" + u.to_string());
      }
    }
  }
  const double t = seconds_since(t0);
  const bool pass = structural_failures == 0 && counterexamples.empty() && t < 30.0;
  std::string detail = std::to_string(sets) + " symmetric sets in " + secs(t) + "; fixed point and subgyrogroup: " +
                       (structural_failures == 0 ? "all" : std::to_string(structural_failures) + " failures") +
                       "; gyr-invariant output for all " + std::to_string(invariant_inputs) +
                       " gyr-invariant inputs: " + (invariant_failures == 0 ? "yes" : "no");
  if (!counterexamples.empty()) {
    detail += "; H not gyr-invariant for non-invariant inputs:";
    for (const auto& c : counterexamples) detail += " " + c;
  }
  return {pass, detail};
}

Outcome prenorm() {
  bool ok = true;
  std::size_t audits = 0;
  for (const auto& name : kFiniteChains) {
    const auto c = finite_chain(name);
    for (std::size_t depth = 1; depth <= std::max<std::size_t>(6, default_depth(c)); ++depth) {
      ok = ok && prenorm_audit(FinitePrenorm(build_dyadic(c, depth))).verdict();
      ++audits;
    }
  }
  double residual = 0.0;
  for (const auto& name : kRadialChains) {
    const auto c = radial_chain(name);
    const auto r = prenorm_audit(RadialPrenorm(build_dyadic(c, default_depth(c))), MobiusDisk<double>(),
                                 Strategy::sampled(5, 10000), 1e-9);
    ok = ok && r.verdict();
    residual = std::max(residual, r.max_residual());
    ++audits;
  }
  return {ok, std::to_string(audits) + " audits (finite exhaustive at depths 1-6, radial 10000 samples), "
                                       "max radial residual " + fmt(residual)};
}

Outcome quotient() {
  bool ok = true;
  for (const auto& name : kFiniteChains) ok = ok && metric_of(finite_chain(name)).audit().verdict();
  const auto rho = metric_of(finite_chain("z8_chain"));
  const bool golden = rho(0, 1) == 1.0 && rho(0, 2) == 2.0;
  return {ok && golden, std::to_string(kFiniteChains.size()) + " chains audited exhaustively; Z8 rho(0,1)=" +
                            fmt(rho(0, 1)) + ", rho(0,2)=" + fmt(rho(0, 2))};
}

Outcome balls() {
  bool ok = true;
  std::size_t tuples = 0;
  for (const auto& name : kFiniteChains) {
    const auto r = ball_correspondence_sweep(metric_of(finite_chain(name)), GroundMetric::two_sided);
    ok = ok && r.verdict();
    tuples += r.tuples_checked();
  }
  const auto rho = metric_of(finite_chain("z8_chain"));
  const auto printed = ball_correspondence(rho, 0, 0.6, GroundMetric::abs_printed);
  const auto g = rho.space().model();
  const bool reproduced = printed.has_rule("counterexample") && printed.informational() &&
                          ground_ball(rho, 0, 0.6, GroundMetric::abs_printed) == FinSubset(g, {0, 1, 7}) &&
                          quotient_ball_preimage(rho, 0, 0.6) == FinSubset(g, {0});
  return {ok && reproduced, "two-sided: " + std::to_string(tuples) + " (x, eps) pairs; abs_printed Z8 counterexample " +
                                (reproduced ? "reproduced" : "missing")};
}

Outcome kernels() {
  bool ok = true;
  std::size_t bases = 0;
  // Fixture bases, plus for each small model the base of all gyr-invariant symmetric sets.
  std::vector<BaseFamily> families;
  for (const auto& [table, base] : kBases) {
    const auto g = model(table);
    families.push_back(load_base(path_of(base), g));
  }
  for (const auto& name : kTables) {
    const auto g = model(name);
    families.push_back(BaseFamily{g, invariant_symmetric_sets(g)});
  }
  for (const auto& b : families) {
    ok = ok && is_neutral(FinSubset::identity_only(b.model), b).holds;
    ++bases;
  }
  const auto s3 = model("s3");
  const auto s3_neutral = is_neutral(FinSubset(s3, {0, 1}), load_base(path_of("s3_base"), s3));
  const bool s3_fails = !s3_neutral.holds && !s3_neutral.witness.empty();

  std::size_t saturation_runs = 0, saturation_failures = 0;
  for (const auto& b : families) {
    if (b.model->order() > 12) continue;
    for (const auto& h : l_subgyrogroups(b.model)) {
      if (!is_neutral(h, b).holds) continue;
      const CosetSpace space(h);
      for (const auto& a : transversals(space))
        for (const auto& u : b.sets) {
          const auto r = saturation_check(a, u, h, b);
          if (!r.preconditions_hold) continue;
          ++saturation_runs;
          saturation_failures += !r.saturated;
        }
    }
  }

  std::size_t triples = 0, inclusion_failures = 0;
  for (const auto& name : kTables) {
    const auto g = model(name);
    const auto sets = invariant_symmetric_sets(g);
    std::vector<FinSubset> hs;
    for (const auto& s : sets)
      if (is_subgyrogroup(s)) hs.push_back(s);
    for (const auto& u : sets)
      for (const auto& w : sets) {
        if (!is_subset(w, u)) continue;
        for (const auto& h : hs) {
          const auto r = verify_char_inclusion(u, w, h);
          if (r.has_rule("precondition")) continue;
          ++triples;
          inclusion_failures += !r.verdict();
        }
      }
  }
  const bool pass = ok && s3_fails && saturation_failures == 0 && saturation_runs > 0 && inclusion_failures == 0 &&
                    triples > 0;
  return {pass, "H={0} neutral on " + std::to_string(bases) + " bases; S3 non-neutral witness " +
                    (s3_fails ? "found" : "missing") + "; saturation " +
                    std::to_string(saturation_runs - saturation_failures) + "/" + std::to_string(saturation_runs) +
                    "; char inclusion " + std::to_string(triples - inclusion_failures) + "/" +
                    std::to_string(triples) + " qualifying triples"};
}

std::vector<std::vector<std::string>> cli_sweep() {
  std::vector<std::vector<std::string>> cmds;
  for (const auto& t : kTables) {
    cmds.push_back({"check-axioms", "--model", path_of(t)});
    cmds.push_back({"check-identities", "--model", path_of(t)});
    cmds.push_back({"gyr-table", "--model", path_of(t)});
  }
  for (const auto& m : {"mobius", "einstein"}) {
    cmds.push_back({"check-axioms", "--model", path_of(m), "--samples", "2000", "--seed", "11"});
    cmds.push_back({"check-identities", "--model", path_of(m), "--samples", "2000", "--seed", "11"});
  }
  for (const auto& c : kFiniteChains) {
    cmds.push_back({"admissible", "--chain", path_of(c)});
    cmds.push_back({"prenorm", "--chain", path_of(c), "--format", "csv"});
    cmds.push_back({"prenorm", "--chain", path_of(c)});
    cmds.push_back({"quotient", "--chain", path_of(c), "--format", "csv"});
    cmds.push_back({"quotient", "--chain", path_of(c)});
  }
  for (const auto& c : kRadialChains) {
    cmds.push_back({"admissible", "--chain", path_of(c)});
    cmds.push_back({"prenorm", "--chain", path_of(c), "--samples", "2000", "--seed", "11"});
  }
  for (const auto& [table, base] : kBases)
    cmds.push_back({"neutral", "--model", path_of(table), "--set", "0", "--base", path_of(base)});
  cmds.push_back({"generate", "--model", path_of("z6"), "--set", "0,1,5"});
  cmds.push_back({"generate", "--model", path_of("mobius"), "--radius", "1/4"});
  cmds.push_back({"subgyro-check", "--model", path_of("gyro8"), "--set", "0,1,4,5"});
  cmds.push_back({"quotient", "--chain", path_of("z8_chain"), "--element", "0", "--eps", "0.6", "--ground",
                  "abs_printed"});
  cmds.push_back({"gyr-table", "--model", path_of("mobius"), "--element", "0.5,0", "--element", "0,0.5"});
  return cmds;
}

bool sweep_into(const std::filesystem::path& dir, const std::vector<std::vector<std::string>>& cmds) {
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  bool ok = true;
  for (std::size_t k = 0; k < cmds.size(); ++k) {
    auto args = cmds[k];
    const bool csv = std::find(args.begin(), args.end(), "csv") != args.end();
    args.push_back("--out");
    args.push_back((dir / (std::to_string(k) + (csv ? ".csv" : ".json"))).string());
    std::ostringstream out, err;
    ok = ok && cli::run(args, out, err) == cli::kExitPass;
  }
  return ok;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Clock::time_point g_start;

Outcome determinism() {
  const auto cmds = cli_sweep();
  const auto root = std::filesystem::temp_directory_path() / "gyro_acceptance";
  const bool ran = sweep_into(root / "a", cmds) && sweep_into(root / "b", cmds);
  std::size_t same = 0;
  for (const auto& entry : std::filesystem::directory_iterator(root / "a"))
    same += slurp(entry.path()) == slurp(root / "b" / entry.path().filename());
  const double total = seconds_since(g_start);
  const bool pass = ran && same == cmds.size() && total < 120.0;
  return {pass, std::to_string(same) + "/" + std::to_string(cmds.size()) +
                    " artifacts byte-identical across two runs; acceptance wall time " + secs(total)};
}

}  // namespace

int main() {
  g_start = Clock::now();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"axioms on Cayley fixtures", axioms},
      {"Mobius closed forms", mobius},
      {"Einstein addition", einstein},
      {"generation theorem", generation},
      {"prenorm audits", prenorm},
      {"quotient metric", quotient},
      {"ball correspondence", balls},
      {"neutrality, saturation, characteristic inclusion", kernels},
      {"determinism and runtime", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %zu: %s  %s (%.2fs): %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first,
                seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
