#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gyro/io.hpp"
#include "gyro/model_traits.hpp"
#include "gyro/prenorm.hpp"
#include "gyro/quotient.hpp"

namespace gyro::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct CommandSpec {
  std::string model, chain, base, set, u, w, h;
  std::vector<std::string> elements;
  std::vector<std::string> inputs;
  std::string level = "triple";
  std::string ground = "two_sided";
  std::string radius;
  std::optional<double> eps;
  std::optional<std::size_t> depth;
  bool exhaustive = false;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  double tol = kDefaultTolerance;
  std::string format;
  std::string out;
};

/// What a subcommand produced: a document for json, optional text and csv
/// renderings, and whether every requested check passed.
struct Outcome {
  json doc;
  std::string text;
  std::string csv;
  bool pass = true;
};

std::string report_text(const CheckReport& r) {
  std::ostringstream os;
  os << r.name() << ": " << (r.verdict() ? "pass" : "fail") << (r.informational() ? " (informational)" : "")
     << ", " << r.tuples_checked() << " tuples, " << r.violation_count() << " violations";
  if (r.max_residual() > 0) os << ", max residual " << format_number(r.max_residual());
  os << '\n';
  for (const auto& w : r.witnesses()) {
    os << "  " << w.rule << " at (";
    for (std::size_t i = 0; i < w.elements.size(); ++i) os << (i ? ", " : "") << w.elements[i];
    os << ")";
    if (!w.detail.empty()) os << ": " << w.detail;
    os << '\n';
  }
  for (const auto& n : r.notes()) os << "  note: " << n << '\n';
  return os.str();
}

Outcome from_report(const CheckReport& r) { return {r.to_json(), report_text(r), "", r.verdict() || r.informational()}; }

Strategy strategy_for(const CommandSpec& s, bool finite, std::size_t order) {
  if (s.exhaustive && finite) return Strategy::exhaustive();
  if (s.exhaustive) throw InputError("--exhaustive needs a finite model");
  if (s.samples) return Strategy::sampled(s.seed, *s.samples);
  if (finite) return default_finite_strategy(order, s.seed, 100000);
  return Strategy::sampled(s.seed, 10000);
}

LoadedModel need_model(const CommandSpec& s) {
  if (s.model.empty()) throw InputError("--model is required");
  return load_model(s.model);
}

ModelPtr need_finite(const CommandSpec& s) {
  LoadedModel m = need_model(s);
  if (!m.is_finite()) throw InputError("this subcommand needs a cayley model");
  return m.finite;
}

FinSubset need_set(const ModelPtr& m, const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string(flag) + " is required");
  return parse_set(m, text);
}

template <class Fn>
CheckReport on_analytic(const RadialModel& m, Fn&& fn) {
  if (m.kind == RadialModel::Kind::mobius) return fn(MobiusDisk<double>{});
  return fn(EinsteinBall<double>(to_double(m.c)));
}

Outcome cmd_check_axioms(const CommandSpec& s) {
  LoadedModel m = need_model(s);
  if (m.is_finite()) return from_report(check_axioms(*m.finite, strategy_for(s, true, m.finite->order())));
  const Strategy st = strategy_for(s, false, 0);
  return from_report(on_analytic(m.analytic, [&](const auto& model) { return check_axioms(model, st, s.tol); }));
}

Outcome cmd_check_identities(const CommandSpec& s) {
  LoadedModel m = need_model(s);
  if (m.is_finite())
    return from_report(check_identities(*m.finite, strategy_for(s, true, m.finite->order()), s.tol));
  const Strategy st = strategy_for(s, false, 0);
  return from_report(on_analytic(m.analytic, [&](const auto& model) { return check_identities(model, st, s.tol); }));
}

Outcome cmd_gyr_table(const CommandSpec& s) {
  LoadedModel m = need_model(s);
  Outcome o;
  if (!m.is_finite()) {
    if (m.analytic.kind != RadialModel::Kind::mobius || s.elements.size() != 2)
      throw InputError("gyr-table on an analytic model needs a mobius model and two --element values");
    const auto a = parse_complex(s.elements[0]);
    const auto b = parse_complex(s.elements[1]);
    require_in_disk(a);
    require_in_disk(b);
    const auto f = mobius_gyr_factor(a, b);
    o.doc = {{"v", 1}, {"kind", "gyr-factor"}, {"x", s.elements[0]}, {"y", s.elements[1]},
             {"factor", {{"re", to_string(f.re)}, {"im", to_string(f.im)}}}};
    o.text = "gyr[" + s.elements[0] + "; " + s.elements[1] + "] = multiplication by " + to_string(f.re) + " + " +
             to_string(f.im) + "i\n";
    o.csv = "re,im\n" + to_string(f.re) + "," + to_string(f.im) + "\n";
    return o;
  }
  const CayleyGyro& g = *m.finite;
  const std::size_t n = g.order();
  json rows = json::array();
  std::ostringstream text, csv;
  csv << "x,y,z,gyr\n";
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const auto p = g.gyr_permutation(x, y);
      bool trivial = true;
      for (Index z = 0; z < n; ++z) trivial = trivial && p[z] == z;
      if (trivial) continue;
      std::vector<std::string> image;
      text << "gyr[" << g.label(x) << "," << g.label(y) << "]:";
      for (Index z = 0; z < n; ++z) {
        image.push_back(g.label(p[z]));
        if (p[z] != z) text << ' ' << g.label(z) << "->" << g.label(p[z]);
        csv << g.label(x) << ',' << g.label(y) << ',' << g.label(z) << ',' << g.label(p[z]) << '\n';
      }
      text << '\n';
      rows.push_back({{"x", g.label(x)}, {"y", g.label(y)}, {"image", image}});
    }
  o.doc = {{"v", 1}, {"kind", "gyr-table"}, {"order", n}, {"labels", g.table().labels},
           {"nonidentity_count", rows.size()}, {"gyrations", rows}};
  o.text = rows.empty() ? "all gyrations are the identity\n" : text.str();
  o.csv = csv.str();
  return o;
}

json set_json(const FinSubset& s) {
  std::vector<std::string> labels;
  for (Index a : s.elements()) labels.push_back(s.gyrogroup().label(a));
  return labels;
}

Outcome cmd_generate(const CommandSpec& s) {
  LoadedModel m = need_model(s);
  Outcome o;
  if (!m.is_finite()) {
    if (s.radius.empty()) throw InputError("generate on an analytic model needs --radius");
    const RadialGenerated g = generate_invariant(RadialBall(m.analytic, parse_rational(s.radius)));
    json trace = json::array();
    for (const auto& r : g.trace) trace.push_back(to_string(r));
    o.doc = {{"v", 1}, {"kind", "generate"}, {"model", m.analytic.name()}, {"radius", s.radius},
             {"whole_carrier", g.whole_carrier}, {"trace", trace}};
    o.text = g.whole_carrier ? "generated subgyrogroup: whole carrier\n" : "generated subgyrogroup: {0}\n";
    return o;
  }
  const FinSubset U = need_set(m.finite, s.set, "--set");
  const Generated g = generate_invariant(U);
  json trace = json::array();
  for (const auto& t : g.trace) trace.push_back(set_json(t));
  const bool sub = bool(is_subgyrogroup(g.subgyrogroup));
  const bool inv = is_gyr_invariant(g.subgyrogroup);
  o.doc = {{"v", 1},           {"kind", "generate"},     {"input", set_json(U)},
           {"result", set_json(g.subgyrogroup)},         {"steps", g.steps()},
           {"trace", trace},   {"is_subgyrogroup", sub}, {"gyr_invariant", inv},
           {"input_gyr_invariant", is_gyr_invariant(U)}};
  o.text = "generated " + g.subgyrogroup.to_string() + " from " + U.to_string() + " in " + std::to_string(g.steps()) +
           " steps; subgyrogroup " + (sub ? "yes" : "no") + ", gyr-invariant " + (inv ? "yes" : "no") + "\n";
  return o;
}

Outcome cmd_subgyro_check(const CommandSpec& s) {
  const ModelPtr m = need_finite(s);
  const FinSubset H = need_set(m, s.set, "--set");
  CheckReport r("subgyro-check", Strategy::exhaustive());
  r.count_tuple();
  auto witness = [&](const Verdict& v) {
    std::vector<std::string> labels;
    for (Index a : v.witness) labels.push_back(m->label(a));
    return labels;
  };
  const Verdict sub = is_subgyrogroup(H);
  if (!sub) {
    r.add_violation({"subgyrogroup", witness(sub), sub.detail});
  } else {
    const Verdict L = is_L_subgyrogroup(H);
    if (!L) r.add_violation({"L-subgyrogroup", witness(L), L.detail});
  }
  r.add_note("set " + H.to_string() + (is_gyr_invariant(H) ? " is" : " is not") + " invariant under every gyration");
  return from_report(r);
}

std::string label_list(const FinSubset& s) { return s.to_string(); }

Outcome cmd_admissible(const CommandSpec& s) {
  if (s.chain.empty()) throw InputError("--chain is required");
  const ChainLevel level = parse_chain_level(s.level);
  LoadedChain chain = load_chain(s.chain);
  CheckReport r;
  if (auto* fc = std::get_if<FiniteChain>(&chain)) {
    std::optional<BaseFamily> base;
    if (!s.base.empty()) base = load_base(s.base, fc->model);
    r = validate_chain(*fc, level, base ? &*base : nullptr);
    if (r.verdict()) {
      r.add_note("certified at " + to_string(level) + " level");
      r.add_note("intersection H = " + label_list(chain_intersection(*fc)));
    }
  } else {
    const auto& rc = std::get<RadialChain>(chain);
    if (!s.base.empty()) throw InputError("--base applies to finite chains only");
    r = validate_chain(rc, level);
    if (r.verdict()) {
      r.add_note("certified at " + to_string(level) + " level");
      r.add_note("intersection H = " + chain_intersection(rc).to_string());
    }
  }
  return from_report(r);
}

Outcome cmd_neutral(const CommandSpec& s) {
  const ModelPtr m = need_finite(s);
  const FinSubset H = need_set(m, s.set.empty() ? s.h : s.set, "--set");
  if (s.base.empty()) throw InputError("--base is required");
  const BaseFamily base = load_base(s.base, m);
  CheckReport r("neutral", Strategy::exhaustive());
  r.count_tuple(base.sets.size());
  if (base.sets.empty()) {
    r.add_violation({"precondition", {}, "empty base"});
  } else if (!is_subgyrogroup(H) || !is_L_subgyrogroup(H)) {
    r.add_violation({"precondition", {H.to_string()}, "H is not an L-subgyrogroup"});
  } else {
    const Verdict v = is_neutral(H, base);
    if (!v) {
      std::vector<std::string> labels;
      for (Index a : v.witness) labels.push_back(m->label(a));
      r.add_violation({"no-admissible-V", labels, v.detail});
    }
    const Verdict mirrored = is_neutral_mirrored(H, base);
    r.add_note(std::string("mirrored form ") + (mirrored ? "holds" : "fails"));
  }
  return from_report(r);
}

template <class Chain>
Chain certify_for_metric(Chain chain, const std::string& level_text) {
  const ChainLevel level = parse_chain_level(level_text);
  return certify(std::move(chain), level);
}

Outcome cmd_prenorm(const CommandSpec& s) {
  if (s.chain.empty()) throw InputError("--chain is required");
  LoadedChain chain = load_chain(s.chain);
  Outcome o;
  if (auto* fc = std::get_if<FiniteChain>(&chain)) {
    FiniteChain c = certify_for_metric(*fc, s.level);
    const std::size_t depth = s.depth.value_or(default_depth(c));
    const FinitePrenorm N(build_dyadic(c, depth));
    const CayleyGyro& g = N.gyrogroup();
    const CheckReport audit = prenorm_audit(N);
    json values = json::array();
    std::ostringstream text, csv;
    csv << "element,N\n";
    std::vector<Index> which;
    for (const auto& e : s.elements) which.push_back(parse_element(g, e));
    if (which.empty())
      for (Index x = 0; x < g.order(); ++x) which.push_back(x);
    for (Index x : which) {
      values.push_back({{"element", g.label(x)}, {"N", N(x)}});
      text << "N(" << g.label(x) << ") = " << format_number(N(x)) << '\n';
      csv << g.label(x) << ',' << format_number(N(x)) << '\n';
    }
    o.doc = {{"v", 1},
             {"kind", "prenorm"},
             {"depth", depth},
             {"exact", N.family().exact()},
             {"resolution", N.family().resolution()},
             {"subgyrogroup", set_json(N.subgyrogroup())},
             {"values", values},
             {"reports", json::array({audit.to_json()})}};
    o.text = text.str() + report_text(audit);
    o.csv = csv.str();
    o.pass = audit.verdict();
    return o;
  }
  RadialChain c = certify_for_metric(std::get<RadialChain>(chain), s.level);
  const std::size_t depth = s.depth.value_or(default_depth(c));
  const RadialPrenorm N(build_dyadic(c, depth));
  const Strategy st = strategy_for(s, false, 0);
  const CheckReport audit =
      on_analytic(c.model, [&](const auto& model) { return prenorm_audit(N, model, st, s.tol); });
  json values = json::array();
  std::ostringstream text, csv;
  csv << "element,N\n";
  for (const auto& e : s.elements) {
    const Complex<Rational> x = parse_complex(e);
    const double v = c.model.kind == RadialModel::Kind::mobius
                         ? prenorm_eval(N, Complex<double>{to_double(x.re), to_double(x.im)})
                         : prenorm_eval(N, Vec3<double>{to_double(x.re), to_double(x.im), 0.0});
    values.push_back({{"element", e}, {"N", v}});
    text << "N(" << e << ") = " << format_number(v) << '\n';
    csv << '"' << e << "\"," << format_number(v) << '\n';
  }
  o.doc = {{"v", 1},
           {"kind", "prenorm"},
           {"depth", depth},
           {"exact", N.family().exact()},
           {"resolution", N.family().resolution()},
           {"values", values},
           {"reports", json::array({audit.to_json()})}};
  o.text = text.str() + report_text(audit);
  o.csv = csv.str();
  o.pass = audit.verdict();
  return o;
}

Outcome cmd_quotient(const CommandSpec& s) {
  if (s.chain.empty()) throw InputError("--chain is required");
  LoadedChain chain = load_chain(s.chain);
  auto* fc = std::get_if<FiniteChain>(&chain);
  if (!fc) throw InputError("quotient needs a finite chain");
  FiniteChain c = certify_for_metric(*fc, s.level);
  const std::size_t depth = s.depth.value_or(default_depth(c));
  FinitePrenorm N(build_dyadic(c, depth));
  CosetSpace space(chain_intersection(c));
  const QuotientMetric rho(space, N, parse_ground_metric(s.ground));
  const CayleyGyro& g = space.gyrogroup();

  std::vector<CheckReport> reports{rho.audit()};
  if (!s.elements.empty() || s.eps) {
    if (s.elements.size() != 1 || !s.eps) throw InputError("a ball query needs one --element and --eps");
    if (!(*s.eps > 0)) throw InputError("--eps must be positive");
    reports.push_back(ball_correspondence(rho, parse_element(g, s.elements[0]), *s.eps, rho.variant()));
  } else {
    reports.push_back(ball_correspondence_sweep(rho, GroundMetric::two_sided));
    reports.push_back(ball_correspondence_sweep(rho, GroundMetric::abs_printed));
  }

  Outcome o;
  std::ostringstream csv, text;
  csv << "coset_i,coset_j,rho\n";
  json cosets = json::array(), table = json::array();
  for (std::size_t p = 0; p < space.size(); ++p) {
    cosets.push_back({{"representative", g.label(space.representative(p))}, {"members", set_json(space.coset(p))}});
    json row = json::array();
    for (std::size_t q = 0; q < space.size(); ++q) {
      row.push_back(rho(p, q));
      csv << g.label(space.representative(p)) << ',' << g.label(space.representative(q)) << ','
          << format_number(rho(p, q)) << '\n';
    }
    table.push_back(std::move(row));
  }
  text << "H = " << space.subgyrogroup().to_string() << ", " << space.size() << " cosets\n";
  json docs = json::array();
  for (const auto& r : reports) {
    docs.push_back(r.to_json());
    text << report_text(r);
    o.pass = o.pass && (r.verdict() || r.informational());
  }
  o.doc = {{"v", 1},
           {"kind", "quotient"},
           {"depth", depth},
           {"ground", to_string(rho.variant())},
           {"subgyrogroup", set_json(space.subgyrogroup())},
           {"cosets", cosets},
           {"rho", table},
           {"reports", docs}};
  o.text = text.str();
  o.csv = csv.str();
  return o;
}

Outcome cmd_saturate(const CommandSpec& s) {
  const ModelPtr m = need_finite(s);
  const FinSubset A = need_set(m, s.set, "--set");
  const FinSubset U = need_set(m, s.u, "--U");
  const FinSubset H = need_set(m, s.h, "--H");
  if (s.base.empty()) throw InputError("--base is required");
  const BaseFamily base = load_base(s.base, m);
  const SaturationResult res = saturation_check(A, U, H, base);
  CheckReport r("saturation", Strategy::exhaustive());
  r.count_tuple();
  if (!res.preconditions_hold) {
    r.add_violation({"precondition", {}, res.precondition_failure});
  } else {
    for (Index rep : res.missed_cosets) r.add_violation({"missed-coset", {m->label(rep)}, "A ⊕ U misses this coset"});
  }
  return from_report(r);
}

Outcome cmd_char_inclusion(const CommandSpec& s) {
  const ModelPtr m = need_finite(s);
  return from_report(verify_char_inclusion(need_set(m, s.u, "--U"), need_set(m, s.w, "--W"),
                                           need_set(m, s.h, "--H")));
}

Outcome cmd_report(const CommandSpec& s) {
  std::vector<json> reports;
  for (const auto& path : s.inputs) {
    const json doc = read_json_file(path);
    auto take = [&](const json& r) {
      if (!r.is_object() || !r.contains("check") || !r.contains("verdict"))
        throw InputError(path + ": not a check report");
      reports.push_back(r);
    };
    if (doc.is_array()) {
      for (const auto& r : doc) take(r);
    } else if (doc.is_object() && doc.contains("reports")) {
      for (const auto& r : doc.at("reports")) take(r);
    } else {
      take(doc);
    }
  }
  Outcome o;
  o.doc = report_merge(reports);
  o.pass = o.doc.at("verdict") == "pass";
  std::ostringstream text;
  for (const auto& c : o.doc.at("checks"))
    text << c.at("check").get<std::string>() << ": " << c.at("verdict").get<std::string>() << '\n';
  text << "overall: " << o.doc.at("verdict").get<std::string>() << '\n';
  o.text = text.str();
  return o;
}

void add_common(CLI::App* sub, CommandSpec& s) {
  sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", s.out, "Write the artifact to this path");
}

void add_strategy(CLI::App* sub, CommandSpec& s) {
  sub->add_flag("--exhaustive", s.exhaustive, "Check every tuple (finite models)");
  sub->add_option("--samples", s.samples, "Number of seeded samples");
  sub->add_option("--seed", s.seed, "Seed for sampled sweeps");
  sub->add_option("--tol", s.tol, "Residual tolerance for floating models");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandSpec s;
  CLI::App app{"Gyrogroup models, invariant neighborhood chains and quotient metrics", "gyroctl"};
  app.require_subcommand(1);

  struct Entry {
    CLI::App* app;
    Outcome (*fn)(const CommandSpec&);
  };
  std::vector<Entry> entries;
  auto sub = [&](const char* name, const char* help, Outcome (*fn)(const CommandSpec&)) {
    CLI::App* a = app.add_subcommand(name, help);
    add_common(a, s);
    entries.push_back({a, fn});
    return a;
  };

  auto* a = sub("check-axioms", "Verify the gyrogroup axioms", cmd_check_axioms);
  a->add_option("--model", s.model)->required();
  add_strategy(a, s);

  a = sub("check-identities", "Verify the derived gyrogroup identities", cmd_check_identities);
  a->add_option("--model", s.model)->required();
  add_strategy(a, s);

  a = sub("gyr-table", "List the nonidentity gyrations", cmd_gyr_table);
  a->add_option("--model", s.model)->required();
  a->add_option("--element", s.elements, "Two disk elements \"re,im\" for a mobius gyration factor");

  a = sub("generate", "Generate the invariant subgyrogroup of a symmetric set", cmd_generate);
  a->add_option("--model", s.model)->required();
  a->add_option("--set", s.set, "Symmetric set \"i,j,k\"");
  a->add_option("--radius", s.radius, "Ball radius for analytic models");

  a = sub("subgyro-check", "Test the subgyrogroup and L-subgyrogroup properties", cmd_subgyro_check);
  a->add_option("--model", s.model)->required();
  a->add_option("--set", s.set)->required();

  a = sub("admissible", "Validate a neighborhood chain", cmd_admissible);
  a->add_option("--chain", s.chain)->required();
  a->add_option("--level", s.level, "double or triple")->capture_default_str();
  a->add_option("--base", s.base, "Strongly invariant base family");

  a = sub("neutral", "Test neutrality of H with respect to a base", cmd_neutral);
  a->add_option("--model", s.model)->required();
  a->add_option("--set", s.set, "The subgyrogroup H");
  a->add_option("--base", s.base)->required();

  a = sub("prenorm", "Evaluate and audit the prenorm of a chain", cmd_prenorm);
  a->add_option("--chain", s.chain)->required();
  a->add_option("--depth", s.depth, "Dyadic depth");
  a->add_option("--element", s.elements, "Element(s) to evaluate");
  a->add_option("--level", s.level, "Chain level to certify")->capture_default_str();
  add_strategy(a, s);

  a = sub("quotient", "Tabulate and audit the quotient metric", cmd_quotient);
  a->add_option("--chain", s.chain)->required();
  a->add_option("--depth", s.depth, "Dyadic depth");
  a->add_option("--element", s.elements, "Ball center for a single correspondence check");
  a->add_option("--eps", s.eps, "Ball radius for a single correspondence check");
  a->add_option("--ground", s.ground, "two_sided or abs_printed")
      ->check(CLI::IsMember({"two_sided", "abs_printed"}))
      ->capture_default_str();
  a->add_option("--level", s.level, "Chain level to certify")->capture_default_str();

  a = sub("saturate", "Check that A ⊕ U meets every coset of H", cmd_saturate);
  a->add_option("--model", s.model)->required();
  a->add_option("--set", s.set, "The set A")->required();
  a->add_option("--U", s.u, "Neighborhood U")->required();
  a->add_option("--H", s.h, "Subgyrogroup H")->required();
  a->add_option("--base", s.base)->required();

  a = sub("char-inclusion", "Verify (W⊕H)⊕⊖(W⊕H) ⊆ (U⊕U)⊕H", cmd_char_inclusion);
  a->add_option("--model", s.model)->required();
  a->add_option("--U", s.u)->required();
  a->add_option("--W", s.w)->required();
  a->add_option("--H", s.h)->required();

  a = sub("report", "Merge check reports into a summary", cmd_report);
  a->add_option("--in", s.inputs, "Report files")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  const Entry* chosen = nullptr;
  for (const auto& e : entries)
    if (e.app->parsed()) chosen = &e;

  Outcome o;
  try {
    o = chosen->fn(s);
  } catch (const std::exception& e) {
    err << "gyroctl " << chosen->app->get_name() << ": " << e.what() << '\n';
    return kExitInputError;
  }

  std::string format = s.format;
  if (format.empty()) format = fs::path(s.out).extension() == ".csv" ? "csv" : "json";
  std::string artifact;
  if (format == "json") {
    artifact = o.doc.dump(2) + "\n";
  } else if (format == "csv") {
    if (o.csv.empty()) {
      err << "gyroctl " << chosen->app->get_name() << ": no csv rendering for this subcommand\n";
      return kExitInputError;
    }
    artifact = o.csv;
  } else {
    artifact = o.text;
  }
  if (s.out.empty()) {
    out << artifact;
  } else {
    std::ofstream f(s.out, std::ios::binary);
    if (!f || !(f << artifact)) {
      err << "gyroctl: cannot write " << s.out << '\n';
      return kExitInputError;
    }
  }
  return o.pass ? kExitPass : kExitCheckFailed;
}

}  // namespace gyro::cli
