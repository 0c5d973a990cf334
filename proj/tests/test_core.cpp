#include <doctest.h>

#include "gyro/axioms.hpp"
#include "gyro/io.hpp"
#include "oracles.hpp"

using namespace gyro;

namespace {

CayleyGyro fixture_model(const std::string& name) { return table_load(read_json_file(oracle::fixture(name))); }

const char* kTables[] = {"z4.json", "z6.json", "z8.json", "klein4.json", "s3.json", "gyro8.json", "gyro16.json"};

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("4/2")) == "2");
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(Rational(16, 25)) == Rational(4, 5));
  CHECK_FALSE(exact_sqrt(Rational(1, 2)).has_value());
  CHECK_FALSE(exact_sqrt(Rational(-1)).has_value());
}

TEST_CASE("exact complex arithmetic") {
  using C = Complex<Rational>;
  const C i{0, 1};
  CHECK(i * i == C{-1, 0});
  CHECK(C{1, 1} / C{1, -1} == i);
  CHECK_THROWS_AS((C{1, 0} / C{0, 0}), std::domain_error);
}

TEST_CASE("check report bookkeeping") {
  CheckReport r("demo", Strategy::sampled(7, 10), 1e-9);
  CHECK(r.verdict());
  r.observe_residual(1e-12, {"law", {"a"}, ""});
  CHECK(r.verdict());
  for (int k = 0; k < 100; ++k) r.add_violation({"law", {std::to_string(k)}, ""});
  CHECK(r.violation_count() == 100);
  CHECK(r.witnesses().size() == CheckReport::kMaxStoredWitnesses);
  CHECK_FALSE(r.verdict());
  const auto j = r.to_json();
  CHECK(j.at("v") == 1);
  CHECK(j.at("verdict") == "fail");
  CHECK(j.at("strategy").at("seed") == 7);
  CHECK(j.at("violation_count") == 100);
}

TEST_CASE("a nan residual counts as a violation") {
  CheckReport r("nan", Strategy::exhaustive(), 1e-9);
  r.observe_residual(std::nan(""), {"law", {}, ""});
  CHECK_FALSE(r.verdict());
}

TEST_CASE("report merge") {
  SUBCASE("empty list passes") {
    const auto s = report_merge(std::vector<CheckReport>{});
    CHECK(s.at("verdict") == "pass");
    CHECK(s.at("checks").empty());
  }
  SUBCASE("one failing report fails and is named") {
    CheckReport ok("b-ok", Strategy::exhaustive());
    CheckReport bad("a-bad", Strategy::exhaustive());
    bad.add_violation({"x", {}, ""});
    const auto s = report_merge(std::vector<CheckReport>{ok, bad});
    CHECK(s.at("verdict") == "fail");
    CHECK(s.at("failing") == nlohmann::json::array({"a-bad"}));
    CHECK(s.at("checks")[0].at("check") == "a-bad");
  }
  SUBCASE("informational failures do not fail the summary") {
    CheckReport info("info", Strategy::exhaustive());
    info.set_informational(true);
    info.add_violation({"counterexample", {}, ""});
    CHECK(report_merge(std::vector<CheckReport>{info}).at("verdict") == "pass");
  }
  SUBCASE("counts are sums") {
    std::vector<CheckReport> rs;
    std::size_t tuples = 0, violations = 0;
    for (const char* name : kTables) {
      rs.push_back(check_axioms(fixture_model(name)));
      tuples += rs.back().tuples_checked();
      violations += rs.back().violation_count();
    }
    const auto s = report_merge(rs);
    CHECK(s.at("tuples_checked") == tuples);
    CHECK(s.at("violation_count") == violations);
    CHECK(s.at("reports") == rs.size());
  }
}

TEST_CASE("cayley construction rejects broken tables") {
  SUBCASE("duplicated row entry") {
    CayleyTable t = cyclic_table(4);
    t.at(1, 2) = t.at(1, 3);
    CHECK_THROWS_WITH_AS(CayleyGyro::from_table(t), doctest::Contains("latin-square"), ModelError);
  }
  SUBCASE("no identity") {
    CayleyTable t;
    t.order = 3;
    t.op = {0, 2, 1, 2, 1, 0, 1, 0, 2};
    CHECK_THROWS_WITH_AS(CayleyGyro::from_table(t), doctest::Contains("identity"), ModelError);
  }
  SUBCASE("entry out of range") {
    CayleyTable t = cyclic_table(3);
    t.op[4] = 9;
    CHECK_THROWS_AS(CayleyGyro::from_table(t), ModelError);
  }
  SUBCASE("wrong size") {
    CayleyTable t = cyclic_table(3);
    t.op.pop_back();
    CHECK_THROWS_AS(CayleyGyro::from_table(t), ModelError);
  }
}

TEST_CASE("identity need not be index 0") {
  CayleyTable t;
  t.order = 3;
  // Z3 relabelled so that element 2 is the identity.
  t.op = {1, 2, 0, 2, 0, 1, 0, 1, 2};
  const auto g = CayleyGyro::from_table(t);
  CHECK(g.identity() == 2);
  CHECK(g.neg(0) == 1);
  CHECK(check_axioms(g).verdict());
}

TEST_CASE("derived gyrations agree with a scanning oracle") {
  for (const char* name : kTables) {
    CAPTURE(name);
    const auto g = fixture_model(name);
    const auto raw = oracle::raw_table(name);
    for (Index x = 0; x < g.order(); ++x)
      for (Index y = 0; y < g.order(); ++y)
        for (Index z = 0; z < g.order(); ++z) REQUIRE(g.gyr(x, y, z) == oracle::gyr(raw, x, y, z));
  }
}

TEST_CASE("bundled tables satisfy the axioms and identities exhaustively") {
  for (const char* name : kTables) {
    CAPTURE(name);
    const auto g = fixture_model(name);
    CHECK(check_axioms(g, Strategy::exhaustive()).verdict());
    CHECK(check_identities(g, Strategy::exhaustive()).verdict());
  }
}

TEST_CASE("the order-8 and order-16 fixtures have nonidentity gyrations") {
  CHECK(fixture_model("gyro8.json").has_nonidentity_gyration());
  CHECK(fixture_model("gyro16.json").has_nonidentity_gyration());
  CHECK_FALSE(fixture_model("s3.json").has_nonidentity_gyration());
}

TEST_CASE("the gyro8 fixture is not a group") {
  const auto raw = oracle::raw_table("gyro8.json");
  bool associative = true;
  for (std::size_t a = 0; a < raw.size(); ++a)
    for (std::size_t b = 0; b < raw.size(); ++b)
      for (std::size_t c = 0; c < raw.size(); ++c) associative = associative && raw[raw[a][b]][c] == raw[a][raw[b][c]];
  CHECK_FALSE(associative);
}

TEST_CASE("single-entry swaps in a gyrogroup table are detected with a witness") {
  const CayleyTable base = fixture_model("gyro8.json").table();
  std::size_t mutations = 0;
  for (Index a = 1; a < base.order; ++a)
    for (Index b = 1; b < base.order; ++b)
      for (Index c = b + 1; c < base.order; ++c) {
        // Swapping two entries of one row keeps the row a permutation.
        CayleyTable t = base;
        std::swap(t.at(a, b), t.at(a, c));
        const auto r = check_axioms(t, Strategy::exhaustive());
        ++mutations;
        REQUIRE_FALSE(r.verdict());
        REQUIRE_FALSE(r.witnesses().empty());
      }
  CHECK(mutations == 7 * 21);
}

TEST_CASE("overwriting one entry breaks the latin square and is reported") {
  CayleyTable t = cyclic_table(6);
  t.at(2, 3) = 0;
  const auto r = check_axioms(t, Strategy::exhaustive());
  CHECK_FALSE(r.verdict());
  CHECK(r.violation_count() > 0);
}

TEST_CASE("a wrong declared gyration table is caught") {
  CayleyTable t = with_identity_gyrations(fixture_model("gyro8.json").table());
  const auto r = check_axioms(t, Strategy::exhaustive());
  CHECK_FALSE(r.verdict());
}

TEST_CASE("the group adapter passes on groups") {
  const auto z2 = CayleyGyro::from_table(cyclic_table(2));
  const auto k4 = CayleyGyro::from_table(with_identity_gyrations(direct_product(z2, z2)));
  CHECK(k4.has_declared_gyr());
  CHECK(check_axioms(k4).verdict());
}

TEST_CASE("sampled sweeps are reproducible from the seed") {
  const auto g = fixture_model("gyro16.json");
  const auto a = check_axioms(g, Strategy::sampled(42, 500)).to_json();
  const auto b = check_axioms(g, Strategy::sampled(42, 500)).to_json();
  CHECK(a == b);
  CHECK(default_finite_strategy(16).is_exhaustive());
  CHECK_FALSE(default_finite_strategy(64).is_exhaustive());
}
