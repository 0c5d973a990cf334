#include <doctest.h>

#include "gyro/io.hpp"
#include "gyro/model_traits.hpp"
#include "gyro/radial.hpp"
#include "oracles.hpp"

using namespace gyro;

namespace {

ModelPtr load(const std::string& name) {
  return std::make_shared<const CayleyGyro>(table_load(read_json_file(oracle::fixture(name))));
}

oracle::Set raw(const FinSubset& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

std::vector<FinSubset> all_subsets(const ModelPtr& m) {
  std::vector<FinSubset> out;
  for (unsigned mask = 0; mask < (1u << m->order()); ++mask) {
    FinSubset s(m);
    for (Index i = 0; i < m->order(); ++i)
      if (mask >> i & 1u) s.insert(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("set sums on Z6 and Z8") {
  const auto z6 = load("z6.json");
  const auto z8 = load("z8.json");
  CHECK(set_oplus(FinSubset(z6, {0, 3}), FinSubset(z6, {0, 3})) == FinSubset(z6, {0, 3}));
  CHECK(set_oplus(FinSubset(z6, {0, 1, 5}), FinSubset(z6, {0, 1, 5})) == FinSubset(z6, {0, 1, 2, 4, 5}));
  CHECK(set_oplus(FinSubset(z8, {0, 1, 7}), FinSubset(z8, {0, 1, 7})) == FinSubset(z8, {0, 1, 2, 6, 7}));
  CHECK(is_subset(FinSubset(z8, {0, 1, 7}), FinSubset(z8, {0, 1, 2, 6, 7})));
  CHECK_FALSE(is_subset(FinSubset(z8, {0, 3}), FinSubset(z8, {0, 1, 7})));
  CHECK(set_neg(FinSubset(z8, {0, 1, 2})) == FinSubset(z8, {0, 6, 7}));
  CHECK(FinSubset(z8, {0, 1, 7}).to_string() == "{0,1,7}");
}

TEST_CASE("set sums agree with a brute-force oracle on the order-8 gyrogroup") {
  const auto g = load("gyro8.json");
  const auto t = oracle::raw_table("gyro8.json");
  const auto subsets = all_subsets(g);
  for (std::size_t i = 0; i < subsets.size(); i += 7)
    for (std::size_t j = 0; j < subsets.size(); j += 5)
      REQUIRE(raw(set_oplus(subsets[i], subsets[j])) == oracle::oplus(t, raw(subsets[i]), raw(subsets[j])));
}

TEST_CASE("set sums distribute over unions exhaustively on small models") {
  for (const char* name : {"z4.json", "klein4.json", "s3.json"}) {
    CAPTURE(name);
    const auto m = load(name);
    const auto subsets = all_subsets(m);
    for (const auto& a : subsets)
      for (const auto& a2 : subsets)
        for (const auto& b : subsets) {
          REQUIRE(set_oplus(a | a2, b) == (set_oplus(a, b) | set_oplus(a2, b)));
          REQUIRE(set_oplus(b, a | a2) == (set_oplus(b, a) | set_oplus(b, a2)));
        }
  }
}

TEST_CASE("gyration images keep cardinality and negation is an involution") {
  for (const char* name : {"gyro8.json", "s3.json", "z6.json"}) {
    CAPTURE(name);
    const auto m = load(name);
    for (const auto& a : all_subsets(m)) {
      REQUIRE(set_neg(set_neg(a)) == a);
      for (Index x = 0; x < m->order(); ++x)
        for (Index y = 0; y < m->order(); ++y) REQUIRE(gyr_image(x, y, a).size() == a.size());
    }
  }
}

TEST_CASE("gyration invariance against the oracle") {
  const auto g = load("gyro8.json");
  const auto t = oracle::raw_table("gyro8.json");
  for (const auto& a : all_subsets(g)) REQUIRE(is_gyr_invariant(a) == oracle::invariant(t, raw(a)));
}

TEST_CASE("symmetric sets are enumerated from negation orbits") {
  const auto g = load("gyro8.json");
  const auto t = oracle::raw_table("gyro8.json");
  std::size_t expected = 0;
  for (const auto& a : all_subsets(g)) {
    const auto r = raw(a);
    if (r.count(0) && oracle::negate(t, r) == r) ++expected;
  }
  const auto syms = all_symmetric_sets(g);
  CHECK(syms.size() == expected);
  for (const auto& s : syms) CHECK(is_symmetric_neighborhood(s));
}

TEST_CASE("sets over different models do not mix") {
  const auto a = load("z6.json");
  const auto b = load("z6.json");
  CHECK_THROWS_AS(set_oplus(FinSubset(a, {0}), FinSubset(b, {0})), std::invalid_argument);
}

TEST_CASE("radial composition") {
  const RadialModel mob = RadialModel::mobius();
  CHECK(radial_oplus(Rational(1, 2), Rational(1, 2)) == Rational(4, 5));
  CHECK(radial_oplus(0, Rational(1, 3)) == Rational(1, 3));
  CHECK(radial_oplus(Rational(1, 16), Rational(1, 4)) == Rational(4, 13));
  const Rational r = Rational(1, 16);
  CHECK(to_double(radial_oplus(r, radial_oplus(r, r))) == doctest::Approx(0.186).epsilon(1e-3));
  const Rational s = Rational(9, 100);
  CHECK(to_double(radial_oplus(s, radial_oplus(s, s))) == doctest::Approx(0.26).epsilon(1e-2));
  CHECK_THROWS_AS(radial_oplus(Rational(3, 2), 0), std::domain_error);
  const RadialModel ein = RadialModel::einstein(2);
  CHECK(radial_oplus(1, 1, ein) == Rational(8, 5));
  CHECK(set_oplus(RadialBall(mob, Rational(1, 2)), RadialBall(mob, Rational(1, 2))).radius() == Rational(4, 5));
  CHECK_FALSE(set_oplus(RadialBall(mob, Rational(1, 2)), RadialBall(mob, Rational(1, 2), false)).closed());
}

TEST_CASE("radial inclusion compares radii and flags") {
  const RadialModel mob = RadialModel::mobius();
  CHECK_FALSE(is_subset(RadialBall(mob, Rational(3, 10)), RadialBall(mob, Rational(2, 10))));
  CHECK(is_subset(RadialBall(mob, Rational(2, 10)), RadialBall(mob, Rational(3, 10))));
  CHECK_FALSE(is_subset(RadialBall(mob, Rational(3, 10)), RadialBall(mob, Rational(3, 10), false)));
  CHECK(is_subset(RadialBall(mob, Rational(3, 10), false), RadialBall(mob, Rational(3, 10))));
  CHECK(is_subset(RadialBall(mob, Rational(9, 10)), RadialBall::whole(mob)));
  CHECK_THROWS_AS(RadialBall(mob, 0, false), std::domain_error);
  CHECK_THROWS_AS(RadialBall(mob, 1, true), std::domain_error);
}

TEST_CASE("sampled elements of two balls add into the composed ball") {
  Rng rng(5);
  const MobiusDisk<double> disk;
  const EinsteinBall<double> ball(1.0);
  for (int k = 0; k < 10000; ++k) {
    const double r = 0.95 * unit_interval(rng), s = 0.95 * unit_interval(rng);
    const double bound = to_double(radial_oplus(Rational(r), Rational(s)));
    const auto x = disk.sample(rng, r), y = disk.sample(rng, s);
    REQUIRE(abs(disk.add(x, y)) <= bound + 1e-12);
    const auto u = ball.sample(rng, r), v = ball.sample(rng, s);
    REQUIRE(abs(ball.add(u, v)) <= bound + 1e-12);
  }
}
