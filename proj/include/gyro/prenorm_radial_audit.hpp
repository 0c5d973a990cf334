#pragma once

// Implementation of the sampled radial prenorm audit (included by prenorm.hpp).

namespace gyro {

namespace detail {

template <class Model>
typename Model::element_type radial_sample(const Model& model, Rng& rng, double scale) {
  // Mix: uniform in [0, 1.25·scale], log-uniform down to 1e-4·scale, and
  // exactly 0 now and then.
  double u = unit_interval(rng);
  double radius;
  if (u < 0.05) {
    radius = 0.0;
  } else if (u < 0.55) {
    radius = 1.25 * scale * unit_interval(rng);
  } else {
    radius = scale * std::pow(10.0, -4.0 * unit_interval(rng));
  }
  radius = std::min(radius, 0.999 * model.bound());
  auto dir = model.sample(rng, 1.0);
  double len = abs(dir);
  if (len == 0.0) return model.identity();
  return (radius / len) * dir;
}

}  // namespace detail

template <class Model>
CheckReport prenorm_audit(const RadialPrenorm& N, const Model& model, const Strategy& strategy,
                          double tolerance) {
  if (strategy.is_exhaustive()) throw std::invalid_argument("radial prenorm audit is sampled only");
  CheckReport r("prenorm", strategy, tolerance);
  const auto& family = N.family();
  const RadialBall h = chain_intersection(family.chain());
  // Spread samples over the first proper ball; a whole-carrier U₀ says nothing about scale.
  const RadialBall u0 = family.chain().at(0);
  const double scale = to_double(u0.is_whole() ? family.chain().at(1).radius() * 2 : u0.radius());
  Rng rng(strategy.seed);
  using E = typename Model::element_type;
  auto n_of = [&](const E& x) { return N.of_norm(abs(x)); };
  // N is a step function of the norm, so rounding can move a point across a
  // ball boundary. A value counts as matching when it lies between N at the
  // norm shifted down and up by the tolerance.
  auto off_band = [&](double value, double norm) {
    const double lo = N.of_norm(std::max(0.0, norm - tolerance));
    const double hi = N.of_norm(norm + tolerance);
    return value < lo ? lo - value : value > hi ? value - hi : 0.0;
  };
  auto ctx = [&](const char* rule, std::initializer_list<const E*> es) {
    Witness w{rule, {}, ""};
    for (auto* e : es) w.elements.push_back(describe(model, *e));
    return w;
  };
  for (std::size_t k = 0; k < strategy.count; ++k) {
    const E x = detail::radial_sample(model, rng, scale);
    const E y = detail::radial_sample(model, rng, scale);
    const E z = detail::radial_sample(model, rng, scale);
    r.count_tuple();
    const double nx = n_of(x);
    r.observe_residual(off_band(n_of(model.neg(x)), abs(x)), ctx("i-symmetric", {&x}));
    const double sum_low = N.of_norm(std::max(0.0, abs(model.add(x, y)) - tolerance));
    r.observe_residual(std::max(0.0, sum_low - N.of_norm(abs(x) + tolerance) - N.of_norm(abs(y) + tolerance)),
                       ctx("ii-subadditive", {&x, &y}));
    r.observe_residual(off_band(n_of(model.gyr(x, y, z)), abs(z)), ctx("iii-gyr-invariant", {&x, &y, &z}));
    // H is a centered ball here; sample h inside it (only 0 when H = {0}).
    E hv = model.identity();
    if (h.radius() > 0) hv = (0.5 * to_double(h.radius()) / std::max(abs(y), 1e-300)) * y;
    r.observe_residual(off_band(n_of(model.add(x, hv)), abs(x)), ctx("iv-coset-invariant", {&x, &hv}));
    for (std::size_t n = 0; n <= family.depth(); ++n) {
      const RadialBall un = family.chain().at(n);
      const double level = std::ldexp(1.0, -static_cast<int>(n));
      if (nx < level && !un.contains_norm(abs(x)))
        r.add_violation(ctx("v-sandwich-lower", {&x}));
      if (un.contains_norm(abs(x)))
        r.observe_residual(std::max(0.0, nx - 2 * level), ctx("v-sandwich-upper", {&x}));
    }
    const bool in_h = h.contains_norm(abs(x));
    if ((nx == 0.0) != in_h) r.add_violation(ctx("vi-kernel", {&x}));
  }
  if (!family.exact())
    r.add_note("prenorm is an upper bound within " + format_number(family.resolution()));
  return r;
}

}  // namespace gyro
