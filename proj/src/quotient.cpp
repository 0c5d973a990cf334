#include "gyro/quotient.hpp"

#include <algorithm>
#include <set>

namespace gyro {

CosetSpace::CosetSpace(FinSubset H) : h_(std::move(H)) {
  if (h_.empty() || !is_subgyrogroup(h_) || !is_L_subgyrogroup(h_))
    throw std::invalid_argument("coset space needs an L-subgyrogroup, got " + h_.to_string());
  const auto& g = gyrogroup();
  const std::size_t n = g.order();
  projection_.assign(n, n);
  for (Index a = 0; a < n; ++a) {
    if (projection_[a] != n) continue;
    FinSubset c = left_translate(a, h_);
    for (Index x : c.elements()) {
      if (projection_[x] != n)
        throw std::invalid_argument("cosets of " + h_.to_string() + " overlap at " + g.label(x));
      projection_[x] = representatives_.size();
    }
    representatives_.push_back(a);
    cosets_.push_back(std::move(c));
  }
  // Certify: π(a) = π(b) iff b ∈ a ⊕ H.
  for (Index a = 0; a < n; ++a) {
    FinSubset c = left_translate(a, h_);
    for (Index b = 0; b < n; ++b)
      if ((projection_[a] == projection_[b]) != c.contains(b))
        throw std::invalid_argument("left cosets of " + h_.to_string() + " do not partition the carrier");
  }
}

FinSubset CosetSpace::preimage(const std::vector<std::size_t>& cosets) const {
  FinSubset out(model());
  for (std::size_t c : cosets) out = out | cosets_.at(c);
  return out;
}

std::string to_string(GroundMetric m) { return m == GroundMetric::two_sided ? "two_sided" : "abs_printed"; }

GroundMetric parse_ground_metric(const std::string& text) {
  if (text == "two_sided") return GroundMetric::two_sided;
  if (text == "abs_printed") return GroundMetric::abs_printed;
  throw std::invalid_argument("unknown ground metric \"" + text + "\"");
}

QuotientMetric::QuotientMetric(CosetSpace space, FinitePrenorm prenorm, GroundMetric variant)
    : space_(std::move(space)), prenorm_(std::move(prenorm)), variant_(variant) {
  if (!(space_.subgyrogroup() == prenorm_.subgyrogroup()))
    throw std::invalid_argument("prenorm kernel " + prenorm_.subgyrogroup().to_string() +
                                " differs from coset subgyrogroup " + space_.subgyrogroup().to_string());
  const std::size_t k = space_.size();
  table_.resize(k * k);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      table_[p * k + q] = from_elements(space_.representative(p), space_.representative(q));
}

double QuotientMetric::from_elements(Index x, Index y) const {
  const auto& g = space_.gyrogroup();
  return prenorm_(g.add(g.neg(x), y)) + prenorm_(g.add(g.neg(y), x));
}

double QuotientMetric::ground(Index x, Index y, GroundMetric m) const {
  if (m == GroundMetric::two_sided) return from_elements(x, y);
  return std::abs(prenorm_(x) - prenorm_(y));
}

CheckReport QuotientMetric::audit() const {
  CheckReport r("quotient-metric", Strategy::exhaustive());
  const auto& g = space_.gyrogroup();
  const auto& N = prenorm_;
  const std::size_t n = g.order();
  auto L = [&](Index a) { return g.label(a); };
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      r.count_tuple();
      const std::size_t px = space_.project(x), py = space_.project(y);
      const double rho = (*this)(px, py);
      if (from_elements(x, y) != rho)
        r.add_violation({"representative-independence", {L(x), L(y)},
                         format_number(from_elements(x, y)) + " vs canonical " + format_number(rho)});
      if (rho != (*this)(py, px)) r.add_violation({"symmetry", {L(x), L(y)}, ""});
      if ((rho == 0.0) != (px == py)) r.add_violation({"identity-of-indiscernibles", {L(x), L(y)}, format_number(rho)});
      const Index nx = g.neg(x);
      for (Index z = 0; z < n; ++z) {
        const double via = (*this)(px, space_.project(z)) + (*this)(space_.project(z), py);
        if (rho > via)
          r.add_violation({"triangle", {L(x), L(y), L(z)}, format_number(rho) + " > " + format_number(via)});
        // ⊖x⊕y = (⊖x⊕z) ⊕ gyr[⊖x,z](⊖z⊕y), then subadditivity and gyr-invariance.
        const Index direct = g.add(nx, y);
        const Index a = g.add(nx, z);
        const Index b = g.gyr(nx, z, g.add(g.neg(z), y));
        if (g.add(a, b) != direct)
          r.add_violation({"gyrotriangle-expansion", {L(x), L(y), L(z)}, ""});
        if (N(direct) > N(a) + N(b) || N(b) != N(g.add(g.neg(z), y)))
          r.add_violation({"gyrotriangle-bound", {L(x), L(y), L(z)}, ""});
      }
    }
  return r;
}

FinSubset ground_ball(const QuotientMetric& metric, Index x, double eps, GroundMetric variant) {
  FinSubset out(metric.space().model());
  for (Index y = 0; y < metric.space().gyrogroup().order(); ++y)
    if (metric.ground(y, x, variant) < eps) out.insert(y);
  return out;
}

FinSubset quotient_ball_preimage(const QuotientMetric& metric, Index x, double eps) {
  const std::size_t px = metric.space().project(x);
  std::vector<std::size_t> inside;
  for (std::size_t q = 0; q < metric.space().size(); ++q)
    if (metric(q, px) < eps) inside.push_back(q);
  return metric.space().preimage(inside);
}

CheckReport ball_correspondence(const QuotientMetric& metric, Index x, double eps, GroundMetric variant) {
  CheckReport r("ball-correspondence-" + to_string(variant), Strategy::exhaustive());
  if (variant == GroundMetric::abs_printed) r.set_informational(true);
  const auto& g = metric.space().gyrogroup();
  FinSubset lhs = ground_ball(metric, x, eps, variant);
  FinSubset rhs = quotient_ball_preimage(metric, x, eps);
  r.count_tuple();
  if (!(lhs == rhs)) {
    r.add_violation({variant == GroundMetric::two_sided ? "ball-mismatch" : "counterexample",
                     {g.label(x), format_number(eps)},
                     "B(x,eps)=" + lhs.to_string() + " but preimage of B*=" + rhs.to_string()});
  }
  return r;
}

CheckReport ball_correspondence_sweep(const QuotientMetric& metric, GroundMetric variant) {
  CheckReport r("ball-correspondence-" + to_string(variant), Strategy::exhaustive());
  if (variant == GroundMetric::abs_printed) r.set_informational(true);
  const std::size_t k = metric.space().size();
  std::set<double> values;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) values.insert(metric(p, q));
  for (Index x = 0; x < metric.space().gyrogroup().order(); ++x)
    for (Index y = 0; y < metric.space().gyrogroup().order(); ++y) values.insert(metric.ground(x, y, variant));
  std::vector<double> eps(values.begin(), values.end());
  const std::size_t distinct = eps.size();
  for (std::size_t i = 0; i + 1 < distinct; ++i) eps.push_back(0.5 * (eps[i] + eps[i + 1]));
  eps.push_back(eps[distinct - 1] + 1.0);
  std::sort(eps.begin(), eps.end());
  for (Index x = 0; x < metric.space().gyrogroup().order(); ++x)
    for (double e : eps) {
      if (e <= 0.0) continue;
      r.absorb(ball_correspondence(metric, x, e, variant));
    }
  return r;
}

}  // namespace gyro
