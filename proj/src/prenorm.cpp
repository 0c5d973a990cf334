#include "gyro/prenorm.hpp"

namespace gyro {

namespace detail {

std::string excess_witness(const FinSubset& a, const FinSubset& b) {
  for (Index x : a.elements())
    if (!b.contains(x)) return a.gyrogroup().label(x);
  return "?";
}

std::string excess_witness(const RadialBall& a, const RadialBall& b) {
  return "|x| = " + to_string(a.radius()) + " (" + a.to_string() + " vs " + b.to_string() + ")";
}

}  // namespace detail

namespace {

FinSubset closure_under(const FinSubset& tail, FinSubset s) {
  for (;;) {
    FinSubset next = s | set_oplus(tail, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

}  // namespace

FinitePrenorm::FinitePrenorm(PrenormFamily<FiniteChain> family)
    : family_(std::move(family)), h_(chain_intersection(family_.chain())) {
  const auto& g = gyrogroup();
  const auto& finest = family_.finest();
  table_.assign(g.order(), 1.0);

  if (family_.exact()) {
    const FinSubset& tail = family_.chain().at(family_.chain().tail_start());
    // p = 0: only deep dyadics, i.e. the T-closure of {0}.
    FinSubset deep = closure_under(tail, FinSubset::identity_only(model()));
    for (Index x : deep.elements()) table_[x] = 0.0;
    for (std::uint64_t m = 1; m <= finest.size(); ++m) {
      FinSubset reach = closure_under(tail, finest[m - 1]);
      const double q = family_.dyadic(m);
      for (Index x : reach.elements()) table_[x] = std::min(table_[x], q);
    }
  } else {
    for (std::uint64_t m = finest.size(); m >= 1; --m) {
      const double q = family_.dyadic(m);
      for (Index x : finest[m - 1].elements()) table_[x] = q;
    }
    for (Index x : h_.elements()) table_[x] = 0.0;
  }
}

double RadialPrenorm::of_norm(double norm) const {
  const auto& finest = family_.finest();
  // The family is monotone, so the first containing ball gives the infimum.
  std::size_t lo = 0, hi = finest.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (finest[mid].contains_norm(norm)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == finest.size()) return 1.0;
  // H lies in every V(q), so its points have infimum 0 at any depth.
  if (chain_intersection(family_.chain()).contains_norm(norm)) return 0.0;
  return family_.dyadic(lo + 1);
}

CheckReport prenorm_audit(const FinitePrenorm& N) {
  CheckReport r("prenorm", Strategy::exhaustive());
  const auto& g = N.gyrogroup();
  const std::size_t n = g.order();
  const FinSubset& H = N.subgyrogroup();
  const auto& chain = N.family().chain();
  for (const auto& u : chain.sets)
    if (!is_gyr_invariant(u)) {
      r.add_note("chain is not strongly gyration-invariant; item (iii) may fail");
      break;
    }
  if (!N.family().exact()) r.add_note("prenorm is an upper bound within " + format_number(N.family().resolution()));

  auto L = [&](Index a) { return g.label(a); };
  for (Index x = 0; x < n; ++x) {
    r.count_tuple(n * n);
    if (N(g.neg(x)) != N(x)) r.add_violation({"i-symmetric", {L(x)}, ""});
    for (Index y = 0; y < n; ++y) {
      if (N(g.add(x, y)) > N(x) + N(y))
        r.add_violation({"ii-subadditive", {L(x), L(y)},
                         format_number(N(g.add(x, y))) + " > " + format_number(N(x) + N(y))});
      for (Index z = 0; z < n; ++z)
        if (N(g.gyr(x, y, z)) != N(z)) r.add_violation({"iii-gyr-invariant", {L(x), L(y), L(z)}, ""});
    }
    for (Index h : H.elements())
      if (N(g.add(x, h)) != N(x)) r.add_violation({"iv-coset-invariant", {L(x), L(h)}, ""});
    if ((N(x) == 0.0) != H.contains(x)) r.add_violation({"vi-kernel", {L(x)}, "N=" + format_number(N(x))});
  }
  for (std::size_t k = 0; k <= N.family().depth(); ++k) {
    const FinSubset& uk = chain.at(k);
    const double level = std::ldexp(1.0, -static_cast<int>(k));
    for (Index x = 0; x < n; ++x) {
      if (N(x) < level && !uk.contains(x))
        r.add_violation({"v-sandwich-lower", {std::to_string(k), L(x)}, "N<2^-n but outside Un"});
      if (uk.contains(x) && N(x) > 2 * level)
        r.add_violation({"v-sandwich-upper", {std::to_string(k), L(x)}, "in Un but N>2^(1-n)"});
    }
  }
  return r;
}

}  // namespace gyro
