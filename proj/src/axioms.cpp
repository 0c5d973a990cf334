#include "gyro/axioms.hpp"

#include <optional>

namespace gyro {

namespace {

std::string label_of(const CayleyTable& t, Index a) {
  return a < t.labels.size() ? t.labels[a] : std::to_string(a);
}

// Left-division data for a raw table: for each (row, target) the number
// of solutions and one of them.
struct LeftDivision {
  std::size_t n;
  std::vector<std::uint32_t> count;
  std::vector<Index> solution;

  explicit LeftDivision(const CayleyTable& t) : n(t.order), count(n * n, 0), solution(n * n, 0) {
    for (Index a = 0; a < n; ++a)
      for (Index x = 0; x < n; ++x) {
        Index v = t.at(a, x);
        ++count[a * n + v];
        solution[a * n + v] = x;
      }
  }
};

class AxiomSweep {
 public:
  AxiomSweep(const CayleyTable& t, CheckReport& r) : t_(t), r_(r), n_(t.order), div_(t) {}

  void run(const Strategy& s) {
    check_identity();
    check_inverses();
    if (s.is_exhaustive()) {
      for (Index x = 0; x < n_; ++x)
        for (Index y = 0; y < n_; ++y) check_pair(x, y);
    } else {
      Rng rng(s.seed);
      for (std::size_t k = 0; k < s.count; ++k) {
        Index x = uniform_index(rng, n_), y = uniform_index(rng, n_);
        Index z = uniform_index(rng, n_), w = uniform_index(rng, n_);
        check_tuple(x, y, z, w);
      }
    }
  }

 private:
  std::string L(Index a) const { return label_of(t_, a); }

  void violation(const char* rule, std::initializer_list<Index> elems, std::string detail) {
    Witness w{rule, {}, std::move(detail)};
    for (Index e : elems) w.elements.push_back(L(e));
    r_.add_violation(std::move(w));
  }

  void check_identity() {
    std::vector<Index> candidates;
    for (Index e = 0; e < n_; ++e) {
      bool ok = true;
      for (Index a = 0; a < n_ && ok; ++a) ok = t_.at(e, a) == a && t_.at(a, e) == a;
      if (ok) candidates.push_back(e);
    }
    r_.count_tuple(n_);
    if (candidates.size() == 1) {
      identity_ = candidates.front();
      return;
    }
    if (candidates.empty()) {
      // Point at the first failure of every left identity candidate.
      Witness w{"G1", {}, "no two-sided identity"};
      for (Index e = 0; e < n_; ++e) {
        bool left = true;
        for (Index a = 0; a < n_ && left; ++a) left = t_.at(e, a) == a;
        if (left) w.elements.push_back(L(e));
      }
      r_.add_violation(std::move(w));
    } else {
      Witness w{"G1", {}, "identity is not unique"};
      for (Index e : candidates) w.elements.push_back(L(e));
      r_.add_violation(std::move(w));
    }
  }

  void check_inverses() {
    if (!identity_) {
      r_.add_note("G2 skipped: no unique identity");
      return;
    }
    const Index e = *identity_;
    for (Index a = 0; a < n_; ++a) {
      std::size_t count = 0;
      for (Index x = 0; x < n_; ++x)
        if (t_.at(x, a) == e && t_.at(a, x) == e) ++count;
      r_.count_tuple();
      if (count != 1)
        violation("G2", {a}, std::to_string(count) + " two-sided inverses");
    }
  }

  std::optional<Index> derived(Index x, Index y, Index z) const {
    Index row = t_.at(x, y);
    Index target = t_.at(x, t_.at(y, z));
    if (div_.count[row * n_ + target] != 1) return std::nullopt;
    return div_.solution[row * n_ + target];
  }

  std::optional<Index> declared(Index x, Index y, Index z) const {
    if (!t_.declared_gyr) return std::nullopt;
    return (*t_.declared_gyr)[(x * n_ + y) * n_ + z];
  }

  // Effective gyration: declared when present, otherwise derived.
  std::optional<Index> gyr(Index x, Index y, Index z) const {
    if (t_.declared_gyr) return declared(x, y, z);
    return derived(x, y, z);
  }

  void check_solvable(Index x, Index y, Index z) {
    Index row = t_.at(x, y);
    Index target = t_.at(x, t_.at(y, z));
    auto c = div_.count[row * n_ + target];
    if (c != 1)
      violation("G3-solve", {x, y, z},
                std::to_string(c) + " solutions w of (x⊕y)⊕w = x⊕(y⊕z)");
  }

  void check_declared(Index x, Index y, Index z) {
    if (!t_.declared_gyr) return;
    Index g = *declared(x, y, z);
    if (t_.at(t_.at(x, y), g) != t_.at(x, t_.at(y, z)))
      violation("G3-law", {x, y, z}, "declared gyration fails (x⊕y)⊕gyr[x,y]z = x⊕(y⊕z)");
    auto d = derived(x, y, z);
    if (d && *d != g)
      violation("gyr-declared-derived", {x, y, z}, "declared " + L(g) + " derived " + L(*d));
  }

  void check_pair(Index x, Index y) {
    std::vector<Index> perm(n_);
    bool complete = true;
    for (Index z = 0; z < n_; ++z) {
      r_.count_tuple();
      check_solvable(x, y, z);
      check_declared(x, y, z);
      auto g = gyr(x, y, z);
      if (!g) {
        complete = false;
        continue;
      }
      perm[z] = *g;
      auto g4 = gyr(t_.at(x, y), y, z);
      if (g4 && *g4 != *g)
        violation("G4", {x, y, z}, "gyr[x⊕y,y](z)=" + L(*g4) + " but gyr[x,y](z)=" + L(*g));
    }
    if (!complete) return;
    std::vector<bool> seen(n_);
    for (Index z = 0; z < n_; ++z) {
      if (seen[perm[z]]) {
        violation("G3-bijection", {x, y, z}, "gyr[x,y] repeats " + L(perm[z]));
        break;
      }
      seen[perm[z]] = true;
    }
    for (Index z = 0; z < n_; ++z)
      for (Index w = 0; w < n_; ++w) {
        r_.count_tuple();
        if (perm[t_.at(z, w)] != t_.at(perm[z], perm[w]))
          violation("G3-automorphism", {x, y, z, w}, "gyr[x,y](z⊕w) ≠ gyr[x,y]z ⊕ gyr[x,y]w");
      }
  }

  void check_tuple(Index x, Index y, Index z, Index w) {
    r_.count_tuple();
    check_solvable(x, y, z);
    check_declared(x, y, z);
    auto gz = gyr(x, y, z), gw = gyr(x, y, w), gzw = gyr(x, y, t_.at(z, w));
    if (gz && gw && gzw && *gzw != t_.at(*gz, *gw))
      violation("G3-automorphism", {x, y, z, w}, "gyr[x,y](z⊕w) ≠ gyr[x,y]z ⊕ gyr[x,y]w");
    if (gz && gw && z != w && *gz == *gw)
      violation("G3-bijection", {x, y, z, w}, "gyr[x,y] identifies two elements");
    auto g4 = gyr(t_.at(x, y), y, z);
    if (gz && g4 && *g4 != *gz)
      violation("G4", {x, y, z}, "gyr[x⊕y,y](z)=" + L(*g4) + " but gyr[x,y](z)=" + L(*gz));
  }

  const CayleyTable& t_;
  CheckReport& r_;
  std::size_t n_;
  LeftDivision div_;
  std::optional<Index> identity_;
};

}  // namespace

CheckReport check_axioms(const CayleyTable& table, const Strategy& strategy) {
  CheckReport r("axioms", strategy, 0.0);
  const std::size_t n = table.order;
  if (n == 0 || table.op.size() != n * n) {
    r.add_violation({"structure", {}, "operation table is not n×n"});
    return r;
  }
  for (Index v : table.op)
    if (v >= n) {
      r.add_violation({"structure", {}, "entry " + std::to_string(v) + " out of range"});
      return r;
    }
  if (table.declared_gyr) {
    bool ok = table.declared_gyr->size() == n * n * n;
    for (Index v : *table.declared_gyr) ok = ok && v < n;
    if (!ok) {
      r.add_violation({"structure", {}, "declared gyration table malformed"});
      return r;
    }
  }
  AxiomSweep(table, r).run(strategy);
  return r;
}

CheckReport check_axioms(const CayleyGyro& model, const Strategy& strategy) {
  return check_axioms(model.table(), strategy);
}

Strategy default_finite_strategy(std::size_t order, std::uint64_t seed, std::size_t samples) {
  if (order <= 32) return Strategy::exhaustive();
  return Strategy::sampled(seed, samples);
}

}  // namespace gyro
