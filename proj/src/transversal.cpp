#include "gyro/transversal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gyro/axioms.hpp"

namespace gyro {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

Permutation from_cycles(const std::vector<std::vector<Index>>& cycles, std::size_t degree) {
  Permutation r(degree);
  std::iota(r.begin(), r.end(), Index{0});
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) r[c[k]] = c[(k + 1) % c.size()];
  return r;
}

std::vector<Permutation> generated_group(const std::vector<Permutation>& generators, std::size_t degree) {
  Permutation e(degree);
  std::iota(e.begin(), e.end(), Index{0});
  std::set<Permutation> seen{e};
  std::vector<Permutation> frontier{e};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : generators) {
        Permutation h = compose(g, s);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::optional<CayleyTable> transversal_gyrogroup(const std::vector<Permutation>& group,
                                                 const std::vector<Permutation>& subgroup) {
  if (group.empty() || subgroup.empty()) return std::nullopt;
  const std::size_t degree = group.front().size();
  Permutation e(degree);
  std::iota(e.begin(), e.end(), Index{0});
  const std::set<Permutation> H(subgroup.begin(), subgroup.end());

  std::vector<std::vector<Permutation>> cosets;
  std::set<Permutation> covered;
  std::vector<Permutation> sorted_group = group;
  std::sort(sorted_group.begin(), sorted_group.end());
  for (const auto& g : sorted_group) {
    if (covered.count(g)) continue;
    std::vector<Permutation> c;
    for (const auto& h : subgroup) c.push_back(compose(g, h));
    std::sort(c.begin(), c.end());
    covered.insert(c.begin(), c.end());
    cosets.push_back(std::move(c));
  }
  std::vector<std::vector<Permutation>> others;
  for (auto& c : cosets)
    if (!std::binary_search(c.begin(), c.end(), e)) others.push_back(c);

  const std::size_t k = others.size() + 1;
  std::vector<std::size_t> pick(others.size(), 0);
  for (;;) {
    std::vector<Permutation> T{e};
    for (std::size_t i = 0; i < others.size(); ++i) T.push_back(others[i][pick[i]]);
    std::map<Permutation, Index> index;
    for (Index i = 0; i < k; ++i) index[T[i]] = i;

    bool ok = std::all_of(T.begin(), T.end(), [&](const Permutation& t) { return index.count(inverse(t)) > 0; });
    for (const auto& h : subgroup)
      for (const auto& t : T)
        if (ok && !index.count(compose(compose(h, t), inverse(h)))) ok = false;

    if (ok) {
      CayleyTable table;
      table.order = k;
      table.op.resize(k * k);
      for (Index a = 0; a < k && ok; ++a) {
        table.labels.push_back(std::to_string(a));
        for (Index b = 0; b < k && ok; ++b) {
          const Permutation ab = compose(T[a], T[b]);
          std::size_t hits = 0;
          for (Index d = 0; d < k; ++d)
            if (H.count(compose(inverse(T[d]), ab))) {
              table.at(a, b) = d;
              ++hits;
            }
          ok = hits == 1;
        }
      }
      if (ok) {
        try {
          const CayleyGyro g = CayleyGyro::from_table(table);
          if (check_axioms(g, Strategy::exhaustive()).verdict() && g.has_nonidentity_gyration()) return table;
        } catch (const ModelError&) {
        }
      }
    }
    std::size_t i = others.size();
    while (i > 0) {
      --i;
      if (++pick[i] < others[i].size()) break;
      pick[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (others.empty()) return std::nullopt;
  }
}

}  // namespace gyro
