#include "gyro/cayley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gyro {

CayleyGyro CayleyGyro::from_table(CayleyTable table) {
  const std::size_t n = table.order;
  if (n == 0) throw ModelError("table has order 0");
  if (table.op.size() != n * n)
    throw ModelError("operation table has " + std::to_string(table.op.size()) +
                     " entries, expected " + std::to_string(n * n));
  if (table.labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) table.labels.push_back(std::to_string(i));
  }
  if (table.labels.size() != n) throw ModelError("label count does not match order");
  {
    auto sorted = table.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ModelError("duplicate labels");
  }
  for (Index v : table.op)
    if (v >= n) throw ModelError("table entry " + std::to_string(v) + " out of range");

  for (Index a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n), col_seen(n);
    for (Index b = 0; b < n; ++b) {
      Index r = table.at(a, b);
      if (row_seen[r])
        throw ModelError("latin-square violation: row " + table.labels[a] + " repeats " +
                         table.labels[r]);
      row_seen[r] = true;
      Index c = table.at(b, a);
      if (col_seen[c])
        throw ModelError("latin-square violation: column " + table.labels[a] + " repeats " +
                         table.labels[c]);
      col_seen[c] = true;
    }
  }

  std::optional<Index> identity;
  for (Index e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = table.at(e, a) == a && table.at(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw ModelError("missing two-sided identity");

  CayleyGyro g;
  g.identity_ = *identity;
  g.neg_.assign(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index x = 0; x < n; ++x) {
      if (table.at(x, a) == *identity) g.neg_[a] = x;
    }
    if (g.neg_[a] == n || table.at(a, g.neg_[a]) != *identity)
      throw ModelError("no unique two-sided inverse for " + table.labels[a]);
  }

  g.left_div_.assign(n * n, 0);
  for (Index a = 0; a < n; ++a)
    for (Index x = 0; x < n; ++x) g.left_div_[a * n + table.at(a, x)] = x;

  if (table.declared_gyr) {
    if (table.declared_gyr->size() != n * n * n)
      throw ModelError("declared gyration table has the wrong size");
    for (Index v : *table.declared_gyr)
      if (v >= n) throw ModelError("declared gyration entry out of range");
  }

  g.table_ = std::move(table);
  std::set<std::vector<Index>> perms;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) perms.insert(g.gyr_permutation(x, y));
  g.gyrations_.assign(perms.begin(), perms.end());
  return g;
}

Index CayleyGyro::gyr(Index x, Index y, Index z) const {
  if (table_.declared_gyr) {
    const std::size_t n = order();
    return (*table_.declared_gyr)[(x * n + y) * n + z];
  }
  return derived_gyr(x, y, z);
}

std::vector<Index> CayleyGyro::gyr_permutation(Index x, Index y) const {
  std::vector<Index> perm(order());
  for (Index z = 0; z < order(); ++z) perm[z] = gyr(x, y, z);
  return perm;
}

bool CayleyGyro::has_nonidentity_gyration() const {
  const std::size_t n = order();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (gyr(x, y, z) != z) return true;
  return false;
}

std::optional<Index> CayleyGyro::find_label(const std::string& label) const {
  auto it = std::find(table_.labels.begin(), table_.labels.end(), label);
  if (it == table_.labels.end()) return std::nullopt;
  return static_cast<Index>(it - table_.labels.begin());
}

CayleyTable cyclic_table(std::size_t n) {
  CayleyTable t;
  t.order = n;
  t.op.resize(n * n);
  for (Index a = 0; a < n; ++a) {
    t.labels.push_back(std::to_string(a));
    for (Index b = 0; b < n; ++b) t.at(a, b) = (a + b) % n;
  }
  return t;
}

CayleyTable permutation_group_table(const std::vector<std::vector<Index>>& elements) {
  const std::size_t n = elements.size();
  std::map<std::vector<Index>, Index> index_of;
  for (Index i = 0; i < n; ++i) index_of.emplace(elements[i], i);
  if (index_of.size() != n) throw ModelError("duplicate permutations");

  CayleyTable t;
  t.order = n;
  t.op.resize(n * n);
  for (Index a = 0; a < n; ++a) {
    t.labels.push_back(std::to_string(a));
    for (Index b = 0; b < n; ++b) {
      const auto& p = elements[a];
      const auto& q = elements[b];
      std::vector<Index> pq(q.size());
      for (Index i = 0; i < q.size(); ++i) pq[i] = p[q[i]];
      auto it = index_of.find(pq);
      if (it == index_of.end()) throw ModelError("permutation list is not closed");
      t.at(a, b) = it->second;
    }
  }
  return t;
}

CayleyTable direct_product(const CayleyGyro& a, const CayleyGyro& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  auto pack = [nb](Index i, Index j) { return i * nb + j; };
  CayleyTable t;
  t.order = n;
  t.op.resize(n * n);
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < nb; ++j) t.labels.push_back(a.label(i) + "." + b.label(j));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      t.at(x, y) = pack(a.add(x / nb, y / nb), b.add(x % nb, y % nb));
  return t;
}

CayleyTable with_identity_gyrations(CayleyTable table) {
  const std::size_t n = table.order;
  std::vector<Index> gyr(n * n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    std::iota(gyr.begin() + static_cast<std::ptrdiff_t>(i * n),
              gyr.begin() + static_cast<std::ptrdiff_t>((i + 1) * n), Index{0});
  table.declared_gyr = std::move(gyr);
  return table;
}

}  // namespace gyro
