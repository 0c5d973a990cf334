#pragma once

// Independent reference computations used as test oracles. Nothing here
// calls into the library's algebra: tables are read raw and every quantity
// is recomputed by brute force or from closed forms.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <fstream>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace oracle {

inline std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(GYRO_FIXTURE_DIR) / name; }

using Table = std::vector<std::vector<std::size_t>>;
using Set = std::set<std::size_t>;

/// The "op" rows of a fixture document, read without the library.
inline Table raw_table(const std::string& name) {
  std::ifstream in(fixture(name));
  return nlohmann::json::parse(in).at("op").get<Table>();
}

inline std::size_t identity(const Table& t) {
  for (std::size_t e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < t.size(); ++a) ok = ok && t[e][a] == a && t[a][e] == a;
    if (ok) return e;
  }
  return t.size();
}

inline std::size_t neg(const Table& t, std::size_t a) {
  const std::size_t e = identity(t);
  for (std::size_t b = 0; b < t.size(); ++b)
    if (t[b][a] == e) return b;
  return t.size();
}

/// The w with (x⊕y)⊕w = x⊕(y⊕z), found by scanning.
inline std::size_t gyr(const Table& t, std::size_t x, std::size_t y, std::size_t z) {
  const std::size_t target = t[x][t[y][z]];
  for (std::size_t w = 0; w < t.size(); ++w)
    if (t[t[x][y]][w] == target) return w;
  return t.size();
}

inline Set oplus(const Table& t, const Set& a, const Set& b) {
  Set out;
  for (auto x : a)
    for (auto y : b) out.insert(t[x][y]);
  return out;
}

inline Set negate(const Table& t, const Set& a) {
  Set out;
  for (auto x : a) out.insert(neg(t, x));
  return out;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Set all(const Table& t) {
  Set s;
  for (std::size_t a = 0; a < t.size(); ++a) s.insert(a);
  return s;
}

inline bool invariant(const Table& t, const Set& a) {
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) {
      Set img;
      for (auto z : a) img.insert(gyr(t, x, y, z));
      if (img != a) return false;
    }
  return true;
}

/// V(m/2ⁿ) straight from the recursive definition, memoized on (n, m) in
/// lowest terms. `chain(k)` yields Uₖ.
template <class ChainFn>
Set dyadic_set(const Table& t, ChainFn chain, std::size_t n, std::uint64_t m, std::map<std::pair<std::size_t, std::uint64_t>, Set>& memo) {
  while (n > 0 && m % 2 == 0) {
    m /= 2;
    --n;
  }
  if (m > (std::uint64_t{1} << n)) return all(t);
  auto key = std::make_pair(n, m);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Set v;
  if (n == 0) {
    v = chain(0);
  } else if (m == 1) {
    v = chain(n);
  } else {
    v = oplus(t, chain(n), dyadic_set(t, chain, n - 1, (m - 1) / 2, memo));
  }
  memo[key] = v;
  return v;
}

/// min{m/2^D : x ∈ V(m/2^D)} scanned at depth D, or 1 when x lies in no
/// stored set. An upper bound for the infimum that tightens with D.
template <class ChainFn>
std::vector<double> prenorm_scan(const Table& t, ChainFn chain, std::size_t depth) {
  std::map<std::pair<std::size_t, std::uint64_t>, Set> memo;
  std::vector<double> n(t.size(), 1.0);
  const std::uint64_t top = std::uint64_t{1} << depth;
  for (std::uint64_t m = top; m >= 1; --m) {
    for (auto x : dyadic_set(t, chain, depth, m, memo)) n[x] = static_cast<double>(m) / static_cast<double>(top);
  }
  return n;
}

// Möbius addition on exact pairs (re, im): (a + b) / (1 + ā b).
struct Q2 {
  mpq_class re, im;
};

inline Q2 mul(const Q2& a, const Q2& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Q2 conj(const Q2& a) { return {a.re, -a.im}; }
inline Q2 div(const Q2& a, const Q2& b) {
  const mpq_class d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Q2 mobius(const Q2& a, const Q2& b) {
  const Q2 num{a.re + b.re, a.im + b.im};
  const Q2 ab = mul(conj(a), b);
  return div(num, {1 + ab.re, ab.im});
}

}  // namespace oracle
