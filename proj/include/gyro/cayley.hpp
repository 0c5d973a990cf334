#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gyro {

using Index = std::size_t;

/// Raw, unvalidated operation table. The axiom checker accepts these
/// directly so that broken tables can be diagnosed instead of rejected.
struct CayleyTable {
  std::size_t order = 0;
  std::vector<std::string> labels;
  std::vector<Index> op;  // row-major: op[a * order + b] = a ⊕ b

  // Optional declared gyrations, gyr[x][y](z) at ((x * n) + y) * n + z.
  std::optional<std::vector<Index>> declared_gyr;

  Index at(Index a, Index b) const { return op[a * order + b]; }
  Index& at(Index a, Index b) { return op[a * order + b]; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
};

/// Raised when a table cannot serve as a gyrogroup model at all
/// (structure broken before any axiom can be evaluated).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite gyrogroup given by its Cayley table. Construction validates
/// the Latin-square structure, the identity and two-sided inverses; the
/// gyroassociative and loop laws are left to check_axioms.
class CayleyGyro {
 public:
  using element_type = Index;

  static CayleyGyro from_table(CayleyTable table);

  std::size_t order() const { return table_.order; }
  Index identity() const { return identity_; }
  Index add(Index a, Index b) const { return table_.at(a, b); }
  Index neg(Index a) const { return neg_[a]; }

  /// Unique x with a ⊕ x = target (left cancellation).
  Index left_solve(Index a, Index target) const { return left_div_[a * order() + target]; }

  /// gyr[x,y](z): the declared value when a gyration table was supplied,
  /// otherwise the derived one.
  Index gyr(Index x, Index y, Index z) const;

  /// The unique w with (x ⊕ y) ⊕ w = x ⊕ (y ⊕ z).
  Index derived_gyr(Index x, Index y, Index z) const {
    return left_solve(add(x, y), add(x, add(y, z)));
  }

  bool has_declared_gyr() const { return table_.declared_gyr.has_value(); }
  std::vector<Index> gyr_permutation(Index x, Index y) const;
  bool has_nonidentity_gyration() const;
  /// The distinct permutations z ↦ gyr[x,y](z), sorted.
  const std::vector<std::vector<Index>>& gyrations() const { return gyrations_; }

  const std::string& label(Index a) const { return table_.labels[a]; }
  std::optional<Index> find_label(const std::string& label) const;
  const CayleyTable& table() const { return table_; }

  friend bool operator==(const CayleyGyro& a, const CayleyGyro& b) { return a.table_ == b.table_; }

 private:
  CayleyTable table_;
  Index identity_ = 0;
  std::vector<Index> neg_;
  std::vector<Index> left_div_;
  std::vector<std::vector<Index>> gyrations_;
};

// Builders for the bundled fixtures and for tests.

CayleyTable cyclic_table(std::size_t n);

/// Table of a permutation group given by its (closed) element list, with
/// composition (p ∘ q)(i) = p(q(i)). The identity permutation must be present.
CayleyTable permutation_group_table(const std::vector<std::vector<Index>>& elements);

/// Componentwise product; gyrations are componentwise as well.
CayleyTable direct_product(const CayleyGyro& a, const CayleyGyro& b);

/// Declares every gyration trivial (the group adapter).
CayleyTable with_identity_gyrations(CayleyTable table);

}  // namespace gyro
