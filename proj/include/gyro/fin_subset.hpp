#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gyro/cayley.hpp"

namespace gyro {

using ModelPtr = std::shared_ptr<const CayleyGyro>;

/// A subset of a finite carrier, stored as membership flags over element
/// indices. Binary operations require both operands to share one model.
class FinSubset {
 public:
  FinSubset() = default;
  explicit FinSubset(ModelPtr model);
  FinSubset(ModelPtr model, const std::vector<Index>& members);

  static FinSubset whole(ModelPtr model);
  static FinSubset identity_only(ModelPtr model);

  const ModelPtr& model() const { return model_; }
  const CayleyGyro& gyrogroup() const { return *model_; }
  std::size_t universe() const { return bits_.size(); }

  bool contains(Index a) const { return a < bits_.size() && bits_[a]; }
  void insert(Index a) {
    if (a >= bits_.size()) out_of_carrier(a);
    bits_[a] = 1;
  }
  void erase(Index a);
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<Index> elements() const;

  FinSubset operator|(const FinSubset& o) const;
  FinSubset operator&(const FinSubset& o) const;

  friend bool operator==(const FinSubset& a, const FinSubset& b) {
    return a.model_ == b.model_ && a.bits_ == b.bits_;
  }

  /// "{0,1,7}" using model labels.
  std::string to_string() const;

 private:
  void require_same_model(const FinSubset& o) const;

  ModelPtr model_;
  [[noreturn]] void out_of_carrier(Index a) const;
  std::vector<unsigned char> bits_;  // 0 or 1 per element
};

/// {a ⊕ b : a ∈ A, b ∈ B}
FinSubset set_oplus(const FinSubset& A, const FinSubset& B);
/// {⊖a : a ∈ A}
FinSubset set_neg(const FinSubset& A);
/// {gyr[x,y](a) : a ∈ A}
FinSubset gyr_image(Index x, Index y, const FinSubset& A);
/// x ⊕ A
FinSubset left_translate(Index x, const FinSubset& A);

bool is_subset(const FinSubset& A, const FinSubset& B);

/// 0 ∈ A and ⊖A = A.
bool is_symmetric_neighborhood(const FinSubset& A);

/// gyr[x,y](A) = A for every x, y in the carrier.
bool is_gyr_invariant(const FinSubset& A);

/// Every subset containing 0 with ⊖A = A, built from the ⊖-orbits.
/// The count is 2^(#orbits − 1), so callers keep orders small.
std::vector<FinSubset> all_symmetric_sets(const ModelPtr& model);

}  // namespace gyro
