#include "gyro/fin_subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace gyro {

FinSubset::FinSubset(ModelPtr model) : model_(std::move(model)) {
  if (!model_) throw std::invalid_argument("subset needs a model");
  bits_.assign(model_->order(), 0);
}

FinSubset::FinSubset(ModelPtr model, const std::vector<Index>& members) : FinSubset(std::move(model)) {
  for (Index a : members) insert(a);
}

FinSubset FinSubset::whole(ModelPtr model) {
  FinSubset s(std::move(model));
  s.bits_.assign(s.bits_.size(), 1);
  return s;
}

FinSubset FinSubset::identity_only(ModelPtr model) {
  FinSubset s(model);
  s.insert(model->identity());
  return s;
}

void FinSubset::out_of_carrier(Index a) const {
  throw std::out_of_range("element index " + std::to_string(a) + " outside carrier of order " +
                          std::to_string(bits_.size()));
}

void FinSubset::erase(Index a) {
  if (a < bits_.size()) bits_[a] = 0;
}

std::size_t FinSubset::size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

std::vector<Index> FinSubset::elements() const {
  std::vector<Index> out;
  out.reserve(bits_.size());
  for (Index a = 0; a < bits_.size(); ++a)
    if (bits_[a]) out.push_back(a);
  return out;
}

void FinSubset::require_same_model(const FinSubset& o) const {
  if (model_ != o.model_) throw std::invalid_argument("subsets belong to different models");
}

FinSubset FinSubset::operator|(const FinSubset& o) const {
  require_same_model(o);
  FinSubset r = *this;
  for (Index a = 0; a < bits_.size(); ++a)
    if (o.bits_[a]) r.bits_[a] = 1;
  return r;
}

FinSubset FinSubset::operator&(const FinSubset& o) const {
  require_same_model(o);
  FinSubset r = *this;
  for (Index a = 0; a < bits_.size(); ++a)
    if (!o.bits_[a]) r.bits_[a] = 0;
  return r;
}

std::string FinSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Index a : elements()) {
    if (!first) s += ",";
    s += model_->label(a);
    first = false;
  }
  return s + "}";
}

FinSubset set_oplus(const FinSubset& A, const FinSubset& B) {
  if (A.model() != B.model()) throw std::invalid_argument("subsets belong to different models");
  const auto& g = A.gyrogroup();
  FinSubset r(A.model());
  const auto bs = B.elements();
  for (Index a : A.elements())
    for (Index b : bs) r.insert(g.add(a, b));
  return r;
}

FinSubset set_neg(const FinSubset& A) {
  FinSubset r(A.model());
  for (Index a : A.elements()) r.insert(A.gyrogroup().neg(a));
  return r;
}

FinSubset gyr_image(Index x, Index y, const FinSubset& A) {
  const auto& g = A.gyrogroup();
  if (x >= g.order() || y >= g.order()) throw std::out_of_range("gyration argument outside carrier");
  FinSubset r(A.model());
  for (Index a : A.elements()) r.insert(g.gyr(x, y, a));
  return r;
}

FinSubset left_translate(Index x, const FinSubset& A) {
  FinSubset r(A.model());
  for (Index a : A.elements()) r.insert(A.gyrogroup().add(x, a));
  return r;
}

bool is_subset(const FinSubset& A, const FinSubset& B) {
  if (A.model() != B.model()) throw std::invalid_argument("subsets belong to different models");
  for (Index a : A.elements())
    if (!B.contains(a)) return false;
  return true;
}

bool is_symmetric_neighborhood(const FinSubset& A) {
  return A.contains(A.gyrogroup().identity()) && set_neg(A) == A;
}

bool is_gyr_invariant(const FinSubset& A) {
  // Gyrations are bijections, so mapping A into itself is enough.
  for (const auto& perm : A.gyrogroup().gyrations())
    for (Index a : A.elements())
      if (!A.contains(perm[a])) return false;
  return true;
}

std::vector<FinSubset> all_symmetric_sets(const ModelPtr& model) {
  const auto& g = *model;
  std::vector<std::vector<Index>> orbits;
  std::vector<bool> done(g.order());
  done[g.identity()] = true;
  for (Index a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    std::vector<Index> orbit{a};
    done[a] = true;
    if (!done[g.neg(a)]) {
      orbit.push_back(g.neg(a));
      done[g.neg(a)] = true;
    }
    orbits.push_back(orbit);
  }
  if (orbits.size() > 24) throw std::length_error("too many symmetric subsets to enumerate");
  std::vector<FinSubset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << orbits.size()); ++mask) {
    FinSubset s = FinSubset::identity_only(model);
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (mask & (std::size_t{1} << i))
        for (Index a : orbits[i]) s.insert(a);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace gyro
