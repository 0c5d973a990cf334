#pragma once

#include <optional>
#include <vector>

#include "gyro/cayley.hpp"

namespace gyro {

using Permutation = std::vector<Index>;

/// (p ∘ q)(i) = p(q(i))
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// The closure of the generators under composition, sorted lexicographically.
std::vector<Permutation> generated_group(const std::vector<Permutation>& generators, std::size_t degree);

/// Permutation of `degree` points from disjoint cycles, e.g. {{0,1,2,3}}.
Permutation from_cycles(const std::vector<std::vector<Index>>& cycles, std::size_t degree);

/// Searches left transversals T of the subgroup H in G that contain the
/// identity, are closed under inverses and under conjugation by H, and
/// turn a ⊕ b := (the t ∈ T with ab ∈ tH) into a gyrogroup with a
/// nonidentity gyration. Transversals are tried in lexicographic order over
/// the cosets of G (cosets ordered by least element); the first hit is
/// returned. Labels are "0".."k-1" in transversal order.
std::optional<CayleyTable> transversal_gyrogroup(const std::vector<Permutation>& group,
                                                 const std::vector<Permutation>& subgroup);

}  // namespace gyro
