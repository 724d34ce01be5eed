#pragma once

#include <optional>

#include "tuttecover/bigint.hpp"
#include "tuttecover/morphism.hpp"

namespace tuttecover {

/// Searches for a ground bijection identifying the basis families.
/// Returns a witnessing morphism a → b, or nothing.
///
/// The search assigns elements one at a time, pruning on per-element
/// basis-membership degrees and pairwise co-occurrence counts, which
/// keeps n ≤ 10 instant in practice.
std::optional<MatroidMorphism> are_isomorphic(const Matroid& a, const Matroid& b);

/// Number of ground bijections of m onto itself preserving independence
/// both ways, by plain enumeration of all permutations.
BigInt automorphism_count(const Matroid& m, std::size_t enumeration_bound = 8);

}  // namespace tuttecover
