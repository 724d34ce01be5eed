#pragma once

#include <map>
#include <vector>

#include "tuttecover/dctree.hpp"
#include "tuttecover/morphism.hpp"
#include "tuttecover/pivot.hpp"

namespace tuttecover {

/// A family of morphisms into one matroid, certified by a
/// deletion-contraction tree: leg i is the inclusion of the i-th leaf
/// (depth-first order) into the root.
class TutteCovering {
public:
    TutteCovering(Matroid target, std::vector<MatroidMorphism> legs, DCTree witness);

    const Matroid& target() const { return target_; }
    const std::vector<MatroidMorphism>& legs() const { return legs_; }
    const DCTree& witness() const { return witness_; }

    bool operator==(const TutteCovering&) const = default;

private:
    Matroid target_;
    std::vector<MatroidMorphism> legs_;
    DCTree witness_;
};

/// Validates the tree, then composes the step inclusions along each
/// leaf-to-root path into the legs.
TutteCovering covering_from_tree(const DCTree& t);

struct CoverValidation {
    bool ok = true;
    std::vector<std::string> problems;

    explicit operator bool() const { return ok; }
};

/// Checks the witness tree and that every leg is the path composite it
/// claims to be.
CoverValidation validate_covering(const TutteCovering& c);

/// Expands leaves (depth-first, strategy-chosen pivots) until every leaf
/// matroid is indecomposable, then reads the covering off the tree.
TutteCovering indecomposable_covering(const Matroid& m,
                                      PivotStrategy strategy = PivotStrategy::min_index());

/// Class → multiplicity over the leg sources.
std::map<IndecomposableClass, std::size_t> leaf_class_multiset(const TutteCovering& c);

/// Records that fine leg i factors through coarse leg `through`:
/// fine_leg = coarse_leg ∘ factor.
struct LegFactorization {
    std::size_t through = 0;
    MatroidMorphism factor;
};

struct RefinedCovering {
    TutteCovering covering;
    std::vector<LegFactorization> factorizations;  // parallel to covering.legs()
};

/// Expands the witness below each leg until all leg sources are
/// indecomposable; factorizations are exact ground-set inclusions.
RefinedCovering refine_to_indecomposable(const TutteCovering& c);

struct CommonRefinement {
    TutteCovering covering;
    std::vector<LegFactorization> into_first;
    std::vector<LegFactorization> into_second;
    /// Leg i of the refinement corresponds to leg matched_leg[i] of the
    /// second covering's indecomposable refinement, via the
    /// class-preserving isomorphism used in into_second.
    std::vector<std::size_t> matched_leg;
};

/// Refines both coverings to indecomposable ones, then matches their
/// leaf classes. Factorizations into the first covering are exact;
/// factorizations into the second go through a class-preserving
/// isomorphism of leg sources (loops to loops, coloops to coloops, in
/// ascending index order), which is as strict as the matching can be:
/// the two refinements live on different ground subsets in general.
CommonRefinement common_refinement(const TutteCovering& a, const TutteCovering& b);

}  // namespace tuttecover
