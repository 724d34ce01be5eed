#include "tuttecover/covering.hpp"

#include <algorithm>

namespace tuttecover {

namespace {

// Composite of the step inclusions from a leaf up to the root.
MatroidMorphism path_inclusion(const DCTree& t, const std::vector<std::size_t>& parents,
                               std::size_t leaf) {
    MatroidMorphism acc = MatroidMorphism::identity(t.matroid_at(leaf));
    std::size_t current = leaf;
    while (current != DCTree::kRoot) {
        const std::size_t parent = parents[current];
        acc = compose(
            MatroidMorphism::inclusion(t.matroid_at(current), t.matroid_at(parent)), acc);
        current = parent;
    }
    return acc;
}

}  // namespace

TutteCovering::TutteCovering(Matroid target, std::vector<MatroidMorphism> legs,
                             DCTree witness)
    : target_(std::move(target)), legs_(std::move(legs)), witness_(std::move(witness)) {
    if (!(witness_.root_matroid() == target_)) {
        throw InvalidCover("witness tree does not start at the covered matroid");
    }
    if (legs_.size() != witness_.leaf_ids().size()) {
        throw InvalidCover("covering has " + std::to_string(legs_.size()) + " legs but " +
                           std::to_string(witness_.leaf_ids().size()) + " witness leaves");
    }
    for (const auto& leg : legs_) {
        if (!(leg.target() == target_)) {
            throw InvalidCover("leg does not point at the covered matroid");
        }
    }
}

TutteCovering covering_from_tree(const DCTree& t) {
    const TreeValidation validation = validate_tree(t);
    if (!validation.ok) throw InvalidTree(validation.problems.front());

    const auto parents = t.parents();
    std::vector<MatroidMorphism> legs;
    for (std::size_t leaf : t.leaf_ids()) {
        legs.push_back(path_inclusion(t, parents, leaf));
    }
    return TutteCovering(t.root_matroid(), std::move(legs), t);
}

CoverValidation validate_covering(const TutteCovering& c) {
    CoverValidation report;
    auto flag = [&](std::string problem) {
        report.ok = false;
        report.problems.push_back(std::move(problem));
    };

    const TreeValidation tree_report = validate_tree(c.witness());
    if (!tree_report.ok) {
        report.ok = false;
        report.problems = tree_report.problems;
    }
    if (!(c.witness().root_matroid() == c.target())) {
        flag("witness tree does not start at the covered matroid");
    }

    const auto leaves = c.witness().leaf_ids();
    if (leaves.size() != c.legs().size()) {
        flag("leg count differs from witness leaf count");
        return report;
    }
    const auto parents = c.witness().parents();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        const auto& leg = c.legs()[i];
        const std::string where = "leg " + std::to_string(i);
        if (!(leg.source() == c.witness().matroid_at(leaves[i]))) {
            flag(where + ": source is not the matching witness leaf");
            continue;
        }
        if (!(leg == path_inclusion(c.witness(), parents, leaves[i]))) {
            flag(where + ": not the composite inclusion along its path");
        }
        if (!is_morphism(leg)) flag(where + ": not a matroid morphism");
    }
    return report;
}

namespace {

// Expands (depth-first, in place on a growing arena) until every leaf
// is indecomposable.
DCTree expand_fully(DCTree t, const PivotStrategy& strategy) {
    for (;;) {
        bool expanded = false;
        for (std::size_t leaf : t.leaf_ids()) {
            const auto pivot = pick_pivot(t.matroid_at(leaf), strategy);
            if (!pivot) continue;
            t = expand_leaf(t, leaf, t.matroid_at(leaf).ground().label(*pivot));
            expanded = true;
            break;
        }
        if (!expanded) return t;
    }
}

}  // namespace

TutteCovering indecomposable_covering(const Matroid& m, PivotStrategy strategy) {
    return covering_from_tree(expand_fully(trivial_tree(m), strategy));
}

std::map<IndecomposableClass, std::size_t> leaf_class_multiset(const TutteCovering& c) {
    std::map<IndecomposableClass, std::size_t> multiset;
    for (const auto& leg : c.legs()) {
        if (!leg.source().is_indecomposable()) {
            throw NotIndecomposableCover("leg source has a non-degenerate element");
        }
        ++multiset[leg.source().indecomposable_class()];
    }
    return multiset;
}

RefinedCovering refine_to_indecomposable(const TutteCovering& c) {
    const CoverValidation validation = validate_covering(c);
    if (!validation.ok) throw InvalidCover(validation.problems.front());

    const auto coarse_leaves = c.witness().leaf_ids();
    // Node ids are stable under expansion, so the coarse leaves can be
    // recognized inside the refined tree.
    std::vector<std::size_t> coarse_index(c.witness().size(), SIZE_MAX);
    for (std::size_t i = 0; i < coarse_leaves.size(); ++i) {
        coarse_index[coarse_leaves[i]] = i;
    }

    const DCTree fine = expand_fully(c.witness(), PivotStrategy::min_index());
    TutteCovering refined = covering_from_tree(fine);

    const auto parents = fine.parents();
    std::vector<LegFactorization> factorizations;
    const auto fine_leaves = fine.leaf_ids();
    for (std::size_t i = 0; i < fine_leaves.size(); ++i) {
        std::size_t node = fine_leaves[i];
        while (node >= coarse_index.size() || coarse_index[node] == SIZE_MAX) {
            node = parents[node];
        }
        const std::size_t through = coarse_index[node];
        factorizations.push_back(
            {through, MatroidMorphism::inclusion(refined.legs()[i].source(),
                                                 c.legs()[through].source())});
    }
    return {std::move(refined), std::move(factorizations)};
}

namespace {

// The canonical isomorphism between indecomposable matroids of equal
// class: loops onto loops and coloops onto coloops, each in ascending
// index order.
MatroidMorphism class_isomorphism(const Matroid& from, const Matroid& to) {
    std::vector<std::size_t> map(from.size());
    const auto pair_up = [&](Mask from_mask, Mask to_mask) {
        const auto from_bits = bits_of(from_mask);
        const auto to_bits = bits_of(to_mask);
        for (std::size_t i = 0; i < from_bits.size(); ++i) map[from_bits[i]] = to_bits[i];
    };
    pair_up(from.loop_mask(), to.loop_mask());
    pair_up(from.coloop_mask(), to.coloop_mask());
    return MatroidMorphism(from, to, std::move(map));
}

}  // namespace

CommonRefinement common_refinement(const TutteCovering& a, const TutteCovering& b) {
    if (!(a.target() == b.target())) {
        throw TargetMismatch("the two coverings cover different matroids");
    }
    RefinedCovering ra = refine_to_indecomposable(a);
    RefinedCovering rb = refine_to_indecomposable(b);

    // Hand out b-side legs class by class, in leg order.
    std::map<IndecomposableClass, std::vector<std::size_t>> available;
    const auto& rb_legs = rb.covering.legs();
    for (std::size_t j = rb_legs.size(); j-- > 0;) {
        available[rb_legs[j].source().indecomposable_class()].push_back(j);
    }

    std::vector<LegFactorization> into_second;
    std::vector<std::size_t> matched_leg;
    for (const auto& leg : ra.covering.legs()) {
        auto& pool = available[leg.source().indecomposable_class()];
        if (pool.empty()) {
            throw InvalidCover("refinements disagree on their leaf class multisets");
        }
        const std::size_t j = pool.back();
        pool.pop_back();
        matched_leg.push_back(j);
        const MatroidMorphism iso =
            class_isomorphism(leg.source(), rb_legs[j].source());
        into_second.push_back(
            {rb.factorizations[j].through, compose(rb.factorizations[j].factor, iso)});
    }
    return {std::move(ra.covering), std::move(ra.factorizations), std::move(into_second),
            std::move(matched_leg)};
}

}  // namespace tuttecover
