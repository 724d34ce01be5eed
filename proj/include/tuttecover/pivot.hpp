#pragma once

#include <cstdint>
#include <optional>

#include "tuttecover/matroid.hpp"

namespace tuttecover {

/// Rule for choosing the branching element of a deletion-contraction step.
/// Seeded picks pseudo-randomly but reproducibly: the choice is a pure
/// function of the seed and the matroid, so reruns agree.
struct PivotStrategy {
    enum class Kind { MinIndex, MaxIndex, Seeded };

    Kind kind = Kind::MinIndex;
    std::uint64_t seed = 0;

    static PivotStrategy min_index() { return {Kind::MinIndex, 0}; }
    static PivotStrategy max_index() { return {Kind::MaxIndex, 0}; }
    static PivotStrategy seeded(std::uint64_t seed) { return {Kind::Seeded, seed}; }

    bool operator==(const PivotStrategy&) const = default;
};

/// Index of a non-degenerate element chosen by the strategy, or nothing
/// if the matroid is indecomposable.
std::optional<std::size_t> pick_pivot(const Matroid& m, const PivotStrategy& strategy);

}  // namespace tuttecover
