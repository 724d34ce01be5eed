#include "tuttecover/pivot.hpp"

#include <vector>

namespace tuttecover {

std::optional<std::size_t> pick_pivot(const Matroid& m, const PivotStrategy& strategy) {
    const Mask candidates = m.ground().all() & ~m.loop_mask() & ~m.coloop_mask();
    if (candidates == 0) return std::nullopt;

    switch (strategy.kind) {
        case PivotStrategy::Kind::MinIndex:
            return static_cast<std::size_t>(std::countr_zero(candidates));
        case PivotStrategy::Kind::MaxIndex:
            return static_cast<std::size_t>(63 - std::countl_zero(candidates));
        case PivotStrategy::Kind::Seeded: {
            std::uint64_t h = mix64(strategy.seed);
            for (std::uint64_t word : m.canonical_encoding()) h = mix64(h ^ word);
            std::vector<std::size_t> indices;
            for (std::size_t i : bits_of(candidates)) indices.push_back(i);
            return indices[static_cast<std::size_t>(h % indices.size())];
        }
    }
    return std::nullopt;
}

}  // namespace tuttecover
