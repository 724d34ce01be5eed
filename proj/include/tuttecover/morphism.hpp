#pragma once

#include <cstddef>
#include <vector>

#include "tuttecover/matroid.hpp"

namespace tuttecover {

/// A map between matroids: source, target, and an index map on grounds.
/// Whether it actually preserves independence is a property (is_morphism),
/// not a construction invariant, so invalid maps can be represented and
/// rejected.
class MatroidMorphism {
public:
    /// map[i] = target index of source element i. Must be injective.
    MatroidMorphism(Matroid source, Matroid target, std::vector<std::size_t> map);

    /// Matches source labels to identical target labels.
    static MatroidMorphism inclusion(Matroid source, Matroid target);
    static MatroidMorphism identity(Matroid m);

    const Matroid& source() const { return source_; }
    const Matroid& target() const { return target_; }
    const std::vector<std::size_t>& index_map() const { return map_; }

    Mask image_mask(Mask source_subset) const;

    /// Where a source element goes, by label.
    std::string image_label(const std::string& source_label) const;

    bool operator==(const MatroidMorphism& other) const {
        return source_ == other.source_ && target_ == other.target_ && map_ == other.map_;
    }

private:
    Matroid source_;
    Matroid target_;
    std::vector<std::size_t> map_;
};

/// g ∘ f; f's target must equal g's source.
MatroidMorphism compose(const MatroidMorphism& g, const MatroidMorphism& f);

/// True iff the map is injective and sends every independent set of the
/// source to an independent set of the target. Checking basis images
/// suffices: independence is downward closed, and every independent set
/// sits inside a basis.
bool is_morphism(const MatroidMorphism& m);

/// True iff the map is a bijection identifying the basis families.
bool is_isomorphism(const MatroidMorphism& m);

}  // namespace tuttecover
