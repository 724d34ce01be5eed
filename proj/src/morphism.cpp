#include "tuttecover/morphism.hpp"

#include <algorithm>

namespace tuttecover {

MatroidMorphism::MatroidMorphism(Matroid source, Matroid target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (map_.size() != source_.size()) {
        throw InvalidParameters("morphism map must cover every source element");
    }
    for (std::size_t t : map_) {
        if (t >= target_.size()) {
            throw UnknownElement("morphism map hits index " + std::to_string(t) +
                                 " outside the target ground set");
        }
    }
}

MatroidMorphism MatroidMorphism::inclusion(Matroid source, Matroid target) {
    std::vector<std::size_t> map;
    map.reserve(source.size());
    for (const auto& label : source.ground().labels()) {
        map.push_back(target.ground().require(label));
    }
    return MatroidMorphism(std::move(source), std::move(target), std::move(map));
}

MatroidMorphism MatroidMorphism::identity(Matroid m) {
    std::vector<std::size_t> map(m.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    Matroid copy = m;
    return MatroidMorphism(std::move(copy), std::move(m), std::move(map));
}

Mask MatroidMorphism::image_mask(Mask source_subset) const {
    Mask out = 0;
    for (std::size_t i : bits_of(source_subset)) out |= bit_at(map_[i]);
    return out;
}

std::string MatroidMorphism::image_label(const std::string& source_label) const {
    return target_.ground().label(map_[source_.ground().require(source_label)]);
}

MatroidMorphism compose(const MatroidMorphism& g, const MatroidMorphism& f) {
    if (!(f.target() == g.source())) {
        throw InvalidParameters("composition needs f's target to equal g's source");
    }
    std::vector<std::size_t> map;
    map.reserve(f.source().size());
    for (std::size_t t : f.index_map()) map.push_back(g.index_map()[t]);
    return MatroidMorphism(f.source(), g.target(), std::move(map));
}

bool is_morphism(const MatroidMorphism& m) {
    Mask seen = 0;
    for (std::size_t t : m.index_map()) {
        if (seen & bit_at(t)) return false;
        seen |= bit_at(t);
    }
    for (Mask b : m.source().bases()) {
        if (!m.target().is_independent(m.image_mask(b))) return false;
    }
    return true;
}

bool is_isomorphism(const MatroidMorphism& m) {
    if (m.source().size() != m.target().size()) return false;
    if (m.source().bases().size() != m.target().bases().size()) return false;
    Mask seen = 0;
    for (std::size_t t : m.index_map()) {
        if (seen & bit_at(t)) return false;
        seen |= bit_at(t);
    }
    for (Mask b : m.source().bases()) {
        if (!m.target().is_basis(m.image_mask(b))) return false;
    }
    return true;
}

}  // namespace tuttecover
