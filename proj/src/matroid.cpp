#include "tuttecover/matroid.hpp"

#include <algorithm>
#include <sstream>

namespace tuttecover {

namespace {

std::string join_labels(const GroundSet& g, Mask m) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : bits_of(m)) {
        if (!first) out += ",";
        out += g.label(i);
        first = false;
    }
    return out + "}";
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxGroundSize) {
        throw CapacityExceeded("ground set has " + std::to_string(labels_.size()) +
                               " elements; at most 64 are supported");
    }
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second) {
            throw InvalidParameters("duplicate ground label \"" + labels_[i] + "\"");
        }
    }
}

GroundSet GroundSet::canonical(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GroundSet::require(const std::string& label) const {
    auto idx = index_of(label);
    if (!idx) throw UnknownElement("no element \"" + label + "\" in the ground set");
    return *idx;
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit_at(require(l));
    return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    for (std::size_t i : bits_of(m)) out.push_back(label(i));
    return out;
}

std::string to_string(ElementClass c) {
    switch (c) {
        case ElementClass::Loop: return "loop";
        case ElementClass::Coloop: return "coloop";
        case ElementClass::NonDegenerate: return "non-degenerate";
    }
    return "?";
}

Matroid::Matroid(GroundSet ground, std::vector<Mask> bases, std::size_t rank)
    : ground_(std::move(ground)), bases_(std::move(bases)), rank_(rank) {
    intersection_ = ground_.all();
    for (Mask b : bases_) {
        union_ |= b;
        intersection_ &= b;
    }
}

Matroid Matroid::trusted(GroundSet ground, std::vector<Mask> bases) {
    if (bases.empty()) throw InvalidMatroid("a matroid needs at least one basis");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    std::size_t rank = static_cast<std::size_t>(popcount(bases.front()));
    return Matroid(std::move(ground), std::move(bases), rank);
}

Matroid Matroid::from_bases(GroundSet ground, std::vector<Mask> bases) {
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    if (bases.empty()) throw InvalidMatroid("a matroid needs at least one basis");

    const Mask all = ground.all();
    const int r = popcount(bases.front());
    for (Mask b : bases) {
        if (b & ~all) throw InvalidMatroid("basis uses bits outside the ground set");
        if (popcount(b) != r) throw InvalidMatroid("bases have mixed cardinalities");
    }

    // Basis exchange, checked exhaustively: for B1, B2 and x in B1\B2
    // there must be y in B2\B1 with B1-x+y again a basis.
    auto is_listed = [&](Mask m) {
        return std::binary_search(bases.begin(), bases.end(), m);
    };
    for (Mask b1 : bases) {
        for (Mask b2 : bases) {
            if (b1 == b2) continue;
            for (std::size_t x : bits_of(b1 & ~b2)) {
                bool exchanged = false;
                for (std::size_t y : bits_of(b2 & ~b1)) {
                    if (is_listed((b1 & ~bit_at(x)) | bit_at(y))) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged) {
                    throw InvalidMatroid("basis exchange fails for " + join_labels(ground, b1) +
                                         ", " + join_labels(ground, b2) + " at " +
                                         ground.label(x));
                }
            }
        }
    }
    return Matroid(std::move(ground), std::move(bases), static_cast<std::size_t>(r));
}

Matroid Matroid::from_bases(GroundSet ground,
                            const std::vector<std::vector<std::string>>& bases) {
    std::vector<Mask> masks;
    masks.reserve(bases.size());
    for (const auto& b : bases) masks.push_back(ground.mask_of(b));
    return from_bases(std::move(ground), std::move(masks));
}

namespace {

// Checks (I1)-(I3) on a sorted, deduplicated family; returns the first
// violation as a message, or nothing if all hold.
std::optional<std::string> family_violation(const GroundSet& ground,
                                            const std::vector<Mask>& fam) {
    auto listed = [&](Mask m) { return std::binary_search(fam.begin(), fam.end(), m); };

    if (!listed(0)) return "(I1) violated: the empty set is not in the family";

    for (Mask s : fam) {
        for (std::size_t x : bits_of(s)) {
            if (!listed(s & ~bit_at(x))) {
                return "(I2) violated: " + join_labels(ground, s) + " is in the family but " +
                       join_labels(ground, s & ~bit_at(x)) + " is not";
            }
        }
    }

    for (Mask a : fam) {
        const int na = popcount(a);
        for (Mask b : fam) {
            if (popcount(b) <= na) continue;
            bool augmented = false;
            for (std::size_t x : bits_of(b & ~a)) {
                if (listed(a | bit_at(x))) {
                    augmented = true;
                    break;
                }
            }
            if (!augmented) {
                return "(I3) violated: " + join_labels(ground, a) +
                       " cannot be augmented from " + join_labels(ground, b);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Matroid Matroid::from_independent_sets(GroundSet ground, std::vector<Mask> family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty()) throw InvalidMatroid("(I1) violated: the family is empty");

    const Mask all = ground.all();
    for (Mask s : family) {
        if (s & ~all) throw InvalidMatroid("independent set uses bits outside the ground set");
    }
    if (auto problem = family_violation(ground, family)) throw InvalidMatroid(*problem);

    // With (I3) verified, the maximal members are exactly those of
    // maximum cardinality.
    int r = 0;
    for (Mask s : family) r = std::max(r, popcount(s));
    std::vector<Mask> bases;
    for (Mask s : family) {
        if (popcount(s) == r) bases.push_back(s);
    }
    return Matroid(std::move(ground), std::move(bases), static_cast<std::size_t>(r));
}

Matroid Matroid::from_independent_sets(GroundSet ground,
                                       const std::vector<std::vector<std::string>>& family) {
    std::vector<Mask> masks;
    masks.reserve(family.size());
    for (const auto& s : family) masks.push_back(ground.mask_of(s));
    return from_independent_sets(std::move(ground), std::move(masks));
}

Matroid Matroid::empty() { return Matroid(GroundSet(), {0}, 0); }

Matroid Matroid::uniform(std::size_t k, std::size_t n) {
    if (n > kMaxGroundSize) {
        throw CapacityExceeded("uniform matroid on " + std::to_string(n) + " > 64 elements");
    }
    if (k > n) {
        throw InvalidParameters("uniform matroid needs k <= n, got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
    }
    return Matroid(GroundSet::canonical(n), k_subsets(n, k), k);
}

bool Matroid::is_basis(Mask m) const {
    return std::binary_search(bases_.begin(), bases_.end(), m);
}

bool Matroid::is_independent(Mask subset) const {
    if (subset & ~ground_.all()) {
        throw UnknownElement("subset uses bits outside the ground set");
    }
    for (Mask b : bases_) {
        if ((subset & ~b) == 0) return true;
    }
    return false;
}

bool Matroid::is_independent(const std::vector<std::string>& subset) const {
    return is_independent(ground_.mask_of(subset));
}

std::size_t Matroid::rank_of(Mask subset) const {
    if (subset & ~ground_.all()) {
        throw UnknownElement("subset uses bits outside the ground set");
    }
    int best = 0;
    for (Mask b : bases_) best = std::max(best, popcount(b & subset));
    return static_cast<std::size_t>(best);
}

std::size_t Matroid::rank_of(const std::vector<std::string>& subset) const {
    return rank_of(ground_.mask_of(subset));
}

ElementClass Matroid::classify(std::size_t index) const {
    if (index >= ground_.size()) {
        throw UnknownElement("element index " + std::to_string(index) + " out of range");
    }
    const Mask bit = bit_at(index);
    if (!(union_ & bit)) return ElementClass::Loop;
    if (intersection_ & bit) return ElementClass::Coloop;
    return ElementClass::NonDegenerate;
}

ElementClass Matroid::classify(const std::string& label) const {
    return classify(ground_.require(label));
}

bool Matroid::is_indecomposable() const { return bases_.size() == 1; }

IndecomposableClass Matroid::indecomposable_class() const {
    if (!is_indecomposable()) {
        throw NotIndecomposable("matroid has a non-degenerate element");
    }
    return {size() - rank_, rank_};
}

Matroid Matroid::dual() const {
    const Mask all = ground_.all();
    std::vector<Mask> complements;
    complements.reserve(bases_.size());
    for (Mask b : bases_) complements.push_back(all & ~b);
    return trusted(ground_, std::move(complements));
}

Matroid Matroid::delete_single(std::size_t index) const {
    const Mask bit = bit_at(index);
    std::vector<std::string> labels = ground_.labels();
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(index));

    std::vector<Mask> kept;
    if (intersection_ & bit) {
        // Coloop: every basis shrinks by it.
        kept.reserve(bases_.size());
        for (Mask b : bases_) kept.push_back(squeeze_bit(b & ~bit, index));
    } else {
        // Otherwise the bases avoiding it are exactly the new bases.
        for (Mask b : bases_) {
            if (!(b & bit)) kept.push_back(squeeze_bit(b, index));
        }
    }
    return trusted(GroundSet(std::move(labels)), std::move(kept));
}

Matroid Matroid::deletion(Mask to_delete) const {
    if (to_delete & ~ground_.all()) {
        throw UnknownElement("deletion set uses bits outside the ground set");
    }
    Matroid result = *this;
    // Highest index first, so lower indices stay valid while bits squeeze out.
    for (int i = static_cast<int>(ground_.size()) - 1; i >= 0; --i) {
        if (to_delete & bit_at(static_cast<std::size_t>(i))) {
            result = result.delete_single(static_cast<std::size_t>(i));
        }
    }
    return result;
}

Matroid Matroid::deletion(const std::vector<std::string>& to_delete) const {
    return deletion(ground_.mask_of(to_delete));
}

Matroid Matroid::contraction(Mask to_contract) const {
    if (to_contract & ~ground_.all()) {
        throw UnknownElement("contraction set uses bits outside the ground set");
    }
    return dual().deletion(to_contract).dual();
}

Matroid Matroid::contraction(const std::vector<std::string>& to_contract) const {
    return contraction(ground_.mask_of(to_contract));
}

Matroid Matroid::relabeled(std::vector<std::string> new_labels) const {
    if (new_labels.size() != ground_.size()) {
        throw InvalidParameters("relabeling needs exactly " + std::to_string(ground_.size()) +
                                " labels");
    }
    return Matroid(GroundSet(std::move(new_labels)), bases_, rank_);
}

std::vector<std::uint64_t> Matroid::canonical_encoding() const {
    std::vector<std::uint64_t> key;
    key.reserve(bases_.size() + 1);
    key.push_back(ground_.size());
    key.insert(key.end(), bases_.begin(), bases_.end());
    return key;
}

Matroid direct_sum(const Matroid& left, const Matroid& right) {
    const std::size_t nl = left.size();
    if (nl + right.size() > kMaxGroundSize) {
        throw CapacityExceeded("direct sum would have " +
                               std::to_string(nl + right.size()) + " > 64 elements");
    }
    std::vector<std::string> labels;
    labels.reserve(nl + right.size());
    for (const auto& l : left.ground().labels()) labels.push_back(l + ".L");
    for (const auto& l : right.ground().labels()) labels.push_back(l + ".R");

    std::vector<Mask> bases;
    bases.reserve(left.bases().size() * right.bases().size());
    for (Mask br : right.bases()) {
        for (Mask bl : left.bases()) bases.push_back(bl | (br << nl));
    }
    return Matroid(GroundSet(std::move(labels)), std::move(bases),
                   left.rank() + right.rank());
}

AxiomReport check_axioms(const Matroid& m) {
    const std::size_t n = m.size();
    if (n > 16) {
        throw CapacityExceeded("exhaustive axiom check is limited to 16 elements, got " +
                               std::to_string(n));
    }
    std::vector<Mask> fam;
    for (Mask s = 0;; ++s) {
        if (m.is_independent(s)) fam.push_back(s);
        if (s == m.ground().all()) break;
    }
    AxiomReport report;
    if (auto problem = family_violation(m.ground(), fam)) {
        report.ok = false;
        report.problems.push_back(*problem);
    }
    if (m.bases().empty()) {
        report.ok = false;
        report.problems.push_back("basis family is empty");
    }
    for (Mask b : m.bases()) {
        if (static_cast<std::size_t>(popcount(b)) != m.rank()) {
            report.ok = false;
            report.problems.push_back("basis " + join_labels(m.ground(), b) +
                                      " does not have rank cardinality");
            break;
        }
    }
    return report;
}

}  // namespace tuttecover
