#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tuttecover/bitset64.hpp"
#include "tuttecover/errors.hpp"

namespace tuttecover {

class Multigraph;

/// Ordered set of distinct element labels, at most 64 of them.
/// The position of a label is its bit index in every Mask.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    /// n elements labeled "e0".."e{n-1}".
    static GroundSet canonical(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    Mask all() const { return full_mask(labels_.size()); }

    std::optional<std::size_t> index_of(const std::string& label) const;
    /// Like index_of but throws UnknownElement.
    std::size_t require(const std::string& label) const;
    bool contains(const std::string& label) const { return index_of(label).has_value(); }

    Mask mask_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;

    bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

enum class ElementClass { Loop, Coloop, NonDegenerate };

std::string to_string(ElementClass c);

/// Isomorphism class of an indecomposable matroid: its loop and coloop counts.
struct IndecomposableClass {
    std::size_t loops = 0;
    std::size_t coloops = 0;

    friend auto operator<=>(const IndecomposableClass&, const IndecomposableClass&) = default;
};

/// A matroid stored by its basis family.
///
/// Bases are kept as a sorted vector of bitmasks over the ground-set
/// indices; independence is containment in some basis. Values are
/// immutable after construction and safe to share across threads.
class Matroid {
public:
    /// Validates that `bases` is a non-empty equicardinal family
    /// satisfying the basis-exchange axiom (checked exhaustively).
    static Matroid from_bases(GroundSet ground, std::vector<Mask> bases);
    static Matroid from_bases(GroundSet ground,
                              const std::vector<std::vector<std::string>>& bases);

    /// Validates the independence axioms (I1)-(I3) exhaustively on the
    /// given family and extracts the maximal sets as bases.
    static Matroid from_independent_sets(GroundSet ground, std::vector<Mask> family);
    static Matroid from_independent_sets(GroundSet ground,
                                         const std::vector<std::vector<std::string>>& family);

    /// The empty matroid: empty ground set, bases = {∅}.
    static Matroid empty();

    /// Uniform matroid U_{k,n} on the canonical ground set.
    static Matroid uniform(std::size_t k, std::size_t n);

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }
    const std::vector<Mask>& bases() const { return bases_; }
    std::size_t rank() const { return rank_; }

    bool is_basis(Mask m) const;
    bool is_independent(Mask subset) const;
    bool is_independent(const std::vector<std::string>& subset) const;

    /// Rank of a subset: size of a maximal independent set inside it.
    std::size_t rank_of(Mask subset) const;
    std::size_t rank_of(const std::vector<std::string>& subset) const;

    ElementClass classify(std::size_t index) const;
    ElementClass classify(const std::string& label) const;
    Mask loop_mask() const { return ground_.all() & ~union_; }
    Mask coloop_mask() const { return intersection_; }

    /// True iff every element is a loop or a coloop (equivalently, the
    /// matroid has exactly one basis). The empty matroid qualifies.
    bool is_indecomposable() const;
    /// Throws NotIndecomposable unless is_indecomposable().
    IndecomposableClass indecomposable_class() const;

    Matroid dual() const;

    /// Deletion M \ T. The remaining labels keep their original order.
    Matroid deletion(Mask to_delete) const;
    Matroid deletion(const std::vector<std::string>& to_delete) const;

    /// Contraction M / T, computed as (M* \ T)*.
    Matroid contraction(Mask to_contract) const;
    Matroid contraction(const std::vector<std::string>& to_contract) const;

    /// Same structure with new labels (order preserved).
    Matroid relabeled(std::vector<std::string> new_labels) const;

    /// Label-free canonical key: [n, sorted basis masks...].
    std::vector<std::uint64_t> canonical_encoding() const;

    /// Equal labels in equal order and equal basis families.
    bool operator==(const Matroid& other) const {
        return ground_ == other.ground_ && bases_ == other.bases_;
    }

private:
    Matroid(GroundSet ground, std::vector<Mask> bases, std::size_t rank);

    /// Trusted constructor for operations that produce valid matroids by
    /// construction; sorts the basis vector, no axiom re-check.
    static Matroid trusted(GroundSet ground, std::vector<Mask> bases);

    Matroid delete_single(std::size_t index) const;

    GroundSet ground_;
    std::vector<Mask> bases_;  // sorted, non-empty
    std::size_t rank_ = 0;
    Mask union_ = 0;         // elements lying in some basis
    Mask intersection_ = 0;  // elements lying in every basis

    friend Matroid direct_sum(const Matroid&, const Matroid&);
    friend Matroid graphic_matroid(const Multigraph&);
};

/// Direct sum; labels are suffixed ".L"/".R" so the grounds are disjoint.
Matroid direct_sum(const Matroid& left, const Matroid& right);

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> problems;
    explicit operator bool() const { return ok; }
};

/// Exhaustively re-checks (I1)-(I3) on the independence family derived
/// from the basis family. Cost grows as 4^n; intended for small n.
AxiomReport check_axioms(const Matroid& m);

}  // namespace tuttecover
