#include "tuttecover/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace tuttecover {

namespace {

// cooc[i][j] = number of bases containing both i and j (degree on the
// diagonal). Any isomorphism must carry this matrix across.
std::vector<std::vector<int>> cooccurrence(const Matroid& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<int>> cooc(n, std::vector<int>(n, 0));
    for (Mask b : m.bases()) {
        for (std::size_t i : bits_of(b)) {
            for (std::size_t j : bits_of(b)) ++cooc[i][j];
        }
    }
    return cooc;
}

bool maps_bases_onto(const Matroid& a, const Matroid& b, const std::vector<std::size_t>& map) {
    for (Mask basis : a.bases()) {
        Mask image = 0;
        for (std::size_t i : bits_of(basis)) image |= bit_at(map[i]);
        if (!b.is_basis(image)) return false;
    }
    return true;
}

struct IsoSearch {
    const Matroid& a;
    const Matroid& b;
    std::vector<std::vector<int>> cooc_a;
    std::vector<std::vector<int>> cooc_b;
    std::vector<std::size_t> assignment;  // a-index -> b-index
    Mask used = 0;

    bool run(std::size_t next) {
        const std::size_t n = a.size();
        if (next == n) return maps_bases_onto(a, b, assignment);
        for (std::size_t j = 0; j < n; ++j) {
            if (used & bit_at(j)) continue;
            bool consistent = cooc_a[next][next] == cooc_b[j][j];
            for (std::size_t prev = 0; consistent && prev < next; ++prev) {
                consistent = cooc_a[next][prev] == cooc_b[j][assignment[prev]];
            }
            if (!consistent) continue;
            assignment[next] = j;
            used |= bit_at(j);
            if (run(next + 1)) return true;
            used &= ~bit_at(j);
        }
        return false;
    }
};

}  // namespace

std::optional<MatroidMorphism> are_isomorphic(const Matroid& a, const Matroid& b) {
    if (a.size() != b.size() || a.rank() != b.rank() ||
        a.bases().size() != b.bases().size()) {
        return std::nullopt;
    }

    auto cooc_a = cooccurrence(a);
    auto cooc_b = cooccurrence(b);

    auto degree_multiset = [](const std::vector<std::vector<int>>& cooc) {
        std::vector<int> degrees;
        degrees.reserve(cooc.size());
        for (std::size_t i = 0; i < cooc.size(); ++i) degrees.push_back(cooc[i][i]);
        std::sort(degrees.begin(), degrees.end());
        return degrees;
    };
    if (degree_multiset(cooc_a) != degree_multiset(cooc_b)) return std::nullopt;

    IsoSearch search{a, b, std::move(cooc_a), std::move(cooc_b),
                     std::vector<std::size_t>(a.size()), 0};
    if (!search.run(0)) return std::nullopt;
    return MatroidMorphism(a, b, std::move(search.assignment));
}

BigInt automorphism_count(const Matroid& m, std::size_t enumeration_bound) {
    const std::size_t n = m.size();
    if (n > enumeration_bound) {
        throw CapacityExceeded("automorphism enumeration is limited to " +
                               std::to_string(enumeration_bound) + " elements, got " +
                               std::to_string(n));
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt count = 0;
    do {
        if (maps_bases_onto(m, m, perm)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace tuttecover
