#pragma once

// Deterministic random structures shared by the unit and acceptance
// suites. Everything is a pure function of the supplied engine, so any
// failure reproduces from the seed alone.

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tuttecover/covering.hpp"
#include "tuttecover/dctree.hpp"
#include "tuttecover/matroid.hpp"
#include "tuttecover/multigraph.hpp"

namespace corpus {

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// 1-5 vertices, 1-max_edges edges; loops and parallels are common on
/// purpose.
inline tuttecover::Multigraph random_multigraph(std::mt19937_64& rng,
                                                std::size_t max_edges) {
    const std::size_t v = pick(rng, 1, 5);
    const std::size_t m = pick(rng, 1, max_edges);
    std::vector<std::string> vertices;
    vertices.reserve(v);
    for (std::size_t i = 0; i < v; ++i) vertices.push_back("v" + std::to_string(i));
    std::vector<tuttecover::Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        edges.push_back({"e" + std::to_string(i), vertices[pick(rng, 0, v - 1)],
                         vertices[pick(rng, 0, v - 1)]});
    return tuttecover::Multigraph(std::move(vertices), std::move(edges));
}

/// A random sub-family of the k-subsets that still satisfies exchange,
/// found by rejection; falls back to the full uniform family.
inline tuttecover::Matroid random_thinned_uniform(std::mt19937_64& rng, std::size_t n,
                                                  std::size_t k) {
    using tuttecover::Mask;
    const std::vector<Mask> all = tuttecover::k_subsets(n, k);
    const tuttecover::GroundSet ground = tuttecover::GroundSet::canonical(n);
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<Mask> kept;
        for (Mask b : all)
            if (pick(rng, 0, 9) < 7) kept.push_back(b);
        if (kept.empty()) continue;
        try {
            return tuttecover::Matroid::from_bases(ground, kept);
        } catch (const tuttecover::InvalidMatroid&) {
            continue;
        }
    }
    return tuttecover::Matroid::uniform(k, n);
}

/// Random matroid with at most max_n elements, drawn from a mix of
/// uniform, graphic, thinned, dual, minor, and direct-sum shapes. The
/// result is re-fed through the validating constructor so every sample
/// also exercises the public entry point.
inline tuttecover::Matroid random_matroid(std::mt19937_64& rng, std::size_t max_n) {
    using tuttecover::Matroid;
    Matroid m = Matroid::empty();
    switch (pick(rng, 0, 5)) {
        case 0: {
            const std::size_t n = pick(rng, 1, max_n);
            m = Matroid::uniform(pick(rng, 0, n), n);
            break;
        }
        case 1:
            m = graphic_matroid(random_multigraph(rng, max_n));
            break;
        case 2: {
            const std::size_t n = pick(rng, 1, std::min<std::size_t>(max_n, 6));
            m = random_thinned_uniform(rng, n, pick(rng, 0, n));
            break;
        }
        case 3: {  // dual of a smaller draw
            m = random_matroid(rng, max_n).dual();
            break;
        }
        case 4: {  // minor of a draw up to two elements larger
            Matroid big = random_matroid(rng, max_n + 2);
            while (big.size() > max_n) {
                const std::size_t i = pick(rng, 0, big.size() - 1);
                const std::vector<std::string> one = {big.ground().label(i)};
                big = pick(rng, 0, 1) ? big.deletion(one) : big.contraction(one);
            }
            m = big;
            break;
        }
        default: {  // direct sum of two smaller draws
            if (max_n < 2) {
                m = Matroid::uniform(pick(rng, 0, 1), 1);
                break;
            }
            const std::size_t left = pick(rng, 1, max_n - 1);
            m = direct_sum(random_matroid(rng, left), random_matroid(rng, max_n - left));
            break;
        }
    }
    if (m.size() == 0) return m;
    return Matroid::from_bases(m.ground(), m.bases());
}

/// Expandable (leaf id, element label) pairs of a tree.
inline std::vector<std::pair<std::size_t, std::string>> expansion_options(
    const tuttecover::DCTree& t) {
    std::vector<std::pair<std::size_t, std::string>> options;
    for (std::size_t id : t.leaf_ids()) {
        const tuttecover::Matroid& m = t.matroid_at(id);
        const tuttecover::Mask live =
            m.ground().all() & ~m.loop_mask() & ~m.coloop_mask();
        for (std::size_t i : tuttecover::bits_of(live))
            options.emplace_back(id, m.ground().label(i));
    }
    return options;
}

/// Random partial expansion: up to max_steps leaf splits at random
/// elements, in random child order.
inline tuttecover::DCTree random_partial_tree(std::mt19937_64& rng,
                                              const tuttecover::Matroid& m,
                                              std::size_t max_steps) {
    tuttecover::DCTree t(m);
    const std::size_t steps = pick(rng, 0, max_steps);
    for (std::size_t s = 0; s < steps; ++s) {
        const auto options = expansion_options(t);
        if (options.empty()) break;
        const auto& [leaf, element] = options[pick(rng, 0, options.size() - 1)];
        const auto order = pick(rng, 0, 1) ? tuttecover::ExpandOrder::DeleteFirst
                                           : tuttecover::ExpandOrder::ContractFirst;
        t = expand_leaf(t, leaf, element, order);
    }
    return t;
}

inline tuttecover::TutteCovering random_partial_covering(std::mt19937_64& rng,
                                                         const tuttecover::Matroid& m,
                                                         std::size_t max_steps = 4) {
    return covering_from_tree(random_partial_tree(rng, m, max_steps));
}

}  // namespace corpus
