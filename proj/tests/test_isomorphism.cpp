#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "corpus.hpp"
#include "tuttecover/isomorphism.hpp"
#include "tuttecover/multigraph.hpp"

using namespace tuttecover;

TEST_SUITE("isomorphism search") {
    TEST_CASE("the triangle is U_{2,3} in disguise") {
        const Matroid tri = graphic_matroid(Multigraph(
            {"a", "b", "c"}, {{"t0", "a", "b"}, {"t1", "b", "c"}, {"t2", "c", "a"}}));
        const auto found = are_isomorphic(tri, Matroid::uniform(2, 3));
        REQUIRE(found.has_value());
        CHECK(is_isomorphism(*found));
    }

    TEST_CASE("size, rank, and basis-count mismatches are rejected") {
        CHECK_FALSE(are_isomorphic(Matroid::uniform(2, 3), Matroid::uniform(2, 4)).has_value());
        CHECK_FALSE(are_isomorphic(Matroid::uniform(1, 3), Matroid::uniform(2, 3)).has_value());
        // same size and rank, different basis counts
        CHECK_FALSE(are_isomorphic(Matroid::uniform(2, 4),
                                   direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2)))
                        .has_value());
    }

    TEST_CASE("a coloop cannot match a loop") {
        // both: 4 elements, rank 2, 3 bases — only the degenerate parts differ.
        const Matroid with_coloop = direct_sum(Matroid::uniform(1, 3), Matroid::uniform(1, 1));
        const Matroid with_loop = direct_sum(Matroid::uniform(2, 3), Matroid::uniform(0, 1));
        REQUIRE(with_coloop.bases().size() == with_loop.bases().size());
        REQUIRE(with_coloop.rank() == with_loop.rank());
        CHECK_FALSE(are_isomorphic(with_coloop, with_loop).has_value());
    }

    TEST_CASE("random permutations are always recovered") {
        std::mt19937_64 rng(777);
        for (int i = 0; i < 40; ++i) {
            const Matroid m = corpus::random_matroid(rng, 8);
            if (m.size() == 0) continue;
            std::vector<std::size_t> perm(m.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            // move basis masks through the permutation, then rebuild
            std::vector<Mask> moved;
            for (Mask b : m.bases()) {
                Mask img = 0;
                for (std::size_t j : bits_of(b)) img |= bit_at(perm[j]);
                moved.push_back(img);
            }
            const Matroid shuffled = Matroid::from_bases(m.ground(), moved);
            const auto found = are_isomorphic(m, shuffled);
            REQUIRE(found.has_value());
            CHECK(is_isomorphism(*found));
            CHECK(found->source() == m);
            CHECK(found->target() == shuffled);
        }
    }
}

TEST_SUITE("automorphism counting") {
    TEST_CASE("uniform matroids have the full symmetric group") {
        CHECK(automorphism_count(Matroid::uniform(1, 1)) == 1);
        CHECK(automorphism_count(Matroid::uniform(2, 3)) == 6);
        CHECK(automorphism_count(Matroid::uniform(2, 4)) == 24);
    }

    TEST_CASE("the complete graph K4 has 24") {
        CHECK(automorphism_count(graphic_matroid(complete_graph(4))) == 24);
    }

    TEST_CASE("indecomposable matroids factor into two symmetric groups") {
        // 2 loops and 3 coloops: 2! * 3! = 12.
        const Matroid m = Matroid::from_bases(
            GroundSet({"l0", "l1", "c0", "c1", "c2"}), {{"c0", "c1", "c2"}});
        CHECK(automorphism_count(m) == 12);
    }

    TEST_CASE("the default bound stops at 8 elements") {
        CHECK_THROWS_AS((void)automorphism_count(Matroid::uniform(1, 9)), CapacityExceeded);
        CHECK(automorphism_count(Matroid::uniform(1, 9), 9) == BigInt(362880));  // 9!
    }

    TEST_CASE("count is invariant under relabeling") {
        std::mt19937_64 rng(778);
        for (int i = 0; i < 10; ++i) {
            const Matroid m = corpus::random_matroid(rng, 6);
            std::vector<std::string> fresh;
            for (std::size_t j = 0; j < m.size(); ++j)
                fresh.push_back("q" + std::to_string(j));
            CHECK(automorphism_count(m) == automorphism_count(m.relabeled(fresh)));
        }
    }
}
