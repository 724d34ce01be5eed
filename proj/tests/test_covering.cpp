#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "corpus.hpp"
#include "tuttecover/covering.hpp"

using namespace tuttecover;

namespace {

using ClassCounts = std::map<IndecomposableClass, std::size_t>;

}  // namespace

TEST_SUITE("coverings from trees") {
    TEST_CASE("the trivial tree gives the singleton identity cover") {
        for (const Matroid& m : {Matroid::uniform(1, 2), Matroid::empty()}) {
            const TutteCovering c = covering_from_tree(trivial_tree(m));
            REQUIRE(c.legs().size() == 1);
            CHECK(c.legs()[0] == MatroidMorphism::identity(m));
            CHECK(c.target() == m);
            CHECK(static_cast<bool>(validate_covering(c)));
        }
    }

    TEST_CASE("legs follow the depth-first leaf order") {
        std::mt19937_64 rng(61);
        for (int i = 0; i < 20; ++i) {
            const Matroid m = corpus::random_matroid(rng, 7);
            const DCTree t = corpus::random_partial_tree(rng, m, 4);
            const TutteCovering c = covering_from_tree(t);
            const auto leaves = t.leaf_ids();
            REQUIRE(c.legs().size() == leaves.size());
            for (std::size_t k = 0; k < leaves.size(); ++k) {
                CHECK(c.legs()[k].source() == t.matroid_at(leaves[k]));
                CHECK(c.legs()[k].target() == m);
                CHECK(is_morphism(c.legs()[k]));
            }
            CHECK(static_cast<bool>(validate_covering(c)));
        }
    }

    TEST_CASE("a tampered tree is rejected") {
        DCTree t = expand_leaf(trivial_tree(Matroid::uniform(2, 3)), DCTree::kRoot, "e0");
        std::vector<DCTree::Node> nodes = t.nodes();
        nodes[1].matroid = Matroid::uniform(1, 2);
        CHECK_THROWS_AS((void)covering_from_tree(DCTree(nodes)), InvalidTree);
    }

    TEST_CASE("validation catches misplaced legs") {
        const TutteCovering good =
            indecomposable_covering(Matroid::uniform(2, 3));
        REQUIRE(good.legs().size() == 3);
        std::vector<MatroidMorphism> swapped = {good.legs()[1], good.legs()[0],
                                                good.legs()[2]};
        const TutteCovering bad(good.target(), swapped, good.witness());
        const CoverValidation v = validate_covering(bad);
        CHECK_FALSE(static_cast<bool>(v));
        CHECK_FALSE(v.problems.empty());
    }
}

TEST_SUITE("indecomposable coverings") {
    TEST_CASE("every leg source is indecomposable") {
        std::mt19937_64 rng(62);
        for (int i = 0; i < 20; ++i) {
            const Matroid m = corpus::random_matroid(rng, 7);
            const TutteCovering c = indecomposable_covering(m);
            CHECK(c.legs().size() == m.bases().size());
            for (const MatroidMorphism& leg : c.legs())
                CHECK(leg.source().is_indecomposable());
            CHECK(static_cast<bool>(validate_covering(c)));
        }
    }

    TEST_CASE("an indecomposable matroid covers itself") {
        const Matroid m = Matroid::from_bases(GroundSet({"l", "c"}), {{"c"}});
        const TutteCovering c = indecomposable_covering(m);
        REQUIRE(c.legs().size() == 1);
        CHECK(c.legs()[0] == MatroidMorphism::identity(m));
    }

    TEST_CASE("class multiset of U_{1,2}") {
        const ClassCounts counts =
            leaf_class_multiset(indecomposable_covering(Matroid::uniform(1, 2)));
        const ClassCounts expected = {{{0, 1}, 1}, {{1, 0}, 1}};
        CHECK(counts == expected);
    }

    TEST_CASE("class multiset of U_{2,3}") {
        const ClassCounts expected = {{{0, 2}, 1}, {{0, 1}, 1}, {{1, 0}, 1}};
        for (const auto s : {PivotStrategy::min_index(), PivotStrategy::max_index(),
                             PivotStrategy::seeded(5)}) {
            CHECK(leaf_class_multiset(indecomposable_covering(Matroid::uniform(2, 3), s)) ==
                  expected);
        }
    }

    TEST_CASE("class multiset of the empty matroid") {
        const ClassCounts counts =
            leaf_class_multiset(indecomposable_covering(Matroid::empty()));
        const ClassCounts expected = {{{0, 0}, 1}};
        CHECK(counts == expected);
    }

    TEST_CASE("multisets need indecomposable legs") {
        const TutteCovering partial = covering_from_tree(trivial_tree(Matroid::uniform(1, 2)));
        CHECK_THROWS_AS((void)leaf_class_multiset(partial), NotIndecomposableCover);
    }

    TEST_CASE("strategies agree on the class multiset") {
        std::mt19937_64 rng(63);
        for (int i = 0; i < 20; ++i) {
            const Matroid m = corpus::random_matroid(rng, 7);
            const ClassCounts reference =
                leaf_class_multiset(indecomposable_covering(m));
            CHECK(leaf_class_multiset(indecomposable_covering(
                      m, PivotStrategy::max_index())) == reference);
            CHECK(leaf_class_multiset(indecomposable_covering(
                      m, PivotStrategy::seeded(rng()))) == reference);
        }
    }
}

TEST_SUITE("refinement") {
    TEST_CASE("the identity cover of U_{1,2} refines through the identity") {
        const Matroid m = Matroid::uniform(1, 2);
        const TutteCovering identity_cover = covering_from_tree(trivial_tree(m));
        const RefinedCovering r = refine_to_indecomposable(identity_cover);
        REQUIRE(r.covering.legs().size() == 2);
        REQUIRE(r.factorizations.size() == 2);
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(r.factorizations[i].through == 0);
            // leg = identity ∘ factor, so the factor is the leg itself
            CHECK(r.factorizations[i].factor == r.covering.legs()[i]);
        }
    }

    TEST_CASE("an already-indecomposable cover refines to itself") {
        const TutteCovering c = indecomposable_covering(Matroid::uniform(2, 3));
        const RefinedCovering r = refine_to_indecomposable(c);
        CHECK(r.covering == c);
        for (std::size_t i = 0; i < r.factorizations.size(); ++i) {
            CHECK(r.factorizations[i].through == i);
            CHECK(r.factorizations[i].factor ==
                  MatroidMorphism::identity(c.legs()[i].source()));
        }
    }

    TEST_CASE("a partially expanded cover of U_{2,3} gains a third leg") {
        const Matroid m = Matroid::uniform(2, 3);
        const TutteCovering two_legs =
            covering_from_tree(expand_leaf(trivial_tree(m), DCTree::kRoot, "e0"));
        REQUIRE(two_legs.legs().size() == 2);
        const RefinedCovering r = refine_to_indecomposable(two_legs);
        CHECK(r.covering.legs().size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            const LegFactorization& f = r.factorizations[i];
            CHECK(compose(two_legs.legs()[f.through], f.factor) == r.covering.legs()[i]);
        }
    }

    TEST_CASE("factorizations compose exactly on random partial covers") {
        std::mt19937_64 rng(64);
        for (int i = 0; i < 20; ++i) {
            const Matroid m = corpus::random_matroid(rng, 7);
            const TutteCovering c = corpus::random_partial_covering(rng, m);
            const RefinedCovering r = refine_to_indecomposable(c);
            CHECK(static_cast<bool>(validate_covering(r.covering)));
            REQUIRE(r.factorizations.size() == r.covering.legs().size());
            for (std::size_t k = 0; k < r.factorizations.size(); ++k) {
                const LegFactorization& f = r.factorizations[k];
                CHECK(is_morphism(f.factor));
                CHECK(compose(c.legs()[f.through], f.factor) == r.covering.legs()[k]);
            }
        }
    }
}

TEST_SUITE("common refinement") {
    TEST_CASE("different targets are rejected") {
        const TutteCovering a = indecomposable_covering(Matroid::uniform(1, 2));
        const TutteCovering b = indecomposable_covering(Matroid::uniform(2, 3));
        CHECK_THROWS_AS((void)common_refinement(a, b), TargetMismatch);
    }

    TEST_CASE("a covering against itself gives identical map families") {
        const Matroid m = Matroid::uniform(2, 3);
        const TutteCovering c =
            covering_from_tree(expand_leaf(trivial_tree(m), DCTree::kRoot, "e1"));
        const CommonRefinement r = common_refinement(c, c);
        const RefinedCovering direct = refine_to_indecomposable(c);
        CHECK(r.covering == direct.covering);
        REQUIRE(r.into_first.size() == r.into_second.size());
        for (std::size_t i = 0; i < r.into_first.size(); ++i) {
            CHECK(r.into_first[i].through == r.into_second[i].through);
            CHECK(r.into_first[i].factor == r.into_second[i].factor);
        }
    }

    TEST_CASE("identity cover against its own refinement") {
        const Matroid m = Matroid::uniform(1, 2);
        const TutteCovering identity_cover = covering_from_tree(trivial_tree(m));
        const TutteCovering fine = indecomposable_covering(m);
        const CommonRefinement r = common_refinement(identity_cover, fine);
        CHECK(r.covering.legs().size() == 2);
        CHECK(leaf_class_multiset(r.covering) == leaf_class_multiset(fine));
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(compose(identity_cover.legs()[r.into_first[i].through],
                          r.into_first[i].factor) == r.covering.legs()[i]);
        }
    }

    TEST_CASE("min-index and max-index covers of U_{2,3} meet in three legs") {
        const Matroid m = Matroid::uniform(2, 3);
        const TutteCovering a = indecomposable_covering(m, PivotStrategy::min_index());
        const TutteCovering b = indecomposable_covering(m, PivotStrategy::max_index());
        const CommonRefinement r = common_refinement(a, b);
        CHECK(r.covering.legs().size() == 3);
        const ClassCounts expected = {{{0, 2}, 1}, {{0, 1}, 1}, {{1, 0}, 1}};
        CHECK(leaf_class_multiset(r.covering) == expected);
    }

    TEST_CASE("factorization contract on random covering pairs") {
        std::mt19937_64 rng(65);
        for (int i = 0; i < 20; ++i) {
            const Matroid m = corpus::random_matroid(rng, 6);
            const TutteCovering a = corpus::random_partial_covering(rng, m);
            const TutteCovering b = corpus::random_partial_covering(rng, m);
            const CommonRefinement r = common_refinement(a, b);
            const RefinedCovering rb = refine_to_indecomposable(b);

            CHECK(static_cast<bool>(validate_covering(r.covering)));
            const std::size_t legs = r.covering.legs().size();
            REQUIRE(r.into_first.size() == legs);
            REQUIRE(r.into_second.size() == legs);
            REQUIRE(r.matched_leg.size() == legs);

            std::vector<bool> used(legs, false);
            for (std::size_t k = 0; k < legs; ++k) {
                // Into the first covering: on-the-nose factorization.
                CHECK(is_morphism(r.into_first[k].factor));
                CHECK(compose(a.legs()[r.into_first[k].through], r.into_first[k].factor) ==
                      r.covering.legs()[k]);

                // Into the second: the factor routes through the matched leg of
                // b's refinement via a class-preserving leg isomorphism, so the
                // composite lands on that leg's image and class.
                CHECK(is_morphism(r.into_second[k].factor));
                const MatroidMorphism via_b =
                    compose(b.legs()[r.into_second[k].through], r.into_second[k].factor);
                CHECK(is_morphism(via_b));
                CHECK(via_b.source() == r.covering.legs()[k].source());

                const std::size_t mate = r.matched_leg[k];
                REQUIRE(mate < rb.covering.legs().size());
                CHECK_FALSE(used[mate]);  // the matching is a bijection
                used[mate] = true;
                const MatroidMorphism& fine_b = rb.covering.legs()[mate];
                CHECK(via_b.image_mask(via_b.source().ground().all()) ==
                      fine_b.image_mask(fine_b.source().ground().all()));
                CHECK(fine_b.source().indecomposable_class() ==
                      r.covering.legs()[k].source().indecomposable_class());
                CHECK(rb.factorizations[mate].through == r.into_second[k].through);
            }
        }
    }
}
