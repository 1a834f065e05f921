#include "qsgd/filtration.hpp"

#include <doctest.h>

#include <random>

using namespace qsgd;

TEST_CASE("word-length partitions") {
    SUBCASE("Z/5 with both generators") {
        FiniteGroup g = FiniteGroup::cyclic(5);
        Partition p = wordlength_partition(pm_one(g));
        REQUIRE(p.blocks.size() == 3);
        CHECK(p.blocks[0] == std::vector<int>{0});
        CHECK(p.blocks[1] == std::vector<int>{1, 4});
        CHECK(p.blocks[2] == std::vector<int>{2, 3});
    }
    SUBCASE("S3 block sizes by coxeter length") {
        FiniteGroup g = FiniteGroup::symmetric(interval(1, 3));
        Partition p = wordlength_partition(adjacent_transpositions(g));
        REQUIRE(p.blocks.size() == 4);
        CHECK(p.blocks[0].size() == 1);
        CHECK(p.blocks[1].size() == 2);
        CHECK(p.blocks[2].size() == 2);
        CHECK(p.blocks[3].size() == 1);
    }
    SUBCASE("Z/2") {
        Partition p = wordlength_partition(pm_one(FiniteGroup::cyclic(2)));
        REQUIRE(p.blocks.size() == 2);
        CHECK(p.blocks[0] == std::vector<int>{0});
        CHECK(p.blocks[1] == std::vector<int>{1});
    }
    SUBCASE("partition axioms for generated partitions") {
        for (const FiniteGroup& g :
             {FiniteGroup::cyclic(12), FiniteGroup::symmetric(interval(1, 5))}) {
            GeneratingSet s = g.kind() == FiniteGroup::Kind::Cyclic ? pm_one(g)
                                                                    : adjacent_transpositions(g);
            CHECK(all_pass(check_partition(wordlength_partition(s))));
        }
    }
}

TEST_CASE("two-index partitions of truncated permutation groups") {
    SUBCASE("odd truncation 1") {
        SymPartition p = sinfty_partition(GroundMode::Odd, 1);
        CHECK(all_pass(check_sym_partition(p)));
        auto it = std::find(p.keys.begin(), p.keys.end(), std::pair<int, int>{1, 1});
        REQUIRE(it != p.keys.end());
        CHECK(p.blocks[it - p.keys.begin()].size() == 3);
    }
    SUBCASE("even truncation 1") {
        SymPartition p = sinfty_partition(GroundMode::Even, 1);
        CHECK(all_pass(check_sym_partition(p)));
        auto it = std::find(p.keys.begin(), p.keys.end(), std::pair<int, int>{1, 1});
        REQUIRE(it != p.keys.end());
        REQUIRE(p.blocks[it - p.keys.begin()].size() == 1);
        CHECK(p.blocks[it - p.keys.begin()][0] ==
              Permutation::transposition({-1, 1}, -1, 1));
    }
    SUBCASE("identity block") {
        SymPartition p = sinfty_partition(GroundMode::Odd, 2);
        CHECK(p.keys[0] == std::pair<int, int>{0, 0});
        CHECK(p.blocks[0] == std::vector<Permutation>{Permutation(interval(-2, 2))});
    }
    SUBCASE("reflection invariance of every block, truncations up to 4") {
        for (int n = 1; n <= 4; ++n) {
            SymPartition podd = sinfty_partition(GroundMode::Odd, n);
            CHECK(all_pass(check_reflection_preserves_blocks(
                podd, reflection_permutation(podd.ground, ReflectionCenter::Zero))));
            SymPartition pev = sinfty_partition(GroundMode::Even, n);
            CHECK(all_pass(check_reflection_preserves_blocks(
                pev, reflection_permutation(pev.ground, ReflectionCenter::Zero))));
        }
    }
}

TEST_CASE("orthogonal filtrations from partitions") {
    SUBCASE("word-length filtrations pass") {
        GroupAlgebra a = group_algebra(FiniteGroup::symmetric(interval(1, 4)));
        Partition p = wordlength_partition(adjacent_transpositions(a.group));
        CHECK(all_pass(check_orthogonal_filtration(a, p)));
        CHECK_NOTHROW(filtration_from_partition(a, p));
    }
    SUBCASE("merged identity block fails the unit condition") {
        GroupAlgebra a = group_algebra(FiniteGroup::cyclic(4));
        Partition p;
        p.group = a.group;
        p.keys = {"0", "1"};
        p.blocks = {{0, 1}, {2, 3}};
        CheckList checks = check_orthogonal_filtration(a, p);
        bool unit_failed = false;
        for (const auto& c : checks)
            if ((c.name == "identity_block_singleton" || c.name == "v0_spans_unit") && !c.pass)
                unit_failed = true;
        CHECK(unit_failed);
        CHECK_THROWS_AS(filtration_from_partition(a, p), std::invalid_argument);
    }
    SUBCASE("trace orthogonality of distinct group elements") {
        GroupAlgebra a = group_algebra(FiniteGroup::cyclic(7));
        for (int g = 0; g < 7; ++g)
            for (int h = 0; h < 7; ++h) {
                Scalar t = canonical_trace(
                    a, hopf_mult(a.hopf, hopf_star(a.hopf, a.element(g)), a.element(h)));
                CHECK(t == (g == h ? Scalar(1) : Scalar()));
            }
    }
    SUBCASE("random refinements with a separated identity pass") {
        std::mt19937 rng(404);
        std::vector<FiniteGroup> groups{FiniteGroup::cyclic(6), FiniteGroup::cyclic(17),
                                        FiniteGroup::cyclic(24),
                                        FiniteGroup::symmetric(interval(1, 3)),
                                        FiniteGroup::symmetric(interval(1, 4))};
        for (int trial = 0; trial < 20; ++trial) {
            const FiniteGroup& g = groups[trial % groups.size()];
            std::uniform_int_distribution<int> nblocks(1, 4);
            int k = nblocks(rng);
            Partition p;
            p.group = g;
            p.blocks.assign(1 + k, {});
            p.blocks[0].push_back(g.identity());
            std::uniform_int_distribution<int> pick(1, k);
            for (int x = 0; x < g.size(); ++x)
                if (x != g.identity()) p.blocks[pick(rng)].push_back(x);
            for (int b = 0; b <= k; ++b) p.keys.push_back("b" + std::to_string(b));
            // drop empty blocks (an empty V_i is not a filtration block)
            Partition q;
            q.group = g;
            for (size_t b = 0; b < p.blocks.size(); ++b)
                if (!p.blocks[b].empty()) {
                    q.keys.push_back(p.keys[b]);
                    q.blocks.push_back(p.blocks[b]);
                }
            CHECK(all_pass(check_orthogonal_filtration(group_algebra(g), q)));
        }
    }
}

TEST_CASE("filtration preservation by doubling coactions") {
    SUBCASE("symmetric stages preserve the coxeter filtration") {
        for (int n : {3, 4}) {
            GroupAlgebra a = group_algebra(FiniteGroup::symmetric(interval(1, n)));
            DoubledHopf d = make_double(a, flip_automorphism(n));
            OrthogonalFiltration f = filtration_from_partition(
                a, wordlength_partition(adjacent_transpositions(a.group)));
            CHECK(action_preserves_filtration(doubling_coaction(d), f));
        }
    }
    SUBCASE("cyclic stages preserve the word-length filtration") {
        for (int l : {5, 6}) {
            GroupAlgebra a = group_algebra(FiniteGroup::cyclic(l));
            DoubledHopf d = make_double(a, inverse_automorphism(a.group));
            OrthogonalFiltration f =
                filtration_from_partition(a, wordlength_partition(pm_one(a.group)));
            CHECK(action_preserves_filtration(doubling_coaction(d), f));
        }
    }
    SUBCASE("an order-two automorphism that moves lengths is caught") {
        GroupAlgebra a = group_algebra(FiniteGroup::cyclic(8));
        GroupAutomorphism by3 =
            GroupAutomorphism::from_images(a.group, {0, 3, 6, 1, 4, 7, 2, 5});
        DoubledHopf d = make_double(a, by3); // 3*3 = 9 = 1 mod 8, an involution
        OrthogonalFiltration f =
            filtration_from_partition(a, wordlength_partition(pm_one(a.group)));
        std::string witness;
        CHECK_FALSE(action_preserves_filtration(doubling_coaction(d), f, &witness));
        CHECK(witness == "c8:1");
    }
}

TEST_CASE("faithfulness of the doubling coaction") {
    auto faithful_dim = [](const DoubledHopf& d) {
        return action_faithful_span(doubling_coaction(d));
    };
    SUBCASE("generated slice algebra dimensions") {
        GroupAlgebra z3 = group_algebra(FiniteGroup::cyclic(3));
        CHECK(faithful_dim(make_double(z3, inverse_automorphism(z3.group))) == 6);
        CHECK(faithful_dim(make_double(z3, GroupAutomorphism::identity(z3.group))) == 3);
        GroupAlgebra s3 = group_algebra(FiniteGroup::symmetric(interval(1, 3)));
        CHECK(faithful_dim(make_double(s3, flip_automorphism(3))) == 12);
    }
    SUBCASE("bare slice span is the secondary statistic") {
        GroupAlgebra z3 = group_algebra(FiniteGroup::cyclic(3));
        DoubledHopf d = make_double(z3, inverse_automorphism(z3.group));
        CHECK(action_slice_rank(doubling_coaction(d)) == 5);
    }
}
