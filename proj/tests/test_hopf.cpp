#include "qsgd/doubling.hpp"
#include "qsgd/hopf.hpp"

#include "test_oracles.hpp"

#include <doctest.h>

#include <random>

using namespace qsgd;

TEST_CASE("group algebra structure maps") {
    SUBCASE("Z/2") {
        GroupAlgebra a = group_algebra(FiniteGroup::cyclic(2));
        CHECK(a.basis.dim() == 2);
        Vector one_bar = a.element(1);
        CHECK(hopf_comult(a.hopf, one_bar) == tensor(one_bar, one_bar));
    }
    SUBCASE("antipode of a transposition is itself") {
        GroupAlgebra a = group_algebra(FiniteGroup::symmetric(interval(1, 3)));
        int t = a.group.index_of(Permutation::transposition(interval(1, 3), 1, 2));
        CHECK(hopf_antipode(a.hopf, a.element(t)) == a.element(t));
    }
    SUBCASE("lambda_1 lambda_4 = lambda_0 in C[Z/5]") {
        GroupAlgebra a = group_algebra(FiniteGroup::cyclic(5));
        CHECK(hopf_mult(a.hopf, a.element(1), a.element(4)) == a.element(0));
    }
}

TEST_CASE("canonical trace") {
    GroupAlgebra a = group_algebra(FiniteGroup::cyclic(6));
    SUBCASE("reads the identity coefficient") {
        CHECK(canonical_trace(a, a.element(0)) == Scalar(1));
        for (int g = 1; g < 6; ++g) CHECK(canonical_trace(a, a.element(g)) == Scalar());
    }
    SUBCASE("tau(x* x) is the coefficient norm sum, faithful") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 30; ++trial) {
            Vector x = qsgd::testing::random_vector(a.basis, rng, 4);
            Scalar got = canonical_trace(a, hopf_mult(a.hopf, hopf_star(a.hopf, x), x));
            mpq_class expected = 0;
            for (const auto& [l, c] : x.coords()) expected += c.norm();
            CHECK(got == Scalar(expected));
            CHECK(got.is_zero() == x.is_zero());
        }
    }
    SUBCASE("tracial on all basis pairs") {
        GroupAlgebra s4 = group_algebra(FiniteGroup::symmetric(interval(1, 4)));
        for (int g = 0; g < s4.group.size(); ++g)
            for (int h = 0; h < s4.group.size(); ++h)
                CHECK(canonical_trace(s4, hopf_mult(s4.hopf, s4.element(g), s4.element(h))) ==
                      canonical_trace(s4, hopf_mult(s4.hopf, s4.element(h), s4.element(g))));
        Functional tau = canonical_trace_functional(s4);
        CHECK(tau.tracial);
        CHECK(check_tracial(tau, s4.hopf));
        CHECK(tau(s4.element(0)) == Scalar(1));
    }
}

TEST_CASE("hopf axiom verification") {
    SUBCASE("group algebra of S4 passes") {
        GroupAlgebra a = group_algebra(FiniteGroup::symmetric(interval(1, 4)));
        CHECK(all_pass(verify_hopf_axioms(a.hopf)));
    }
    SUBCASE("doubling of C[S3] passes") {
        GroupAlgebra a = group_algebra(FiniteGroup::symmetric(interval(1, 3)));
        DoubledHopf d = make_double(a, flip_automorphism(3));
        CHECK(all_pass(verify_hopf_axioms(d.carrier)));
    }
    SUBCASE("corrupted antipode fails with a non-identity witness") {
        GroupAlgebra a = group_algebra(FiniteGroup::cyclic(4));
        HopfAlgebra bad = a.hopf;
        Basis basis = a.basis;
        bad.antipode = [basis](const Atom& x) { return Vector::basis_vector(basis, label1(x)); };
        CheckList checks = verify_hopf_axioms(bad);
        bool antipode_failed = false;
        for (const auto& c : checks)
            if (c.name == "antipode") {
                antipode_failed = !c.pass;
                CHECK(c.witness != "c4:0");
                CHECK(!c.witness.empty());
            }
        CHECK(antipode_failed);
    }
    SUBCASE("dimension guard reports a skip") {
        GroupAlgebra a = group_algebra(FiniteGroup::cyclic(8));
        AxiomOptions opts;
        opts.max_dim = 4;
        CheckList checks = verify_hopf_axioms(a.hopf, opts);
        REQUIRE(checks.size() == 1);
        CHECK(checks[0].pass);
        CHECK(checks[0].witness.rfind("skipped", 0) == 0);
    }
}

TEST_CASE("group-like elements") {
    GroupAlgebra a = group_algebra(FiniteGroup::cyclic(5));
    SUBCASE("every basis element is group-like") {
        for (int g = 0; g < 5; ++g) CHECK(is_grouplike(a.hopf, a.element(g)));
    }
    SUBCASE("a sum of two distinct basis elements is not") {
        CHECK_FALSE(is_grouplike(a.hopf, a.element(1) + a.element(2)));
    }
    SUBCASE("the binomial group-like of the doubled S4") {
        GroupAlgebra s4 = group_algebra(FiniteGroup::symmetric(interval(1, 4)));
        DoubledHopf d = make_double(s4, flip_automorphism(4));
        int s2 = adjacent_transpositions(s4.group).generators[1];
        Vector c4 = Vector::basis_vector(d.basis, label1(Atom{Tag::Xi, s2})) +
                    Vector::basis_vector(d.basis, label1(Atom{Tag::Eta, s2}));
        CHECK(is_grouplike(d.carrier, c4));
    }
    SUBCASE("exhaustive support-two scan finds exactly the basis") {
        std::vector<Scalar> coeffs{Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
        for (const FiniteGroup& g :
             {FiniteGroup::cyclic(6), FiniteGroup::symmetric(interval(1, 3))}) {
            GroupAlgebra alg = group_algebra(g);
            std::vector<Vector> found = grouplike_scan_support2(alg.hopf, coeffs);
            REQUIRE(static_cast<int>(found.size()) == g.size());
            for (int x = 0; x < g.size(); ++x) CHECK(found[x] == alg.element(x));
        }
    }
    SUBCASE("support-two scan on a doubling finds exactly p1 + p2 and p1 - p2") {
        // single tagged atoms are never group-like (the coproduct always has
        // an eta (x) eta term); over the +-1 patterns only the projection
        // combinations survive
        GroupAlgebra z3 = group_algebra(FiniteGroup::cyclic(3));
        DoubledHopf d = make_double(z3, inverse_automorphism(z3.group));
        std::vector<Vector> found =
            grouplike_scan_support2(d.carrier, {Scalar(1), Scalar(-1)});
        REQUIRE(found.size() == 2);
        CHECK(found[0] == d.p1 + d.p2);
        CHECK(found[1] == d.p1 - d.p2);
    }
}

TEST_CASE("center of the group algebra") {
    SUBCASE("abelian group: everything is central") {
        GroupAlgebra a = group_algebra(FiniteGroup::cyclic(5));
        CHECK(center_basis(a).size() == 5);
    }
    SUBCASE("class sums of S3") {
        GroupAlgebra a = group_algebra(FiniteGroup::symmetric(interval(1, 3)));
        std::vector<Vector> z = center_basis(a);
        CHECK(z.size() == 3);
        for (const Vector& v : z)
            for (int g = 0; g < a.group.size(); ++g)
                CHECK(hopf_mult(a.hopf, v, a.element(g)) == hopf_mult(a.hopf, a.element(g), v));
    }
    SUBCASE("center dimension equals the class count") {
        for (int n : {3, 4, 5}) {
            GroupAlgebra a = group_algebra(FiniteGroup::symmetric(interval(1, n)));
            CHECK(center_basis(a).size() == a.group.conjugacy_classes().size());
        }
        GroupAlgebra z12 = group_algebra(FiniteGroup::cyclic(12));
        CHECK(center_basis(z12).size() == 12);
    }
}

TEST_CASE("coproduct is a star homomorphism on basis products") {
    for (const FiniteGroup& g :
         {FiniteGroup::symmetric(interval(1, 4)), FiniteGroup::cyclic(12)}) {
        GroupAlgebra a = group_algebra(g);
        for (int x = 0; x < g.size(); ++x) {
            Vector dx = hopf_comult(a.hopf, a.element(x));
            Vector star_dx(a.basis.tensor(a.basis));
            for (const auto& [l, c] : dx.coords())
                star_dx.add_term(Label{a.hopf.star(l[0]), a.hopf.star(l[1])}, c.conj());
            CHECK(hopf_comult(a.hopf, hopf_star(a.hopf, a.element(x))) == star_dx);
            for (int y = 0; y < g.size(); ++y)
                CHECK(hopf_comult(a.hopf, hopf_mult(a.hopf, a.element(x), a.element(y))) ==
                      hopf_mult2(a.hopf, dx, hopf_comult(a.hopf, a.element(y))));
        }
    }
}
