#include "qsgd/literal.hpp"

#include "test_oracles.hpp"

#include <doctest.h>

#include <random>

using namespace qsgd;

TEST_CASE("element literals") {
    SUBCASE("cyclic difference") {
        Vector v = parse_element("1*c4:1 + -1*c4:3");
        GroupAlgebra a = group_algebra(FiniteGroup::cyclic(4));
        CHECK(v == a.element(1) - a.element(3));
    }
    SUBCASE("scaled tagged vector") {
        Vector v = parse_element("1/2+1/2i * xi:c3:0");
        CHECK(v.basis().factor(0).doubled);
        CHECK(v.coefficient(label1(Atom{Tag::Xi, 0})) ==
              Scalar(mpq_class(1, 2), mpq_class(1, 2)));
    }
    SUBCASE("permutation labels") {
        Vector v = parse_element("1*perm{ground=-2..2; (-1 0)(1 2)}");
        CHECK(v.basis().factor(0).group.kind() == FiniteGroup::Kind::Symmetric);
        CHECK(v.support_size() == 1);
    }
    SUBCASE("malformed tag reports the offset") {
        try {
            parse_element("1*zeta:c3:0");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.pos == 2);
        }
    }
    SUBCASE("mixed groups are rejected") {
        CHECK_THROWS_AS(parse_element("1*c4:1 + 1*c5:1"), ParseError);
        CHECK_THROWS_AS(parse_element("1*xi:c4:1 + 1*c4:2"), ParseError);
    }
    SUBCASE("out-of-range residues and bad syntax are rejected") {
        CHECK_THROWS_AS(parse_element("1*c4:7"), ParseError);
        CHECK_THROWS_AS(parse_element("1*c4:1 +"), ParseError);
        CHECK_THROWS_AS(parse_element("c4:1"), ParseError); // missing coefficient
        CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    }
}

TEST_CASE("scalar literals") {
    CHECK(parse_scalar("1/2+1/2i") == Scalar(mpq_class(1, 2), mpq_class(1, 2)));
    CHECK(parse_scalar("-1/3i") == Scalar(mpq_class(0), mpq_class(-1, 3)));
    CHECK(parse_scalar("3") == Scalar(3));
    CHECK(parse_scalar("1-1i") == Scalar(mpq_class(1), mpq_class(-1)));
    CHECK(parse_scalar(Scalar(mpq_class(-7, 5), mpq_class(2, 9)).str()) ==
          Scalar(mpq_class(-7, 5), mpq_class(2, 9)));
}

TEST_CASE("permutation literals round-trip") {
    Permutation p = Permutation::from_cycles(interval(-2, 2), {{-1, 0}, {1, 2}});
    CHECK(parse_permutation(p.str()) == p);
    Permutation id(interval(1, 3));
    CHECK(parse_permutation(id.str()) == id);
    Permutation even_ground = Permutation::transposition({-2, -1, 1, 2}, -2, 2);
    CHECK(parse_permutation(even_ground.str()) == even_ground);
}

TEST_CASE("serialize then parse is the identity on random literals") {
    std::mt19937 rng(0xd1ce);
    std::vector<FiniteGroup> groups{FiniteGroup::cyclic(9), FiniteGroup::cyclic(12),
                                    FiniteGroup::symmetric(interval(1, 3)),
                                    FiniteGroup::symmetric({-1, 0, 1}),
                                    FiniteGroup::symmetric({-2, -1, 1, 2})};
    int produced = 0;
    while (produced < 500) {
        const FiniteGroup& g = groups[produced % groups.size()];
        bool doubled = (produced / groups.size()) % 2 == 1;
        Basis basis = doubled ? Basis::doubled_basis(g) : Basis::group_basis(g);
        Vector v = qsgd::testing::random_vector(basis, rng, 4);
        if (v.is_zero()) continue;
        ++produced;
        std::string text = print_element(v);
        Vector back = parse_element(text);
        CHECK(back == v);
        CHECK(print_element(back) == text);
    }
}
