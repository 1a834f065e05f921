#include "qsgd/towers.hpp"

#include <doctest.h>

using namespace qsgd;

namespace {

const Check* find_check(const CheckList& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("p-adic tower stages and connecting maps") {
    Tower t = padic_tower(3, 3);
    REQUIRE(t.stages.size() == 3);
    REQUIRE(t.connecting.size() == 2);

    SUBCASE("the connecting map sends lambda_1 to lambda_p") {
        const LinearMap& rho = t.connecting[0].rho;
        CHECK(rho.image(label1(Atom{Tag::Plain, 1})) == t.stages[1].algebra.element(3));
    }
    SUBCASE("equal word lengths stay equal") {
        // lengths of {1,2} in Z/3 are both 1; the images {3,6} in Z/9 have length 3
        std::vector<int> len9 = word_lengths(t.stages[1].gens);
        CHECK(word_lengths(t.stages[0].gens)[1] == word_lengths(t.stages[0].gens)[2]);
        CHECK(len9[3] == 3);
        CHECK(len9[6] == 3);
    }
    SUBCASE("full tower verification") {
        CHECK(all_pass(check_tower(t)));
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(padic_tower(4, 2), std::invalid_argument);
        CHECK_THROWS_AS(padic_tower(5, 4), std::invalid_argument);
    }
}

TEST_CASE("cyclic quantum symmetry formula reproduction") {
    SUBCASE("l = 5 matches bit for bit") {
        CHECK(all_pass(finsym_check(5)));
    }
    SUBCASE("l = 3 carrier is commutative") {
        CheckList checks = finsym_check(3);
        const Check* c = find_check(checks, "carrier_commutative");
        REQUIRE(c != nullptr);
        CHECK(c->pass);
    }
    SUBCASE("l = 4 matches but carries the exclusion note") {
        CheckList checks = finsym_check(4);
        CHECK(all_pass(checks));
        const Check* note = find_check(checks, "classical_form");
        REQUIRE(note != nullptr);
        CHECK(note->witness.rfind("skipped", 0) == 0);
    }
    SUBCASE("l below 3 rejected") {
        CHECK_THROWS_AS(finsym_check(2), std::invalid_argument);
    }
}

TEST_CASE("symmetric towers") {
    SUBCASE("generator shift on the odd tower") {
        Tower t = symmetric_tower(Parity::Odd, 5);
        REQUIRE(t.stages.size() == 3); // S1, S3, S5
        const TowerStage& s3 = t.stages[1];
        const TowerStage& s5 = t.stages[2];
        int s1_gen = adjacent_transpositions(s3.algebra.group).generators[0];
        int s2_gen = adjacent_transpositions(s5.algebra.group).generators[1];
        CHECK(t.connecting[1].rho.image(label1(Atom{Tag::Plain, s1_gen})) ==
              s5.algebra.element(s2_gen));
    }
    SUBCASE("odd tower up to S5 verifies") {
        CHECK(all_pass(check_tower(symmetric_tower(Parity::Odd, 5))));
    }
    SUBCASE("even tower up to S4 verifies") {
        CHECK(all_pass(check_tower(symmetric_tower(Parity::Even, 4))));
    }
    SUBCASE("haar value at the S4 stage") {
        Tower t = symmetric_tower(Parity::Even, 4);
        const DoubledHopf& d = t.stages[1].doubled;
        CHECK(d.haar(Vector::basis_vector(d.basis, label1(Atom{Tag::Xi, 0}))) ==
              Scalar(mpq_class(1, 2)));
    }
    SUBCASE("size guard") {
        CHECK_THROWS_AS(symmetric_tower(Parity::Even, 8), std::invalid_argument);
    }
}

TEST_CASE("group-like obstruction scan at even stages") {
    CheckList checks = nonexistence_scan(4);
    SUBCASE("no admissible mu in the doubled S5") {
        for (int k = 1; k <= 4; ++k) {
            const Check* c = find_check(checks, "empty_for_k" + std::to_string(k));
            REQUIRE(c != nullptr);
            CHECK(c->pass);
        }
    }
    SUBCASE("the control stage admits exactly the middle generator") {
        const Check* hit = find_check(checks, "control_k2");
        REQUIRE(hit != nullptr);
        CHECK(hit->pass);
        CHECK(hit->witness == "mu in {-1, 1}");
        const Check* miss = find_check(checks, "control_k1");
        REQUIRE(miss != nullptr);
        CHECK(miss->pass);
        CHECK(miss->witness == "mu in {}");
    }
    SUBCASE("odd n rejected") {
        CHECK_THROWS_AS(nonexistence_scan(5), std::invalid_argument);
    }
}

TEST_CASE("middle-skipping embeddings of even symmetric groups") {
    SUBCASE("k = 1: the image of the generator has length three") {
        CheckList checks = gamma_embedding_check(1);
        CHECK(all_pass(checks));
        REQUIRE(find_check(checks, "middle_generator_length_three") != nullptr);
    }
    SUBCASE("k = 2: homomorphism on all pairs of S4") {
        CHECK(all_pass(gamma_embedding_check(2)));
    }
    SUBCASE("guard") {
        CHECK_THROWS_AS(gamma_embedding_check(4), std::invalid_argument);
    }
}

TEST_CASE("partition towers at small truncations") {
    for (int n = 1; n <= 2; ++n) {
        CHECK(all_pass(partition_tower_check(GroundMode::Odd, n)));
        CHECK(all_pass(partition_tower_check(GroundMode::Even, n)));
    }
    SUBCASE("guard above n = 3") {
        CHECK_THROWS_AS(partition_tower_check(GroundMode::Odd, 4), std::invalid_argument);
    }
}

TEST_CASE("reflection fixed-point obstruction") {
    for (int n : {1, 3}) {
        CheckList checks = reflection_obstruction(n);
        CHECK(all_pass(checks));
        const Check* odd = find_check(checks, "odd_fixed_count");
        const Check* even = find_check(checks, "even_fixed_count");
        REQUIRE(odd != nullptr);
        REQUIRE(even != nullptr);
        CHECK(odd->pass);
        CHECK(even->pass);
    }
}
