#pragma once

#include "qsgd/filtration.hpp"

namespace qsgd {

/// One finite stage of an inductive system: the group algebra with its
/// word-length filtration, the doubled Hopf algebra and its coaction.
struct TowerStage {
    int level = 0;
    GroupAlgebra algebra;
    GeneratingSet gens;
    Partition partition;
    DoubledHopf doubled;
    Coaction coaction;
};

/// Connecting morphisms between adjacent stages: rho on the base algebras
/// and its extension pi on the doublings.
struct ConnectingPair {
    LinearMap rho;
    LinearMap pi;
};

struct Tower {
    std::string name;
    std::vector<TowerStage> stages;
    std::vector<ConnectingPair> connecting; // stage i -> stage i+1
};

/// Stages Z/p^n (inverse automorphism, {+-1} word length) with connecting
/// maps lambda_t -> lambda_{p t}; p in {2,3,5,7}, p^stages <= 400.
Tower padic_tower(int p, int stages);

enum class Parity { Odd, Even };

/// Stages S_n for n = parity, parity+2, ... <= max_n (theta = generator
/// flip, Coxeter word length), with the generator-shift connecting maps;
/// max_n <= 6.
Tower symmetric_tower(Parity parity, int max_n);

struct TowerCheckOptions {
    long long axiom_guard = 1000;
    long long podles_guard = 250000;
    int faithful_max_base = 120;
};

/// Per-stage verification (filtration, axioms, Haar, coaction, filtration
/// preservation, faithfulness dichotomy), connecting-pair verification
/// (injective Hopf *-morphisms, equivariance, intertwining, length
/// behaviour) and composite compatibility across every stage triple.
CheckList check_tower(const Tower& t, const TowerCheckOptions& opts = {});

/// Bit-exact reproduction of the finite-cycle quantum symmetry formulas in
/// the doubling of C[Z/l] by the inverse: coproducts of A = xi(lambda_1) and
/// B = eta(lambda_1), commutativity of the carrier, and the action formula
/// alpha(lambda_1) = lambda_1 (x) A + lambda_{l-1} (x) B*. l = 4 is checked
/// too but flagged as outside the classical-form statement.
CheckList finsym_check(int l);

/// For even n: the binomial group-like scan xi(s_k) + mu eta(s_k) in the
/// doubling of C[S_{n+1}] is empty for every k (no length-one-preserving
/// connecting map exists); in the doubling of C[S_n] the unique admissible k
/// is n/2 with mu = +-1. 4 <= n <= 6.
CheckList nonexistence_scan(int n);

/// The equivariant injection S_{2k} -> S_{2k+1} obtained by skipping the
/// middle point: injective homomorphism, equivariance, and the failure of
/// length-one preservation (the middle generator maps to a length-3
/// element). 2k+1 <= 7.
CheckList gamma_embedding_check(int k);

/// Truncated two-index partitions: partition axioms, reflection invariance
/// of every block, well-definedness of the restricted coaction on the
/// radius-<=m subspaces, the restriction intertwining relation, and the
/// identification of the standard-ground stages with the interval-ground
/// stages. n <= 3.
CheckList partition_tower_check(GroundMode mode, int n);

/// Fixed-point counts of the two reflections (1 and 0), conjugation
/// invariance of the count, and the resulting non-conjugacy obstruction.
CheckList reflection_obstruction(int n);

} // namespace qsgd
