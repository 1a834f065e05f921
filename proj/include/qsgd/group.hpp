#pragma once

#include "qsgd/permutation.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qsgd {

/// A finite enumerated group: residues mod l under addition, or all
/// permutations of a small integer ground set. Elements are indices into a
/// fixed deterministic enumeration; index 0 is always the identity.
class FiniteGroup {
public:
    enum class Kind { Cyclic, Symmetric };

    static FiniteGroup cyclic(int l);
    /// Full enumeration; rejects |ground| > 8.
    static FiniteGroup symmetric(std::vector<int> ground);

    Kind kind() const;
    int size() const;
    int identity() const { return 0; }
    int op(int a, int b) const;
    int inverse(int a) const;
    int element_order(int a) const;
    bool is_abelian() const;

    int modulus() const;                       // cyclic only
    const std::vector<int>& ground() const;    // symmetric only
    const Permutation& permutation(int idx) const;
    int index_of(const Permutation& p) const;

    std::string element_name(int idx) const;

    /// One sorted index list per class; classes ordered by smallest member.
    std::vector<std::vector<int>> conjugacy_classes() const;

    /// Structural equality (same kind and same parameters).
    bool operator==(const FiniteGroup& o) const;
    bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

/// A symmetric generating set: closed under inverses, identity excluded.
/// Generator order is the input order (BFS neighbor order depends on it).
struct GeneratingSet {
    FiniteGroup group;
    std::vector<int> generators;

    static GeneratingSet make(FiniteGroup group, std::vector<int> generators);
};

/// Adjacent transpositions s_1..s_{n-1} of a symmetric group, in index order
/// of i.
GeneratingSet adjacent_transpositions(const FiniteGroup& sym);

/// {1, l-1} in Z/l (deduplicated; empty for l = 1).
GeneratingSet pm_one(const FiniteGroup& cyc);

/// All transpositions of a symmetric group.
GeneratingSet all_transpositions(const FiniteGroup& sym);

struct GroupAutomorphism {
    FiniteGroup group;
    std::vector<int> map; // element index -> element index

    int apply(int idx) const { return map[idx]; }
    bool is_identity() const;
    bool is_involution() const;
    GroupAutomorphism compose(const GroupAutomorphism& inner) const;
    bool operator==(const GroupAutomorphism& o) const {
        return group == o.group && map == o.map;
    }

    static GroupAutomorphism identity(FiniteGroup g);
    /// Validates that the map is a bijective homomorphism.
    static GroupAutomorphism from_images(FiniteGroup g, std::vector<int> map);
    static GroupAutomorphism conjugation(const FiniteGroup& g, int by);
};

/// BFS word lengths for every element; -1 where unreachable.
std::vector<int> word_lengths(const GeneratingSet& s);

/// Cayley-graph distance from the identity; throws (with an unreached
/// witness) if S does not generate the group.
int word_length_bfs(const GeneratingSet& s, int g);

/// Inversion count; cross-checked elsewhere against the BFS length for
/// adjacent transpositions.
int coxeter_length(const Permutation& sigma);

/// Sum of (cycle length - 1); the all-transpositions word length.
int transposition_length(const Permutation& sigma);

enum class GroundMode { Odd, Even }; // Z vs Z\{0} truncations

/// Smallest n with sigma(k) = k whenever |k| > n. Mode Even rejects grounds
/// containing 0.
int support_radius(const Permutation& sigma, GroundMode mode);

std::vector<int> fixed_points(const Permutation& pi);

/// s_i -> s_{n-i} on S_n ({1..n}, adjacent transpositions); realized as
/// conjugation by the order-reversing permutation.
GroupAutomorphism flip_automorphism(int n);

/// g -> g^{-1}; rejects non-abelian groups.
GroupAutomorphism inverse_automorphism(const FiniteGroup& g);

enum class ReflectionCenter { Zero, Half };

/// The reflection permutation of the ground: k -> -k (Zero) or k -> 1-k
/// (Half). Ground must be closed under the reflection.
Permutation reflection_permutation(const std::vector<int>& ground, ReflectionCenter center);

/// Conjugation by the reflection, as an automorphism of the full symmetric
/// group on the ground.
GroupAutomorphism reflection_conjugation(const std::vector<int>& ground, ReflectionCenter center);

/// Every automorphism of a small group (|G| <= 24), identity first,
/// deterministic order.
std::vector<GroupAutomorphism> automorphism_group(const FiniteGroup& g);

/// Some theta with theta.theta1 = theta2.theta, searching all of Aut(G);
/// std::nullopt when no conjugator exists. Identity is tried first.
std::optional<GroupAutomorphism> conjugate_in_aut(const FiniteGroup& g,
                                                  const GroupAutomorphism& theta1,
                                                  const GroupAutomorphism& theta2);

} // namespace qsgd
