#pragma once

#include "qsgd/doubling.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qsgd {

/// A partition of a finite group into blocks of element indices. Block 0 is
/// always the identity singleton; keys are display labels per block.
struct Partition {
    FiniteGroup group;
    std::vector<std::string> keys;
    std::vector<std::vector<int>> blocks;

    /// Block index containing an element; -1 when uncovered.
    int block_of(int element) const;
};

/// Blocks disjoint, covering, identity block = {e}.
CheckList check_partition(const Partition& p);

/// Level sets of the BFS word length; throws when S does not generate.
Partition wordlength_partition(const GeneratingSet& s);

/// The truncated two-index partition of the finite permutations: blocks
/// F_{a,b} = { sigma : transposition length a, support radius b } over the
/// ground {-n..n} (Odd) or +-{1..n} (Even). Enumeration streams all
/// permutations of the ground; n <= 4.
struct SymPartition {
    GroundMode mode = GroundMode::Odd;
    std::vector<int> ground;
    std::vector<std::pair<int, int>> keys; // (length, radius), (0,0) first
    std::vector<std::vector<Permutation>> blocks;

    int block_of(const Permutation& p) const; // by recomputing the key
};

SymPartition sinfty_partition(GroundMode mode, int n);

CheckList check_sym_partition(const SymPartition& p);

/// Every block is setwise invariant under conjugation by the reflection.
CheckList check_reflection_preserves_blocks(const SymPartition& p, const Permutation& reflection);

struct OrthogonalFiltration {
    GroupAlgebra algebra;
    Partition partition; // V_i = span of block i
};

/// Verifies the three filtration conditions exactly against the canonical
/// trace: identity block spans the unit line, tau(a* b) = 0 across distinct
/// blocks, and the blocks jointly span (witness pair on failure).
CheckList check_orthogonal_filtration(const GroupAlgebra& a, const Partition& p);

/// Bundles algebra and partition after running the checks; throws if any
/// condition fails.
OrthogonalFiltration filtration_from_partition(const GroupAlgebra& a, const Partition& p);

/// alpha(V_i) inside V_i (x) Q, checked by exact membership of every
/// expansion term; witness names the offending element.
bool action_preserves_filtration(const Coaction& c, const OrthogonalFiltration& f,
                                 std::string* witness = nullptr);

/// Dimension of the subalgebra of the coalgebra generated by all slices
/// (f (x) id) alpha(v), f running over the coordinate functionals of each
/// block basis; span-closure under multiplication until stable.
int action_faithful_span(const Coaction& c);

/// Dimension of the bare slice span (no products); the secondary statistic.
int action_slice_rank(const Coaction& c);

} // namespace qsgd
