#include "qsgd/filtration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qsgd {

int Partition::block_of(int element) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int g : blocks[i])
            if (g == element) return static_cast<int>(i);
    return -1;
}

CheckList check_partition(const Partition& p) {
    CheckList out;
    {
        Check chk{"identity_block_singleton", true, ""};
        if (p.blocks.empty() || p.blocks[0] != std::vector<int>{p.group.identity()}) {
            chk.pass = false;
            chk.witness = "block 0";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"blocks_disjoint_cover", true, ""};
        std::vector<int> seen(p.group.size(), 0);
        for (const auto& block : p.blocks)
            for (int g : block) ++seen[g];
        for (int g = 0; g < p.group.size() && chk.pass; ++g)
            if (seen[g] != 1) {
                chk.pass = false;
                chk.witness = p.group.element_name(g) +
                              (seen[g] == 0 ? " uncovered" : " covered twice");
            }
        out.push_back(std::move(chk));
    }
    return out;
}

Partition wordlength_partition(const GeneratingSet& s) {
    std::vector<int> dist = word_lengths(s);
    int max_len = 0;
    for (int g = 0; g < s.group.size(); ++g) {
        if (dist[g] < 0)
            throw std::invalid_argument("wordlength_partition: S does not generate; unreached " +
                                        s.group.element_name(g));
        max_len = std::max(max_len, dist[g]);
    }
    Partition p;
    p.group = s.group;
    p.blocks.assign(max_len + 1, {});
    for (int g = 0; g < s.group.size(); ++g) p.blocks[dist[g]].push_back(g);
    for (int l = 0; l <= max_len; ++l) p.keys.push_back("l=" + std::to_string(l));
    return p;
}

namespace {

std::vector<int> sym_ground(GroundMode mode, int n) {
    if (n < 1) throw std::invalid_argument("sinfty_partition: truncation must be >= 1");
    if (n > 4)
        throw std::invalid_argument("sinfty_partition: truncation guard n <= 4 exceeded");
    std::vector<int> ground;
    if (mode == GroundMode::Odd) {
        ground = interval(-n, n);
    } else {
        for (int k = -n; k <= n; ++k)
            if (k != 0) ground.push_back(k);
    }
    return ground;
}

} // namespace

SymPartition sinfty_partition(GroundMode mode, int n) {
    SymPartition p;
    p.mode = mode;
    p.ground = sym_ground(mode, n);

    std::map<std::pair<int, int>, std::vector<Permutation>> blocks;
    std::vector<int> images = p.ground;
    do {
        Permutation sigma(p.ground, images);
        blocks[{transposition_length(sigma), support_radius(sigma, mode)}].push_back(sigma);
    } while (std::next_permutation(images.begin(), images.end()));

    // (0,0) = {e} first, the map order handles the rest
    for (auto& [key, block] : blocks) {
        p.keys.push_back(key);
        std::sort(block.begin(), block.end());
        p.blocks.push_back(std::move(block));
    }
    return p;
}

int SymPartition::block_of(const Permutation& sigma) const {
    std::pair<int, int> key{transposition_length(sigma), support_radius(sigma, mode)};
    auto it = std::find(keys.begin(), keys.end(), key);
    return it == keys.end() ? -1 : static_cast<int>(it - keys.begin());
}

CheckList check_sym_partition(const SymPartition& p) {
    CheckList out;
    {
        Check chk{"identity_block_singleton", true, ""};
        if (p.keys.empty() || p.keys[0] != std::pair<int, int>{0, 0} ||
            p.blocks[0] != std::vector<Permutation>{Permutation(p.ground)}) {
            chk.pass = false;
            chk.witness = "block (0,0)";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"blocks_disjoint_cover_finite", true, ""};
        long long total = 0;
        for (const auto& block : p.blocks) {
            total += static_cast<long long>(block.size());
            if (block.empty()) {
                chk.pass = false;
                chk.witness = "empty block";
            }
        }
        long long expected = 1;
        for (size_t k = 2; k <= p.ground.size(); ++k) expected *= static_cast<long long>(k);
        if (chk.pass && total != expected) {
            chk.pass = false;
            chk.witness = "covers " + std::to_string(total) + " of " + std::to_string(expected);
        }
        // disjointness: the key of each member matches its own block
        for (size_t i = 0; i < p.blocks.size() && chk.pass; ++i)
            for (const auto& sigma : p.blocks[i])
                if (p.block_of(sigma) != static_cast<int>(i)) {
                    chk.pass = false;
                    chk.witness = sigma.str();
                    break;
                }
        out.push_back(std::move(chk));
    }
    return out;
}

CheckList check_reflection_preserves_blocks(const SymPartition& p, const Permutation& reflection) {
    Check chk{"reflection_preserves_blocks", true, ""};
    Permutation inv = reflection.inverse();
    for (size_t i = 0; i < p.blocks.size() && chk.pass; ++i) {
        for (const auto& sigma : p.blocks[i]) {
            Permutation conj = reflection.compose(sigma).compose(inv);
            if (p.block_of(conj) != static_cast<int>(i)) {
                chk.pass = false;
                chk.witness = sigma.str();
                break;
            }
        }
    }
    return {chk};
}

CheckList check_orthogonal_filtration(const GroupAlgebra& a, const Partition& p) {
    CheckList out = check_partition(p);
    {
        Check chk{"v0_spans_unit", true, ""};
        if (p.blocks.empty() || p.blocks[0].size() != 1 ||
            p.blocks[0][0] != a.group.identity()) {
            chk.pass = false;
            chk.witness = "V_0 != C1";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"trace_orthogonality", true, ""};
        for (size_t i = 0; i < p.blocks.size() && chk.pass; ++i)
            for (size_t j = 0; j < p.blocks.size() && chk.pass; ++j) {
                if (i == j) continue;
                for (int g : p.blocks[i]) {
                    if (!chk.pass) break;
                    for (int h : p.blocks[j]) {
                        Vector prod = hopf_mult(a.hopf, hopf_star(a.hopf, a.element(g)),
                                                a.element(h));
                        if (!canonical_trace(a, prod).is_zero()) {
                            chk.pass = false;
                            chk.witness = a.group.element_name(g) + ", " + a.group.element_name(h);
                            break;
                        }
                    }
                }
            }
        out.push_back(std::move(chk));
    }
    {
        // blocks cover, so the union of the V_i spans; spanning is everything
        // in finite dimensions, hence a *-subalgebra.
        Check chk{"union_spans", true, ""};
        std::vector<int> seen(a.group.size(), 0);
        for (const auto& block : p.blocks)
            for (int g : block) seen[g] = 1;
        for (int g = 0; g < a.group.size(); ++g)
            if (!seen[g]) {
                chk.pass = false;
                chk.witness = a.group.element_name(g);
            }
        out.push_back(std::move(chk));
    }
    return out;
}

OrthogonalFiltration filtration_from_partition(const GroupAlgebra& a, const Partition& p) {
    CheckList checks = check_orthogonal_filtration(a, p);
    for (const auto& c : checks)
        if (!c.pass)
            throw std::invalid_argument("filtration_from_partition: " + c.name + " fails at " +
                                        c.witness);
    return OrthogonalFiltration{a, p};
}

bool action_preserves_filtration(const Coaction& c, const OrthogonalFiltration& f,
                                 std::string* witness) {
    std::vector<int> block_of(f.algebra.group.size(), -1);
    for (size_t i = 0; i < f.partition.blocks.size(); ++i)
        for (int g : f.partition.blocks[i]) block_of[g] = static_cast<int>(i);
    for (int g = 0; g < f.algebra.group.size(); ++g) {
        const Vector& image = c.map.image(label1(Atom{Tag::Plain, g}));
        for (const auto& [l, co] : image.coords()) {
            if (block_of[l[0].elem] != block_of[g]) {
                if (witness) *witness = f.algebra.group.element_name(g);
                return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<Vector> coaction_slices(const Coaction& c) {
    // (f (x) id) alpha(v) with f the coordinate functional of the first leg
    std::vector<Vector> slices;
    const int an = static_cast<int>(c.algebra.basis.dim());
    for (int i = 0; i < an; ++i) {
        Atom a = c.algebra.basis.factor(0).atom_at(i);
        const Vector& image = c.map.image(label1(a));
        std::map<Atom, Vector> per_first;
        for (const auto& [l, co] : image.coords()) {
            auto [it, inserted] = per_first.emplace(l[0], Vector(c.coalgebra.basis));
            it->second.add_term(Label{l[1]}, co);
        }
        for (auto& [first, slice] : per_first) slices.push_back(std::move(slice));
    }
    return slices;
}

} // namespace

int action_slice_rank(const Coaction& c) { return span_rank(coaction_slices(c)); }

int action_faithful_span(const Coaction& c) {
    SpanBuilder span(c.coalgebra.basis);
    std::vector<Vector> rows;
    std::vector<Vector> frontier;
    for (const Vector& s : coaction_slices(c)) {
        if (auto row = span.insert(s)) {
            rows.push_back(*row);
            frontier.push_back(*row);
        }
    }
    while (!frontier.empty()) {
        std::vector<Vector> next;
        std::vector<Vector> snapshot = rows;
        for (const Vector& u : frontier) {
            for (const Vector& v : snapshot) {
                if (auto row = span.insert(hopf_mult(c.coalgebra, u, v))) {
                    rows.push_back(*row);
                    next.push_back(*row);
                }
                if (auto row = span.insert(hopf_mult(c.coalgebra, v, u))) {
                    rows.push_back(*row);
                    next.push_back(*row);
                }
            }
        }
        frontier = std::move(next);
    }
    return span.rank();
}

} // namespace qsgd
