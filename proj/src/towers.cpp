#include "qsgd/towers.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace qsgd {

namespace {

TowerStage make_cyclic_stage(int p, int n) {
    int order = 1;
    for (int i = 0; i < n; ++i) order *= p;
    TowerStage s;
    s.level = n;
    s.algebra = group_algebra(FiniteGroup::cyclic(order));
    s.gens = pm_one(s.algebra.group);
    s.partition = wordlength_partition(s.gens);
    s.doubled = make_double(s.algebra, inverse_automorphism(s.algebra.group));
    s.coaction = doubling_coaction(s.doubled);
    return s;
}

TowerStage make_symmetric_stage(int n) {
    TowerStage s;
    s.level = n;
    s.algebra = group_algebra(FiniteGroup::symmetric(interval(1, n)));
    s.gens = adjacent_transpositions(s.algebra.group);
    s.partition = wordlength_partition(s.gens);
    GroupAutomorphism theta = n >= 2 ? flip_automorphism(n)
                                     : GroupAutomorphism::identity(s.algebra.group);
    s.doubled = make_double(s.algebra, theta);
    s.coaction = doubling_coaction(s.doubled);
    return s;
}

ConnectingPair connect(const TowerStage& from, const TowerStage& to,
                       const std::vector<int>& image_of_element) {
    ConnectingPair c;
    c.rho = group_hom_linear(from.algebra, to.algebra, image_of_element);
    c.pi = extend_map(c.rho, from.doubled, to.doubled);
    return c;
}

std::string stage_prefix(const TowerStage& s) {
    return "stage" + std::to_string(s.level) + ".";
}

} // namespace

Tower padic_tower(int p, int stages) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw std::invalid_argument("padic_tower: p must be one of 2, 3, 5, 7");
    long long top = 1;
    for (int i = 0; i < stages; ++i) top *= p;
    if (stages < 1 || top > 400)
        throw std::invalid_argument("padic_tower: size guard p^stages <= 400 exceeded");

    Tower t;
    t.name = "padic(p=" + std::to_string(p) + ")";
    for (int n = 1; n <= stages; ++n) t.stages.push_back(make_cyclic_stage(p, n));
    for (int n = 0; n + 1 < stages; ++n) {
        const TowerStage& from = t.stages[n];
        const TowerStage& to = t.stages[n + 1];
        std::vector<int> images(from.algebra.group.size());
        for (int g = 0; g < from.algebra.group.size(); ++g)
            images[g] = (p * g) % to.algebra.group.modulus();
        t.connecting.push_back(connect(from, to, images));
    }
    return t;
}

Tower symmetric_tower(Parity parity, int max_n) {
    if (max_n > 6) throw std::invalid_argument("symmetric_tower: size guard max_n <= 6 exceeded");
    int first = parity == Parity::Odd ? 1 : 2;
    if (max_n < first) throw std::invalid_argument("symmetric_tower: no stages below " +
                                                   std::to_string(first));
    Tower t;
    t.name = std::string("symmetric(") + (parity == Parity::Odd ? "odd" : "even") + ")";
    for (int n = first; n <= max_n; n += 2) t.stages.push_back(make_symmetric_stage(n));
    for (size_t i = 0; i + 1 < t.stages.size(); ++i) {
        const TowerStage& from = t.stages[i];
        const TowerStage& to = t.stages[i + 1];
        const int n = from.level;
        std::vector<int> images(from.algebra.group.size());
        for (int g = 0; g < from.algebra.group.size(); ++g) {
            const Permutation& sigma = from.algebra.group.permutation(g);
            // shift to {2..n+1} inside {1..n+2}
            std::vector<int> img(n + 2);
            img[0] = 1;
            img[n + 1] = n + 2;
            for (int k = 2; k <= n + 1; ++k) img[k - 1] = sigma.apply(k - 1) + 1;
            images[g] = to.algebra.group.index_of(Permutation(interval(1, n + 2), img));
        }
        t.connecting.push_back(connect(from, to, images));
    }
    return t;
}

namespace {

void append(CheckList& out, const std::string& prefix, CheckList more) {
    for (auto& c : more) {
        c.name = prefix + c.name;
        out.push_back(std::move(c));
    }
}

void check_stage(CheckList& out, const TowerStage& s, const TowerCheckOptions& opts) {
    const std::string pre = stage_prefix(s);
    append(out, pre, check_orthogonal_filtration(s.algebra, s.partition));
    AxiomOptions ax;
    ax.max_dim = opts.axiom_guard;
    append(out, pre + "carrier.", verify_hopf_axioms(s.doubled.carrier, ax));
    append(out, pre, check_haar_invariance(s.doubled));
    CoactionOptions co;
    co.podles_guard = opts.podles_guard;
    append(out, pre + "coaction.", check_coaction(s.coaction, co));
    {
        Check chk{pre + "coaction_preserves_filtration", true, ""};
        std::string w;
        OrthogonalFiltration f{s.algebra, s.partition};
        if (!action_preserves_filtration(s.coaction, f, &w)) {
            chk.pass = false;
            chk.witness = w;
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{pre + "faithful_dichotomy", true, ""};
        if (s.algebra.group.size() > opts.faithful_max_base) {
            chk.witness = "skipped: |G| exceeds guard";
        } else {
            bool trivial = theta_is_identity(s.doubled);
            bool fixes = theta_fixes_generators(s.doubled, s.gens);
            if (trivial != fixes) {
                chk.pass = false;
                chk.witness = "hypothesis readings disagree";
            } else {
                int expected = trivial ? s.algebra.group.size() : 2 * s.algebra.group.size();
                int got = action_faithful_span(s.coaction);
                if (got != expected) {
                    chk.pass = false;
                    chk.witness = "generated slice dim " + std::to_string(got) + " expected " +
                                  std::to_string(expected);
                }
            }
        }
        out.push_back(std::move(chk));
    }
}

void check_pair(CheckList& out, const Tower& t, size_t i, const TowerCheckOptions& opts) {
    const TowerStage& from = t.stages[i];
    const TowerStage& to = t.stages[i + 1];
    const ConnectingPair& c = t.connecting[i];
    const std::string pre =
        "connect" + std::to_string(from.level) + "-" + std::to_string(to.level) + ".";

    {
        Check chk{pre + "rho_injective", true, ""};
        if (c.rho.rank() != static_cast<int>(c.rho.domain().dim())) {
            chk.pass = false;
            chk.witness = "rank " + std::to_string(c.rho.rank());
        }
        out.push_back(std::move(chk));
    }
    append(out, pre + "rho_", check_star_hopf_morphism("", c.rho, from.algebra.hopf,
                                                        to.algebra.hopf));
    {
        Check chk{pre + "rho_equivariant", true, ""};
        LinearMap th_from = automorphism_linear(from.algebra, from.doubled.theta);
        LinearMap th_to = automorphism_linear(to.algebra, to.doubled.theta);
        if (!(c.rho.compose(th_from) == th_to.compose(c.rho))) {
            chk.pass = false;
            chk.witness = "theta does not intertwine";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{pre + "pi_extends_rho", true, ""};
        if (!(c.pi == extend_map(c.rho, from.doubled, to.doubled))) {
            chk.pass = false;
            chk.witness = "pi is not the doubling extension";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{pre + "pi_injective", true, ""};
        if (c.pi.rank() != static_cast<int>(c.pi.domain().dim())) {
            chk.pass = false;
            chk.witness = "rank " + std::to_string(c.pi.rank());
        }
        out.push_back(std::move(chk));
    }
    append(out, pre + "pi_", check_star_hopf_morphism("", c.pi, from.doubled.carrier,
                                                       to.doubled.carrier));
    {
        // alpha_m o rho = (rho (x) pi) o alpha_n, stage content of the
        // intertwining condition and of the diagram over the extension
        Check chk{pre + "intertwines_coactions", true, ""};
        LinearMap lhs = to.coaction.map.compose(c.rho);
        LinearMap rhs = tensor_map(c.rho, c.pi).compose(from.coaction.map);
        if (!(lhs == rhs)) {
            chk.pass = false;
            chk.witness = "diagram does not commute";
        }
        out.push_back(std::move(chk));
    }
    if (from.algebra.group.kind() == FiniteGroup::Kind::Cyclic) {
        // equal word lengths map to equal word lengths, exhaustively
        Check chk{pre + "equal_length_preserved", true, ""};
        std::vector<int> len_from = word_lengths(from.gens);
        std::vector<int> len_to = word_lengths(to.gens);
        std::map<int, std::set<int>> image_lengths;
        for (int g = 0; g < from.algebra.group.size(); ++g) {
            const Vector& img = c.rho.image(label1(Atom{Tag::Plain, g}));
            for (const auto& [l, co] : img.coords())
                image_lengths[len_from[g]].insert(len_to[l[0].elem]);
        }
        for (const auto& [len, imgs] : image_lengths)
            if (imgs.size() != 1) {
                chk.pass = false;
                chk.witness = "length " + std::to_string(len) + " maps to several lengths";
            }
        out.push_back(std::move(chk));
    } else {
        // generators (length-one elements) map to length-one elements
        Check chk{pre + "length_one_preserved", true, ""};
        std::vector<int> len_to = word_lengths(to.gens);
        for (int g : from.gens.generators) {
            const Vector& img = c.rho.image(label1(Atom{Tag::Plain, g}));
            for (const auto& [l, co] : img.coords())
                if (len_to[l[0].elem] != 1) {
                    chk.pass = false;
                    chk.witness = from.algebra.group.element_name(g);
                }
        }
        out.push_back(std::move(chk));
    }
    out.push_back({pre + "uniqueness_search", true,
                   "skipped: extension candidate verified; uniqueness among all Hopf "
                   "morphisms not searched"});
    (void)opts;
}

} // namespace

CheckList check_tower(const Tower& t, const TowerCheckOptions& opts) {
    CheckList out;
    for (const TowerStage& s : t.stages) check_stage(out, s, opts);
    for (size_t i = 0; i + 1 < t.stages.size(); ++i) check_pair(out, t, i, opts);

    // composite compatibility pi_{m,k} o pi_{n,m} = pi_{n,k} on every triple
    const size_t N = t.stages.size();
    for (size_t a = 0; a < N; ++a)
        for (size_t b = a + 1; b < N; ++b)
            for (size_t c = b + 1; c < N; ++c) {
                auto compose_range = [&](size_t lo, size_t hi, bool doubled) {
                    LinearMap acc = doubled ? t.connecting[lo].pi : t.connecting[lo].rho;
                    for (size_t i = lo + 1; i < hi; ++i)
                        acc = (doubled ? t.connecting[i].pi : t.connecting[i].rho).compose(acc);
                    return acc;
                };
                Check chk{"triple" + std::to_string(t.stages[a].level) + "-" +
                              std::to_string(t.stages[b].level) + "-" +
                              std::to_string(t.stages[c].level) + ".compatible",
                          true, ""};
                LinearMap rho_ac = compose_range(a, c, false);
                LinearMap pi_ac = compose_range(a, c, true);
                LinearMap pi_ext = extend_map(rho_ac, t.stages[a].doubled, t.stages[c].doubled);
                if (!(pi_ac == pi_ext)) {
                    chk.pass = false;
                    chk.witness = "composite extension mismatch";
                }
                out.push_back(std::move(chk));
            }
    return out;
}

CheckList finsym_check(int l) {
    if (l < 3) throw std::invalid_argument("finsym_check: l must be >= 3");
    CheckList out;
    GroupAlgebra a = group_algebra(FiniteGroup::cyclic(l));
    DoubledHopf d = make_double(a, inverse_automorphism(a.group));
    Coaction c = doubling_coaction(d);

    Vector A = Vector::basis_vector(d.basis, label1(Atom{Tag::Xi, 1}));
    Vector B = Vector::basis_vector(d.basis, label1(Atom{Tag::Eta, 1}));
    Vector Astar = hopf_star(d.carrier, A);
    Vector Bstar = hopf_star(d.carrier, B);

    {
        Check chk{"comult_A", true, ""};
        Vector expected = tensor(A, A) + tensor(B, Bstar);
        if (hopf_comult(d.carrier, A) != expected) {
            chk.pass = false;
            chk.witness = "Delta(A)";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"comult_B", true, ""};
        Vector expected = tensor(A, B) + tensor(B, Astar);
        if (hopf_comult(d.carrier, B) != expected) {
            chk.pass = false;
            chk.witness = "Delta(B)";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"carrier_commutative", true, ""};
        const int n = static_cast<int>(d.basis.dim());
        for (int i = 0; i < n && chk.pass; ++i)
            for (int j = i + 1; j < n && chk.pass; ++j) {
                Atom x = d.basis.factor(0).atom_at(i);
                Atom y = d.basis.factor(0).atom_at(j);
                if (d.carrier.mult(x, y) != d.carrier.mult(y, x)) {
                    chk.pass = false;
                    chk.witness = d.basis.factor(0).atom_name(x) + ", " +
                                  d.basis.factor(0).atom_name(y);
                }
            }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"action_formula", true, ""};
        Vector lambda1 = a.element(1);
        Vector lambda_lm1 = a.element(l - 1);
        Vector expected = tensor(lambda1, A) + tensor(lambda_lm1, Bstar);
        if (c.map.image(label1(Atom{Tag::Plain, 1})) != expected) {
            chk.pass = false;
            chk.witness = "alpha(lambda_1)";
        }
        out.push_back(std::move(chk));
    }
    if (l == 4)
        out.push_back({"classical_form", true,
                       "skipped: l = 4 is outside the classical-form statement"});
    return out;
}

CheckList nonexistence_scan(int n) {
    if (n % 2 != 0 || n < 4 || n > 6)
        throw std::invalid_argument("nonexistence_scan: n must be even with 4 <= n <= 6");
    CheckList out;

    auto scalar_set = [](const std::vector<Scalar>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += v[i].str();
        }
        return s + "}";
    };

    {
        // doubling of C[S_{n+1}]: no admissible k at all
        GroupAlgebra a = group_algebra(FiniteGroup::symmetric(interval(1, n + 1)));
        DoubledHopf d = make_double(a, flip_automorphism(n + 1));
        GeneratingSet gens = adjacent_transpositions(a.group);
        for (int k = 1; k <= n; ++k) {
            int s_k = gens.generators[k - 1];
            std::vector<Scalar> sols = grouplike_binomial(d, s_k, s_k);
            Check chk{"empty_for_k" + std::to_string(k), sols.empty(),
                      sols.empty() ? "mu in {}; n+1-k = " + std::to_string(n + 1 - k) +
                                         " != " + std::to_string(k)
                                   : "unexpected mu in " + scalar_set(sols)};
            out.push_back(std::move(chk));
        }
    }
    {
        // control: doubling of C[S_n] admits exactly k = n/2 with mu = +-1
        GroupAlgebra a = group_algebra(FiniteGroup::symmetric(interval(1, n)));
        DoubledHopf d = make_double(a, flip_automorphism(n));
        GeneratingSet gens = adjacent_transpositions(a.group);
        for (int k = 1; k <= n - 1; ++k) {
            int s_k = gens.generators[k - 1];
            std::vector<Scalar> sols = grouplike_binomial(d, s_k, s_k);
            bool expected_hit = k == n / 2;
            std::vector<Scalar> expected =
                expected_hit ? std::vector<Scalar>{Scalar(-1), Scalar(1)} : std::vector<Scalar>{};
            Check chk{"control_k" + std::to_string(k), sols == expected,
                      "mu in " + scalar_set(sols)};
            out.push_back(std::move(chk));
        }
    }
    return out;
}

CheckList gamma_embedding_check(int k) {
    if (k < 1 || 2 * k + 1 > 7)
        throw std::invalid_argument("gamma_embedding_check: need 1 <= k with 2k+1 <= 7");
    CheckList out;
    const std::vector<int> small = interval(1, 2 * k);
    const std::vector<int> big = interval(1, 2 * k + 1);

    // skip the middle point k+1 of the bigger ground
    auto inject = [&](int j) { return j <= k ? j : j + 1; };
    auto gamma = [&](const Permutation& sigma) {
        Permutation id(big);
        std::vector<int> images = id.ground();
        for (int j : small) images[inject(j) - 1] = inject(sigma.apply(j));
        return Permutation(big, images);
    };
    auto theta = [](const Permutation& sigma) {
        const auto& g = sigma.ground();
        int n = static_cast<int>(g.size());
        std::vector<int> rev(n);
        for (int i = 0; i < n; ++i) rev[i] = g[n - 1 - i];
        Permutation w0(g, rev);
        return w0.compose(sigma).compose(w0);
    };

    std::vector<Permutation> elements;
    {
        std::vector<int> images = small;
        do elements.emplace_back(small, images);
        while (std::next_permutation(images.begin(), images.end()));
    }

    {
        Check chk{"injective", true, ""};
        std::set<Permutation> images;
        for (const auto& sigma : elements) images.insert(gamma(sigma));
        if (images.size() != elements.size()) {
            chk.pass = false;
            chk.witness = "collision";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"homomorphism", true, ""};
        for (const auto& sigma : elements) {
            if (!chk.pass) break;
            Permutation gs = gamma(sigma);
            for (const auto& tau : elements)
                if (gamma(sigma.compose(tau)) != gs.compose(gamma(tau))) {
                    chk.pass = false;
                    chk.witness = sigma.str() + ", " + tau.str();
                    break;
                }
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"equivariant", true, ""};
        for (const auto& sigma : elements)
            if (gamma(theta(sigma)) != theta(gamma(sigma))) {
                chk.pass = false;
                chk.witness = sigma.str();
                break;
            }
        out.push_back(std::move(chk));
    }
    {
        // gamma(s_k) = s_k s_{k+1} s_k, of Coxeter length 3
        Check chk{"middle_generator_length_three", true, ""};
        Permutation middle = Permutation::transposition(small, k, k + 1);
        Permutation image = gamma(middle);
        Permutation sk = Permutation::transposition(big, k, k + 1);
        Permutation sk1 = Permutation::transposition(big, k + 1, k + 2);
        if (image != sk.compose(sk1).compose(sk) || coxeter_length(image) != 3) {
            chk.pass = false;
            chk.witness = image.str();
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"length_one_not_preserved", true, ""};
        bool some_long = false;
        for (int j : small) {
            if (j == 2 * k) continue; // s_j needs j+1 in the ground
            Permutation gen = Permutation::transposition(small, j, j + 1);
            if (coxeter_length(gamma(gen)) != 1) some_long = true;
        }
        if (!some_long) {
            chk.pass = false;
            chk.witness = "all generators stay length one";
        }
        out.push_back(std::move(chk));
    }
    return out;
}

namespace {

struct CoactionTerm {
    Permutation first;
    Tag tag;
    Permutation second;
    bool operator<(const CoactionTerm& o) const {
        if (first != o.first) return first < o.first;
        if (tag != o.tag) return tag < o.tag;
        return second < o.second;
    }
    bool operator==(const CoactionTerm& o) const = default;
};

// alpha(sigma) = sigma (x) xi(sigma) + kappa(sigma) (x) eta(kappa(sigma))
// with kappa = conjugation by the reflection, evaluated on raw permutations.
std::set<CoactionTerm> coaction_terms(const Permutation& sigma, const Permutation& reflection) {
    Permutation conj = reflection.compose(sigma).compose(reflection.inverse());
    return {CoactionTerm{sigma, Tag::Xi, sigma}, CoactionTerm{conj, Tag::Eta, conj}};
}

} // namespace

CheckList partition_tower_check(GroundMode mode, int n) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("partition_tower_check: truncation guard n <= 3 exceeded");
    CheckList out;
    SymPartition p = sinfty_partition(mode, n);
    append(out, "partition.", check_sym_partition(p));

    // the reflection in the partition's own coordinates: about 0 for the Z
    // truncation, negation of +-{1..n} for the Z\{0} truncation
    Permutation reflection = reflection_permutation(p.ground, ReflectionCenter::Zero);
    append(out, "partition.", check_reflection_preserves_blocks(p, reflection));

    if (mode == GroundMode::Even) {
        // the half-reflection of {-n+1..n} is negation under the fixed
        // order-preserving relabeling onto +-{1..n}
        Check chk{"identify.half_reflection_is_negation", true, ""};
        Permutation half = reflection_permutation(interval(-n + 1, n), ReflectionCenter::Half);
        if (relabel(half, p.ground) != reflection) {
            chk.pass = false;
            chk.witness = relabel(half, p.ground).str();
        }
        out.push_back(std::move(chk));
    } else {
        // theta_{2n+1} (generator flip) is conjugation by the reflection
        // about 0 under the {1..2n+1} <-> {-n..n} identification
        Check chk{"identify.flip_is_reflection_conjugation", true, ""};
        FiniteGroup std_group = FiniteGroup::symmetric(interval(1, 2 * n + 1));
        GroupAutomorphism flip = flip_automorphism(2 * n + 1);
        for (int g = 0; g < std_group.size() && chk.pass; ++g) {
            Permutation sigma = relabel(std_group.permutation(g), p.ground);
            Permutation lhs = relabel(std_group.permutation(flip.map[g]), p.ground);
            Permutation rhs = reflection.compose(sigma).compose(reflection.inverse());
            if (lhs != rhs) {
                chk.pass = false;
                chk.witness = std_group.element_name(g);
            }
        }
        out.push_back(std::move(chk));
    }

    // restriction of the coaction to the radius <= m subspaces
    for (int m = 1; m < n; ++m) {
        Check chk{"restrict.radius" + std::to_string(m) + "_closed", true, ""};
        for (size_t b = 0; b < p.blocks.size() && chk.pass; ++b) {
            if (p.keys[b].second > m) continue;
            for (const auto& sigma : p.blocks[b]) {
                Permutation conj = reflection.compose(sigma).compose(reflection.inverse());
                int radius = support_radius(conj, mode);
                if (radius > m) {
                    chk.pass = false;
                    chk.witness = sigma.str();
                    break;
                }
            }
        }
        out.push_back(std::move(chk));
    }

    // restriction intertwining: beta_{m+1} o ext = (ext (x) id) o beta_m
    for (int m = 1; m < n; ++m) {
        Check chk{"restrict.intertwine" + std::to_string(m) + "-" + std::to_string(m + 1), true,
                  ""};
        std::vector<int> small_ground, mid_ground;
        if (mode == GroundMode::Odd) {
            small_ground = interval(-m, m);
            mid_ground = interval(-m - 1, m + 1);
        } else {
            for (int v = -m; v <= m; ++v)
                if (v != 0) small_ground.push_back(v);
            for (int v = -m - 1; v <= m + 1; ++v)
                if (v != 0) mid_ground.push_back(v);
        }
        Permutation refl_small = reflection_permutation(small_ground, ReflectionCenter::Zero);
        Permutation refl_mid = reflection_permutation(mid_ground, ReflectionCenter::Zero);

        std::vector<int> images = small_ground;
        do {
            Permutation sigma(small_ground, images);
            // beta_m with second legs extended to the truncation ground
            auto lift = [&](std::set<CoactionTerm> terms, bool extend_first) {
                std::set<CoactionTerm> lifted;
                for (const auto& term : terms)
                    lifted.insert(CoactionTerm{
                        extend_first ? extend_identity(term.first, mid_ground) : term.first,
                        term.tag, extend_identity(term.second, p.ground)});
                return lifted;
            };
            std::set<CoactionTerm> rhs = lift(coaction_terms(sigma, refl_small), true);
            std::set<CoactionTerm> lhs;
            for (const auto& term :
                 coaction_terms(extend_identity(sigma, mid_ground), refl_mid))
                lhs.insert(CoactionTerm{term.first, term.tag,
                                        extend_identity(term.second, p.ground)});
            if (lhs != rhs) {
                chk.pass = false;
                chk.witness = sigma.str();
                break;
            }
        } while (std::next_permutation(images.begin(), images.end()));
        out.push_back(std::move(chk));
    }

    // the inclusion of consecutive truncations is the generator-shift map of
    // the standard-ground stages
    for (int m = 1; m < n; ++m) {
        int small_n = mode == GroundMode::Odd ? 2 * m + 1 : 2 * m;
        int big_n = small_n + 2;
        Check chk{"identify.inclusion_is_shift" + std::to_string(small_n) + "-" +
                      std::to_string(big_n),
                  true, ""};
        std::vector<int> small_ground, big_ground;
        if (mode == GroundMode::Odd) {
            small_ground = interval(-m, m);
            big_ground = interval(-m - 1, m + 1);
        } else {
            small_ground = interval(-m + 1, m);
            big_ground = interval(-m, m + 1);
        }
        FiniteGroup small_std = FiniteGroup::symmetric(interval(1, small_n));
        for (int g = 0; g < small_std.size() && chk.pass; ++g) {
            const Permutation& sigma = small_std.permutation(g);
            // path A: relabel to the interval ground, extend by identity, relabel back
            Permutation a = relabel(
                extend_identity(relabel(sigma, small_ground), big_ground), interval(1, big_n));
            // path B: the generator shift, acting on {2..small_n+1}
            std::vector<int> img(big_n);
            img[0] = 1;
            img[big_n - 1] = big_n;
            for (int v = 2; v <= small_n + 1; ++v) img[v - 1] = sigma.apply(v - 1) + 1;
            Permutation b(interval(1, big_n), img);
            if (a != b) {
                chk.pass = false;
                chk.witness = sigma.str();
            }
        }
        out.push_back(std::move(chk));
    }
    return out;
}

CheckList reflection_obstruction(int n) {
    if (n < 1) throw std::invalid_argument("reflection_obstruction: n must be >= 1");
    CheckList out;
    Permutation odd = reflection_permutation(interval(-n, n), ReflectionCenter::Zero);
    Permutation even = reflection_permutation(interval(-n + 1, n), ReflectionCenter::Half);

    {
        Check chk{"odd_fixed_count", true, ""};
        auto fixed = fixed_points(odd);
        if (fixed != std::vector<int>{0}) {
            chk.pass = false;
            chk.witness = "count " + std::to_string(fixed.size());
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"even_fixed_count", true, ""};
        if (!fixed_points(even).empty()) {
            chk.pass = false;
            chk.witness = "count " + std::to_string(fixed_points(even).size());
        }
        out.push_back(std::move(chk));
    }
    {
        // |Fix(sigma pi sigma^-1)| = |Fix(pi)| on seeded random conjugators
        Check chk{"conjugation_preserves_fixed_count", true, ""};
        std::mt19937 rng(0x0b57ac1e);
        for (const Permutation* pi : {&odd, &even}) {
            size_t expected = pi->fixed_points().size();
            for (int trial = 0; trial < 100 && chk.pass; ++trial) {
                std::vector<int> images = pi->ground();
                std::shuffle(images.begin(), images.end(), rng);
                Permutation sigma(pi->ground(), images);
                Permutation conj = sigma.compose(*pi).compose(sigma.inverse());
                if (conj.fixed_points().size() != expected) {
                    chk.pass = false;
                    chk.witness = sigma.str();
                }
            }
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"reflections_not_conjugate", true, ""};
        if (odd.fixed_points().size() == even.fixed_points().size()) {
            chk.pass = false;
            chk.witness = "fixed-point counts agree";
        }
        out.push_back(std::move(chk));
    }
    return out;
}

} // namespace qsgd
