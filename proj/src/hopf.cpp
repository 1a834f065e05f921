#include "qsgd/hopf.hpp"

#include <random>
#include <stdexcept>

namespace qsgd {

bool all_pass(const CheckList& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Vector hopf_mult(const HopfAlgebra& h, const Vector& x, const Vector& y) {
    Vector out(h.basis);
    for (const auto& [lx, cx] : x.coords())
        for (const auto& [ly, cy] : y.coords())
            out += h.mult(lx[0], ly[0]).scaled(cx * cy);
    return out;
}

Vector hopf_comult(const HopfAlgebra& h, const Vector& x) {
    Vector out(h.basis.tensor(h.basis));
    for (const auto& [l, c] : x.coords()) out += h.comult(l[0]).scaled(c);
    return out;
}

Scalar hopf_counit(const HopfAlgebra& h, const Vector& x) {
    Scalar out;
    for (const auto& [l, c] : x.coords()) out += c * h.counit(l[0]);
    return out;
}

Vector hopf_antipode(const HopfAlgebra& h, const Vector& x) {
    Vector out(h.basis);
    for (const auto& [l, c] : x.coords()) out += h.antipode(l[0]).scaled(c);
    return out;
}

Vector hopf_star(const HopfAlgebra& h, const Vector& x) {
    Vector out(h.basis);
    for (const auto& [l, c] : x.coords()) out.add_term(label1(h.star(l[0])), c.conj());
    return out;
}

Vector hopf_mult2(const HopfAlgebra& h, const Vector& u, const Vector& v) {
    Vector out(u.basis());
    for (const auto& [lu, cu] : u.coords())
        for (const auto& [lv, cv] : v.coords()) {
            Vector left = h.mult(lu[0], lv[0]);
            Vector right = h.mult(lu[1], lv[1]);
            out += tensor(left, right).scaled(cu * cv);
        }
    return out;
}

GroupAlgebra group_algebra(FiniteGroup g) {
    GroupAlgebra a;
    a.group = g;
    a.basis = Basis::group_basis(g);
    Basis basis = a.basis;

    a.hopf.basis = basis;
    a.hopf.mult = [g, basis](const Atom& x, const Atom& y) {
        return Vector::basis_vector(basis, label1(Atom{Tag::Plain, g.op(x.elem, y.elem)}));
    };
    a.hopf.unit = Vector::basis_vector(basis, label1(Atom{Tag::Plain, g.identity()}));
    a.hopf.comult = [basis](const Atom& x) {
        Vector out(basis.tensor(basis));
        out.add_term(Label{x, x}, Scalar(1));
        return out;
    };
    a.hopf.counit = [](const Atom&) { return Scalar(1); };
    a.hopf.antipode = [g, basis](const Atom& x) {
        return Vector::basis_vector(basis, label1(Atom{Tag::Plain, g.inverse(x.elem)}));
    };
    a.hopf.star = [g](const Atom& x) { return Atom{Tag::Plain, g.inverse(x.elem)}; };
    return a;
}

Scalar canonical_trace(const GroupAlgebra& a, const Vector& x) {
    return x.coefficient(label1(Atom{Tag::Plain, a.group.identity()}));
}

Scalar Functional::operator()(const Vector& x) const {
    Scalar out;
    for (const auto& [l, c] : x.coords()) {
        auto it = values.find(l[0]);
        if (it != values.end()) out += c * it->second;
    }
    return out;
}

Functional canonical_trace_functional(const GroupAlgebra& a) {
    Functional f;
    f.basis = a.basis;
    f.tracial = true;
    f.values[Atom{Tag::Plain, a.group.identity()}] = Scalar(1);
    return f;
}

bool check_tracial(const Functional& f, const HopfAlgebra& h, std::string* witness) {
    const int n = static_cast<int>(h.basis.dim());
    for (int i = 0; i < n; ++i) {
        Atom a = h.basis.factor(0).atom_at(i);
        for (int j = i + 1; j < n; ++j) {
            Atom b = h.basis.factor(0).atom_at(j);
            if (f(h.mult(a, b)) != f(h.mult(b, a))) {
                if (witness)
                    *witness = h.basis.factor(0).atom_name(a) + ", " +
                               h.basis.factor(0).atom_name(b);
                return false;
            }
        }
    }
    return true;
}

namespace {

std::string atom_name(const HopfAlgebra& h, const Atom& a) {
    return h.basis.factor(0).atom_name(a);
}

} // namespace

CheckList verify_hopf_axioms(const HopfAlgebra& h, const AxiomOptions& opts) {
    CheckList out;
    const long long dim = h.basis.dim();
    if (dim > opts.max_dim) {
        out.push_back({"axioms", true,
                       "skipped: dim " + std::to_string(dim) + " exceeds guard " +
                           std::to_string(opts.max_dim)});
        return out;
    }
    const int n = static_cast<int>(dim);
    auto atom = [&](int i) { return h.basis.factor(0).atom_at(i); };
    auto vec = [&](int i) { return Vector::basis_vector(h.basis, label1(atom(i))); };

    // unit: 1x = x = x1
    {
        Check c{"unit", true, ""};
        for (int i = 0; i < n && c.pass; ++i) {
            Vector x = vec(i);
            if (hopf_mult(h, h.unit, x) != x || hopf_mult(h, x, h.unit) != x) {
                c.pass = false;
                c.witness = atom_name(h, atom(i));
            }
        }
        out.push_back(std::move(c));
    }

    // associativity: exhaustive on small bases, seeded samples above
    {
        Check c{"associativity", true, ""};
        auto check_triple = [&](int i, int j, int k) {
            Vector ab_c = hopf_mult(h, hopf_mult(h, vec(i), vec(j)), vec(k));
            Vector a_bc = hopf_mult(h, vec(i), hopf_mult(h, vec(j), vec(k)));
            if (ab_c != a_bc) {
                c.pass = false;
                c.witness = atom_name(h, atom(i)) + ", " + atom_name(h, atom(j)) + ", " +
                            atom_name(h, atom(k));
                return false;
            }
            return true;
        };
        if (n <= opts.exhaustive_limit) {
            for (int i = 0; i < n && c.pass; ++i)
                for (int j = 0; j < n && c.pass; ++j)
                    for (int k = 0; k < n && c.pass; ++k) check_triple(i, j, k);
        } else {
            std::mt19937 rng(opts.seed);
            std::uniform_int_distribution<int> pick(0, n - 1);
            for (int t = 0; t < opts.sampled_triples && c.pass; ++t)
                check_triple(pick(rng), pick(rng), pick(rng));
        }
        out.push_back(std::move(c));
    }

    // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    {
        Check c{"coassociativity", true, ""};
        for (int i = 0; i < n && c.pass; ++i) {
            Vector d = hopf_comult(h, vec(i));
            Vector left = apply_on_leg(h.comult, h.basis.tensor(h.basis), d, 0);
            Vector right = apply_on_leg(h.comult, h.basis.tensor(h.basis), d, 1);
            if (left != right) {
                c.pass = false;
                c.witness = atom_name(h, atom(i));
            }
        }
        out.push_back(std::move(c));
    }

    // counit: (eps (x) id) Delta = id = (id (x) eps) Delta
    {
        Check c{"counit", true, ""};
        for (int i = 0; i < n && c.pass; ++i) {
            Vector x = vec(i);
            Vector d = hopf_comult(h, x);
            Vector left(h.basis), right(h.basis);
            for (const auto& [l, co] : d.coords()) {
                left.add_term(Label{l[1]}, co * h.counit(l[0]));
                right.add_term(Label{l[0]}, co * h.counit(l[1]));
            }
            if (left != x || right != x) {
                c.pass = false;
                c.witness = atom_name(h, atom(i));
            }
        }
        out.push_back(std::move(c));
    }

    // antipode: m(S (x) id)Delta = eps(.)1 = m(id (x) S)Delta
    {
        Check c{"antipode", true, ""};
        for (int i = 0; i < n && c.pass; ++i) {
            Vector d = hopf_comult(h, vec(i));
            Vector left(h.basis), right(h.basis);
            for (const auto& [l, co] : d.coords()) {
                left += hopf_mult(h, h.antipode(l[0]),
                                  Vector::basis_vector(h.basis, label1(l[1])))
                            .scaled(co);
                right += hopf_mult(h, Vector::basis_vector(h.basis, label1(l[0])),
                                   h.antipode(l[1]))
                             .scaled(co);
            }
            Vector expected = h.unit.scaled(h.counit(atom(i)));
            if (left != expected || right != expected) {
                c.pass = false;
                c.witness = atom_name(h, atom(i));
            }
        }
        out.push_back(std::move(c));
    }

    // Delta is multiplicative: Delta(xy) = Delta(x)Delta(y)
    {
        Check c{"comult_multiplicative", true, ""};
        for (int i = 0; i < n && c.pass; ++i) {
            Vector di = hopf_comult(h, vec(i));
            for (int j = 0; j < n && c.pass; ++j) {
                Vector lhs = hopf_comult(h, hopf_mult(h, vec(i), vec(j)));
                Vector rhs = hopf_mult2(h, di, hopf_comult(h, vec(j)));
                if (lhs != rhs) {
                    c.pass = false;
                    c.witness = atom_name(h, atom(i)) + ", " + atom_name(h, atom(j));
                }
            }
        }
        out.push_back(std::move(c));
    }

    // Delta(x*) = (* (x) *) Delta(x)
    {
        Check c{"comult_star", true, ""};
        for (int i = 0; i < n && c.pass; ++i) {
            Vector lhs = hopf_comult(h, hopf_star(h, vec(i)));
            Vector di = hopf_comult(h, vec(i));
            Vector rhs(h.basis.tensor(h.basis));
            for (const auto& [l, co] : di.coords())
                rhs.add_term(Label{h.star(l[0]), h.star(l[1])}, co.conj());
            if (lhs != rhs) {
                c.pass = false;
                c.witness = atom_name(h, atom(i));
            }
        }
        out.push_back(std::move(c));
    }

    return out;
}

bool is_grouplike(const HopfAlgebra& h, const Vector& x) {
    if (x.is_zero()) return false;
    if (hopf_counit(h, x) != Scalar(1)) return false;
    return hopf_comult(h, x) == tensor(x, x);
}

std::vector<Vector> grouplike_scan_support2(const HopfAlgebra& h,
                                            const std::vector<Scalar>& patterns) {
    std::vector<Vector> out;
    const int n = static_cast<int>(h.basis.dim());
    auto vec = [&](int i) {
        return Vector::basis_vector(h.basis, label1(h.basis.factor(0).atom_at(i)));
    };
    for (int x = 0; x < n; ++x)
        for (const Scalar& cx : patterns) {
            Vector vx = vec(x).scaled(cx);
            if (is_grouplike(h, vx)) out.push_back(vx);
            for (int y = x + 1; y < n; ++y)
                for (const Scalar& cy : patterns) {
                    Vector v = vx + vec(y).scaled(cy);
                    if (is_grouplike(h, v)) out.push_back(v);
                }
        }
    return out;
}

LinearMap group_hom_linear(const GroupAlgebra& dom, const GroupAlgebra& cod,
                           const std::vector<int>& image_of_element) {
    LinearMap out(dom.basis, cod.basis);
    for (int g = 0; g < dom.group.size(); ++g)
        out.set_image(label1(Atom{Tag::Plain, g}), cod.element(image_of_element[g]));
    return out;
}

LinearMap automorphism_linear(const GroupAlgebra& a, const GroupAutomorphism& th) {
    return group_hom_linear(a, a, th.map);
}

bool map_is_unital_multiplicative(const LinearMap& f, const HopfAlgebra& dom,
                                  const HopfAlgebra& cod, std::string* witness) {
    if (f.apply(dom.unit) != cod.unit) {
        if (witness) *witness = "unit";
        return false;
    }
    const int n = static_cast<int>(dom.basis.dim());
    for (int i = 0; i < n; ++i) {
        Atom a = dom.basis.factor(0).atom_at(i);
        const Vector& fa = f.image(label1(a));
        for (int j = 0; j < n; ++j) {
            Atom b = dom.basis.factor(0).atom_at(j);
            if (f.apply(dom.mult(a, b)) != hopf_mult(cod, fa, f.image(label1(b)))) {
                if (witness)
                    *witness = dom.basis.factor(0).atom_name(a) + ", " +
                               dom.basis.factor(0).atom_name(b);
                return false;
            }
        }
    }
    return true;
}

bool map_is_star_map(const LinearMap& f, const HopfAlgebra& dom, const HopfAlgebra& cod,
                     std::string* witness) {
    const int n = static_cast<int>(dom.basis.dim());
    for (int i = 0; i < n; ++i) {
        Atom a = dom.basis.factor(0).atom_at(i);
        Vector x = Vector::basis_vector(dom.basis, label1(a));
        if (f.apply(hopf_star(dom, x)) != hopf_star(cod, f.image(label1(a)))) {
            if (witness) *witness = dom.basis.factor(0).atom_name(a);
            return false;
        }
    }
    return true;
}

bool map_intertwines_comult(const LinearMap& f, const HopfAlgebra& dom, const HopfAlgebra& cod,
                            std::string* witness) {
    auto f_atom = [&](const Atom& a) { return f.image(label1(a)); };
    const int n = static_cast<int>(dom.basis.dim());
    for (int i = 0; i < n; ++i) {
        Atom a = dom.basis.factor(0).atom_at(i);
        Vector lhs = hopf_comult(cod, f.image(label1(a)));
        Vector rhs = apply_on_leg(f_atom, cod.basis, dom.comult(a), 0);
        rhs = apply_on_leg(f_atom, cod.basis, rhs, 1);
        if (lhs != rhs) {
            if (witness) *witness = dom.basis.factor(0).atom_name(a);
            return false;
        }
    }
    return true;
}

bool map_preserves_counit(const LinearMap& f, const HopfAlgebra& dom, const HopfAlgebra& cod,
                          std::string* witness) {
    const int n = static_cast<int>(dom.basis.dim());
    for (int i = 0; i < n; ++i) {
        Atom a = dom.basis.factor(0).atom_at(i);
        if (hopf_counit(cod, f.image(label1(a))) != dom.counit(a)) {
            if (witness) *witness = dom.basis.factor(0).atom_name(a);
            return false;
        }
    }
    return true;
}

bool map_commutes_antipode(const LinearMap& f, const HopfAlgebra& dom, const HopfAlgebra& cod,
                           std::string* witness) {
    const int n = static_cast<int>(dom.basis.dim());
    for (int i = 0; i < n; ++i) {
        Atom a = dom.basis.factor(0).atom_at(i);
        if (f.apply(dom.antipode(a)) != hopf_antipode(cod, f.image(label1(a)))) {
            if (witness) *witness = dom.basis.factor(0).atom_name(a);
            return false;
        }
    }
    return true;
}

CheckList check_star_hopf_morphism(const std::string& prefix, const LinearMap& f,
                                   const HopfAlgebra& dom, const HopfAlgebra& cod) {
    CheckList out;
    std::string w;
    auto push = [&](const std::string& name, bool ok) {
        out.push_back({prefix + name, ok, ok ? "" : w});
        w.clear();
    };
    push("multiplicative", map_is_unital_multiplicative(f, dom, cod, &w));
    push("star", map_is_star_map(f, dom, cod, &w));
    push("comult", map_intertwines_comult(f, dom, cod, &w));
    push("counit", map_preserves_counit(f, dom, cod, &w));
    push("antipode", map_commutes_antipode(f, dom, cod, &w));
    return out;
}

std::vector<Vector> center_basis(const GroupAlgebra& a) {
    if (a.group.size() > 1000)
        throw std::invalid_argument("center_basis: guard |G| <= 1000 exceeded");
    std::vector<Vector> out;
    for (const auto& cls : a.group.conjugacy_classes()) {
        Vector z(a.basis);
        for (int g : cls) z.add_term(label1(Atom{Tag::Plain, g}), Scalar(1));
        for (int g = 0; g < a.group.size(); ++g) {
            Vector x = a.element(g);
            if (hopf_mult(a.hopf, z, x) != hopf_mult(a.hopf, x, z))
                throw std::logic_error("center_basis: class sum fails to commute");
        }
        out.push_back(std::move(z));
    }
    return out;
}

} // namespace qsgd
