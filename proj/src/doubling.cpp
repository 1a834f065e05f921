#include "qsgd/doubling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qsgd {

Vector DoubledHopf::xi(const Vector& a) const {
    Vector out(basis);
    for (const auto& [l, c] : a.coords()) out.add_term(label1(Atom{Tag::Xi, l[0].elem}), c);
    return out;
}

Vector DoubledHopf::eta(const Vector& a) const {
    Vector out(basis);
    for (const auto& [l, c] : a.coords()) out.add_term(label1(Atom{Tag::Eta, l[0].elem}), c);
    return out;
}

DoubledHopf make_double(const GroupAlgebra& a, const GroupAutomorphism& theta) {
    if (!(theta.group == a.group))
        throw std::invalid_argument("make_double: automorphism acts on a different group");
    for (int g = 0; g < a.group.size(); ++g)
        if (theta.map[theta.map[g]] != g)
            throw std::invalid_argument("make_double: theta^2 != id at " +
                                        a.group.element_name(g));

    DoubledHopf d;
    d.base = a;
    d.theta = theta;
    d.basis = Basis::doubled_basis(a.group);

    const FiniteGroup g = a.group;
    const Basis basis = d.basis;
    const std::vector<int> th = theta.map;

    d.carrier.basis = basis;
    d.carrier.mult = [g, basis](const Atom& x, const Atom& y) {
        Vector out(basis);
        if (x.tag == y.tag) out.add_term(label1(Atom{x.tag, g.op(x.elem, y.elem)}), Scalar(1));
        return out; // mixed xi/eta products vanish
    };
    d.p1 = Vector::basis_vector(basis, label1(Atom{Tag::Xi, g.identity()}));
    d.p2 = Vector::basis_vector(basis, label1(Atom{Tag::Eta, g.identity()}));
    d.carrier.unit = d.p1 + d.p2;
    d.carrier.comult = [basis, th](const Atom& x) {
        Vector out(basis.tensor(basis));
        if (x.tag == Tag::Xi) {
            out.add_term(Label{Atom{Tag::Xi, x.elem}, Atom{Tag::Xi, x.elem}}, Scalar(1));
            out.add_term(Label{Atom{Tag::Eta, x.elem}, Atom{Tag::Eta, th[x.elem]}}, Scalar(1));
        } else {
            out.add_term(Label{Atom{Tag::Xi, x.elem}, Atom{Tag::Eta, x.elem}}, Scalar(1));
            out.add_term(Label{Atom{Tag::Eta, x.elem}, Atom{Tag::Xi, th[x.elem]}}, Scalar(1));
        }
        return out;
    };
    d.carrier.counit = [](const Atom& x) {
        return x.tag == Tag::Xi ? Scalar(1) : Scalar();
    };
    d.carrier.antipode = [g, basis, th](const Atom& x) {
        int inv = g.inverse(x.elem);
        Atom image = x.tag == Tag::Xi ? Atom{Tag::Xi, inv} : Atom{Tag::Eta, th[inv]};
        return Vector::basis_vector(basis, label1(image));
    };
    d.carrier.star = [g](const Atom& x) { return Atom{x.tag, g.inverse(x.elem)}; };

    d.haar.basis = basis;
    d.haar.tracial = true; // inherited from the canonical trace on each summand
    Scalar half(mpq_class(1, 2));
    d.haar.values[Atom{Tag::Xi, g.identity()}] = half;
    d.haar.values[Atom{Tag::Eta, g.identity()}] = half;
    return d;
}

Functional haar_state(const DoubledHopf& d) { return d.haar; }

CheckList check_haar_invariance(const DoubledHopf& d) {
    Check left{"haar_left_invariant", true, ""};
    Check right{"haar_right_invariant", true, ""};
    const int n = static_cast<int>(d.basis.dim());
    for (int i = 0; i < n; ++i) {
        Atom a = d.basis.factor(0).atom_at(i);
        Vector x = Vector::basis_vector(d.basis, label1(a));
        Vector dx = hopf_comult(d.carrier, x);
        Vector lhs(d.basis), rhs(d.basis);
        for (const auto& [l, c] : dx.coords()) {
            auto itL = d.haar.values.find(l[0]);
            if (itL != d.haar.values.end()) lhs.add_term(Label{l[1]}, c * itL->second);
            auto itR = d.haar.values.find(l[1]);
            if (itR != d.haar.values.end()) rhs.add_term(Label{l[0]}, c * itR->second);
        }
        Vector expected = d.unit().scaled(d.haar(x));
        if (left.pass && lhs != expected) {
            left.pass = false;
            left.witness = d.basis.factor(0).atom_name(a);
        }
        if (right.pass && rhs != expected) {
            right.pass = false;
            right.witness = d.basis.factor(0).atom_name(a);
        }
    }
    Check tracial{"haar_tracial", true, ""};
    if (d.haar.tracial) {
        std::string w;
        if (!check_tracial(d.haar, d.carrier, &w)) {
            tracial.pass = false;
            tracial.witness = w;
        }
    }
    return {left, right, tracial};
}

Coaction doubling_coaction(const DoubledHopf& d) {
    Coaction c;
    c.algebra = d.base.hopf;
    c.coalgebra = d.carrier;
    c.map = LinearMap(d.base.basis, d.base.basis.tensor(d.basis));
    const auto& g = d.base.group;
    for (int x = 0; x < g.size(); ++x) {
        int tx = d.theta.map[x];
        Vector image(c.map.codomain());
        image.add_term(Label{Atom{Tag::Plain, x}, Atom{Tag::Xi, x}}, Scalar(1));
        image.add_term(Label{Atom{Tag::Plain, tx}, Atom{Tag::Eta, tx}}, Scalar(1));
        c.map.set_image(label1(Atom{Tag::Plain, x}), image);
    }
    return c;
}

CheckList check_coaction(const Coaction& c, const CoactionOptions& opts) {
    CheckList out;
    const Basis& ab = c.algebra.basis;
    const Basis& qb = c.coalgebra.basis;
    const int an = static_cast<int>(ab.dim());
    const int qn = static_cast<int>(qb.dim());
    auto aatom = [&](int i) { return ab.factor(0).atom_at(i); };

    // (alpha (x) id) alpha = (id (x) Delta_Q) alpha
    {
        Check chk{"action_equation", true, ""};
        auto alpha_atom = [&](const Atom& a) { return c.map.image(label1(a)); };
        for (int i = 0; i < an && chk.pass; ++i) {
            Vector ax = alpha_atom(aatom(i));
            Vector lhs = apply_on_leg(alpha_atom, c.map.codomain(), ax, 0);
            Vector rhs = apply_on_leg(c.coalgebra.comult, qb.tensor(qb), ax, 1);
            if (lhs != rhs) {
                chk.pass = false;
                chk.witness = ab.factor(0).atom_name(aatom(i));
            }
        }
        out.push_back(std::move(chk));
    }

    // (id (x) eps_Q) alpha = id
    {
        Check chk{"counit_law", true, ""};
        for (int i = 0; i < an && chk.pass; ++i) {
            Vector ax = c.map.image(label1(aatom(i)));
            Vector reduced(ab);
            for (const auto& [l, co] : ax.coords())
                reduced.add_term(Label{l[0]}, co * c.coalgebra.counit(l[1]));
            if (reduced != Vector::basis_vector(ab, label1(aatom(i)))) {
                chk.pass = false;
                chk.witness = ab.factor(0).atom_name(aatom(i));
            }
        }
        out.push_back(std::move(chk));
    }

    // alpha is a unital *-homomorphism
    {
        Check chk{"homomorphism", true, ""};
        auto prod_mixed = [&](const Vector& u, const Vector& v) {
            // componentwise product on A (x) Q
            Vector outv(u.basis());
            for (const auto& [lu, cu] : u.coords())
                for (const auto& [lv, cv] : v.coords()) {
                    Vector left = c.algebra.mult(lu[0], lv[0]);
                    Vector right = c.coalgebra.mult(lu[1], lv[1]);
                    outv += tensor(left, right).scaled(cu * cv);
                }
            return outv;
        };
        Vector unit_image = c.map.apply(c.algebra.unit);
        if (unit_image != tensor(c.algebra.unit, c.coalgebra.unit)) {
            chk.pass = false;
            chk.witness = "unit";
        }
        for (int i = 0; i < an && chk.pass; ++i) {
            Vector ai = c.map.image(label1(aatom(i)));
            // star
            Vector star_then_map = c.map.apply(hopf_star(c.algebra,
                                                         Vector::basis_vector(ab, label1(aatom(i)))));
            Vector map_then_star(c.map.codomain());
            for (const auto& [l, co] : ai.coords())
                map_then_star.add_term(Label{c.algebra.star(l[0]), c.coalgebra.star(l[1])},
                                       co.conj());
            if (star_then_map != map_then_star) {
                chk.pass = false;
                chk.witness = "star at " + ab.factor(0).atom_name(aatom(i));
                break;
            }
            for (int j = 0; j < an && chk.pass; ++j) {
                Vector lhs = c.map.apply(c.algebra.mult(aatom(i), aatom(j)));
                Vector rhs = prod_mixed(ai, c.map.image(label1(aatom(j))));
                if (lhs != rhs) {
                    chk.pass = false;
                    chk.witness = ab.factor(0).atom_name(aatom(i)) + ", " +
                                  ab.factor(0).atom_name(aatom(j));
                }
            }
        }
        out.push_back(std::move(chk));
    }

    // Podles condition: span alpha(A)(1 (x) Q) = A (x) Q
    {
        Check chk{"podles_span", true, ""};
        long long full = static_cast<long long>(an) * qn;
        if (full > opts.podles_guard) {
            chk.pass = true;
            chk.witness = "skipped: dim " + std::to_string(full) + " exceeds guard";
            out.push_back(std::move(chk));
            return out;
        }
        SpanBuilder span(c.map.codomain());
        for (int i = 0; i < an; ++i) {
            Vector ai = c.map.image(label1(aatom(i)));
            for (int q = 0; q < qn; ++q) {
                Atom qa = qb.factor(0).atom_at(q);
                Vector prod(c.map.codomain());
                for (const auto& [l, co] : ai.coords()) {
                    Vector right = c.coalgebra.mult(l[1], qa);
                    for (const auto& [lr, cr] : right.coords())
                        prod.add_term(Label{l[0], lr[0]}, co * cr);
                }
                span.insert(prod);
            }
        }
        if (span.rank() != full) {
            chk.pass = false;
            chk.witness = "rank " + std::to_string(span.rank()) + " of " + std::to_string(full);
        }
        out.push_back(std::move(chk));
    }
    return out;
}

LinearMap embedding_xi(const DoubledHopf& d) {
    LinearMap m(d.base.basis, d.basis);
    for (int g = 0; g < d.base.group.size(); ++g) {
        Vector image(d.basis);
        image.add_term(label1(Atom{Tag::Xi, g}), Scalar(1));
        image.add_term(label1(Atom{Tag::Eta, d.theta.map[g]}), Scalar(1));
        m.set_image(label1(Atom{Tag::Plain, g}), image);
    }
    return m;
}

CheckList check_embedding(const DoubledHopf& d) {
    CheckList out;
    LinearMap emb = embedding_xi(d);
    Coaction c = doubling_coaction(d);
    const auto& g = d.base.group;

    {
        Check chk{"embedding_injective", true, ""};
        if (emb.rank() != g.size()) {
            chk.pass = false;
            chk.witness = "rank " + std::to_string(emb.rank());
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"embedding_star_homomorphism", true, ""};
        if (emb.apply(d.base.hopf.unit) != d.unit()) {
            chk.pass = false;
            chk.witness = "unit";
        }
        for (int a = 0; a < g.size() && chk.pass; ++a) {
            Vector ea = emb.image(label1(Atom{Tag::Plain, a}));
            Vector sa = hopf_star(d.carrier, ea);
            if (sa != emb.apply(hopf_star(d.base.hopf, d.base.element(a)))) {
                chk.pass = false;
                chk.witness = "star at " + g.element_name(a);
                break;
            }
            for (int b = 0; b < g.size() && chk.pass; ++b) {
                Vector lhs = emb.apply(hopf_mult(d.base.hopf, d.base.element(a), d.base.element(b)));
                Vector rhs = hopf_mult(d.carrier, ea, emb.image(label1(Atom{Tag::Plain, b})));
                if (lhs != rhs) {
                    chk.pass = false;
                    chk.witness = g.element_name(a) + ", " + g.element_name(b);
                }
            }
        }
        out.push_back(std::move(chk));
    }
    {
        // Delta o Xi = (Xi (x) id) o alpha
        Check chk{"embedding_intertwines", true, ""};
        for (int a = 0; a < g.size() && chk.pass; ++a) {
            Vector lhs = hopf_comult(d.carrier, emb.image(label1(Atom{Tag::Plain, a})));
            Vector alpha_a = c.map.image(label1(Atom{Tag::Plain, a}));
            Vector rhs = apply_on_leg(
                [&](const Atom& x) { return emb.image(label1(x)); }, d.basis, alpha_a, 0);
            if (lhs != rhs) {
                chk.pass = false;
                chk.witness = g.element_name(a);
            }
        }
        out.push_back(std::move(chk));
    }
    return out;
}

CheckList check_central_projections(const DoubledHopf& d) {
    CheckList out;
    {
        Check chk{"p1_p2_central_projections", true, ""};
        Vector sum = d.p1 + d.p2;
        if (sum != d.unit()) {
            chk.pass = false;
            chk.witness = "p1 + p2 != 1";
        }
        for (const Vector* p : {&d.p1, &d.p2}) {
            if (!chk.pass) break;
            if (hopf_mult(d.carrier, *p, *p) != *p) {
                chk.pass = false;
                chk.witness = "not idempotent";
                break;
            }
            if (hopf_star(d.carrier, *p) != *p) {
                chk.pass = false;
                chk.witness = "not self-adjoint";
                break;
            }
            for (int i = 0; i < d.basis.dim() && chk.pass; ++i) {
                Atom a = d.basis.factor(0).atom_at(static_cast<int>(i));
                Vector x = Vector::basis_vector(d.basis, label1(a));
                if (hopf_mult(d.carrier, *p, x) != hopf_mult(d.carrier, x, *p)) {
                    chk.pass = false;
                    chk.witness = "not central at " + d.basis.factor(0).atom_name(a);
                }
            }
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"comult_p1", true, ""};
        Vector expected = tensor(d.p1, d.p1) + tensor(d.p2, d.p2);
        if (hopf_comult(d.carrier, d.p1) != expected) {
            chk.pass = false;
            chk.witness = "Delta(p1)";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"comult_p2", true, ""};
        Vector expected = tensor(d.p1, d.p2) + tensor(d.p2, d.p1);
        if (hopf_comult(d.carrier, d.p2) != expected) {
            chk.pass = false;
            chk.witness = "Delta(p2)";
        }
        out.push_back(std::move(chk));
    }
    return out;
}

LinearMap extend_map(const LinearMap& f, const DoubledHopf& d1, const DoubledHopf& d2) {
    if (f.domain() != d1.base.basis || f.codomain() != d2.base.basis)
        throw std::invalid_argument("extend_map: f must map base algebra 1 to base algebra 2");
    LinearMap out(d1.basis, d2.basis);
    for (int g = 0; g < d1.base.group.size(); ++g) {
        const Vector& fg = f.image(label1(Atom{Tag::Plain, g}));
        out.set_image(label1(Atom{Tag::Xi, g}), d2.xi(fg));
        out.set_image(label1(Atom{Tag::Eta, g}), d2.eta(fg));
    }
    return out;
}

namespace {

LinearMap doubled_automorphism(const GroupAutomorphism& theta, const Basis& doubled) {
    LinearMap out(doubled, doubled);
    for (int g = 0; g < theta.group.size(); ++g) {
        out.set_image(label1(Atom{Tag::Xi, g}),
                      Vector::basis_vector(doubled, label1(Atom{Tag::Xi, theta.map[g]})));
        out.set_image(label1(Atom{Tag::Eta, g}),
                      Vector::basis_vector(doubled, label1(Atom{Tag::Eta, theta.map[g]})));
    }
    return out;
}

bool map_is_hopf(const LinearMap& f, const HopfAlgebra& dom, const HopfAlgebra& cod) {
    return map_is_unital_multiplicative(f, dom, cod) && map_intertwines_comult(f, dom, cod) &&
           map_preserves_counit(f, dom, cod);
}

} // namespace

CheckList check_extension_properties(const LinearMap& f, const DoubledHopf& d1,
                                     const DoubledHopf& d2) {
    CheckList out;
    LinearMap fext = extend_map(f, d1, d2);
    LinearMap th1 = automorphism_linear(d1.base, d1.theta);
    LinearMap th2 = automorphism_linear(d2.base, d2.theta);
    const bool equivariant = f.compose(th1) == th2.compose(f);
    const bool hom = map_is_unital_multiplicative(f, d1.base.hopf, d2.base.hopf);
    const bool hopf = hom && map_is_hopf(f, d1.base.hopf, d2.base.hopf);

    {
        Check chk{"extension_equivariant", true, ""};
        if (!equivariant) {
            chk.witness = "skipped: f not equivariant";
        } else {
            LinearMap th1t = doubled_automorphism(d1.theta, d1.basis);
            LinearMap th2t = doubled_automorphism(d2.theta, d2.basis);
            if (!(fext.compose(th1t) == th2t.compose(fext))) {
                chk.pass = false;
                chk.witness = "extension fails equivariance";
            }
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"extension_injectivity", true, ""};
        int frank = f.rank();
        bool inj = frank == static_cast<int>(f.domain().dim());
        if (!inj) {
            chk.witness = "skipped: f not injective";
        } else if (fext.rank() != static_cast<int>(fext.domain().dim())) {
            chk.pass = false;
            chk.witness = "extension not injective";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"extension_surjectivity", true, ""};
        bool surj = f.rank() == static_cast<int>(f.codomain().dim());
        if (!surj) {
            chk.witness = "skipped: f not surjective";
        } else if (fext.rank() != static_cast<int>(fext.codomain().dim())) {
            chk.pass = false;
            chk.witness = "extension not surjective";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"extension_homomorphism", true, ""};
        if (!hom) {
            chk.witness = "skipped: f not an algebra homomorphism";
        } else if (!map_is_unital_multiplicative(fext, d1.carrier, d2.carrier)) {
            chk.pass = false;
            chk.witness = "extension not multiplicative";
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"extension_hopf", true, ""};
        if (!(equivariant && hopf)) {
            chk.witness = "skipped: f not an equivariant Hopf map";
        } else if (!map_is_hopf(fext, d1.carrier, d2.carrier)) {
            chk.pass = false;
            chk.witness = "extension not a Hopf map";
        }
        out.push_back(std::move(chk));
    }
    {
        // alpha2 o f = (f (x) f~) o alpha1
        Check chk{"extension_intertwines_coactions", true, ""};
        if (!(equivariant && hopf)) {
            chk.witness = "skipped: f not an equivariant Hopf map";
        } else {
            Coaction a1 = doubling_coaction(d1);
            Coaction a2 = doubling_coaction(d2);
            LinearMap lhs = a2.map.compose(f);
            LinearMap rhs = tensor_map(f, fext).compose(a1.map);
            if (!(lhs == rhs)) {
                chk.pass = false;
                chk.witness = "intertwining fails";
            }
        }
        out.push_back(std::move(chk));
    }
    return out;
}

std::vector<Scalar> grouplike_binomial(const DoubledHopf& d, int g, int h) {
    // x = xi(g) + mu eta(h); collect per-label constraints a mu^2 + b mu + c = 0
    // from Delta(x) - x (x) x = 0.
    Vector xg = Vector::basis_vector(d.basis, label1(Atom{Tag::Xi, g}));
    Vector eh = Vector::basis_vector(d.basis, label1(Atom{Tag::Eta, h}));
    Vector d0 = hopf_comult(d.carrier, xg);                       // constant part
    Vector d1 = hopf_comult(d.carrier, eh);                       // linear part
    Vector t0 = tensor(xg, xg);                                   // constant
    Vector t1 = tensor(xg, eh) + tensor(eh, xg);                  // linear
    Vector t2 = tensor(eh, eh);                                   // quadratic

    std::set<Label> labels;
    for (const Vector* v : {&d0, &d1, &t0, &t1, &t2})
        for (const auto& [l, c] : v->coords()) labels.insert(l);

    struct Constraint {
        Scalar a, b, c;
    };
    std::vector<Constraint> constraints;
    for (const Label& l : labels) {
        Constraint con;
        con.a = -t2.coefficient(l);
        con.b = d1.coefficient(l) - t1.coefficient(l);
        con.c = d0.coefficient(l) - t0.coefficient(l);
        if (con.a.is_zero() && con.b.is_zero() && con.c.is_zero()) continue;
        constraints.push_back(con);
    }

    std::vector<Scalar> candidates;
    for (const auto& con : constraints) {
        if (con.a.is_zero()) {
            if (!con.b.is_zero()) candidates.push_back((-con.c) / con.b);
        } else {
            // roots of a mu^2 + b mu + c over Q(i), if any
            Scalar disc = con.b * con.b - Scalar(4) * con.a * con.c;
            Scalar root;
            if (sqrt_gaussian(disc, root)) {
                Scalar twoa = Scalar(2) * con.a;
                candidates.push_back(((-con.b) + root) / twoa);
                candidates.push_back(((-con.b) - root) / twoa);
            }
        }
    }

    std::vector<Scalar> out;
    for (const Scalar& mu : candidates) {
        Vector x = xg + eh.scaled(mu);
        if (!is_grouplike(d.carrier, x)) continue;
        if (std::find(out.begin(), out.end(), mu) == out.end()) out.push_back(mu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LinearMap iso_from_conjugate(const DoubledHopf& d1, const DoubledHopf& d2,
                             const GroupAutomorphism& theta) {
    if (!(theta.group == d1.base.group) || !(d1.base.group == d2.base.group))
        throw std::invalid_argument("iso_from_conjugate: group mismatch");
    for (int g = 0; g < theta.group.size(); ++g)
        if (theta.map[d1.theta.map[g]] != d2.theta.map[theta.map[g]])
            throw std::invalid_argument(
                "iso_from_conjugate: theta does not conjugate theta1 to theta2 at " +
                theta.group.element_name(g));
    LinearMap out(d1.basis, d2.basis);
    for (int g = 0; g < theta.group.size(); ++g) {
        out.set_image(label1(Atom{Tag::Xi, g}),
                      Vector::basis_vector(d2.basis, label1(Atom{Tag::Xi, theta.map[g]})));
        out.set_image(label1(Atom{Tag::Eta, g}),
                      Vector::basis_vector(d2.basis, label1(Atom{Tag::Eta, theta.map[g]})));
    }
    return out;
}

CheckList check_hopf_star_iso(const LinearMap& phi, const DoubledHopf& d1,
                              const DoubledHopf& d2) {
    CheckList out;
    const int n = static_cast<int>(d1.basis.dim());
    auto atom = [&](int i) { return d1.basis.factor(0).atom_at(i); };
    {
        Check chk{"iso_bijective", true, ""};
        if (phi.rank() != static_cast<int>(d2.basis.dim())) {
            chk.pass = false;
            chk.witness = "rank " + std::to_string(phi.rank());
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"iso_multiplicative", true, ""};
        std::string w;
        if (!map_is_unital_multiplicative(phi, d1.carrier, d2.carrier, &w)) {
            chk.pass = false;
            chk.witness = w;
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"iso_star", true, ""};
        for (int i = 0; i < n && chk.pass; ++i) {
            Vector lhs = phi.apply(hopf_star(d1.carrier,
                                             Vector::basis_vector(d1.basis, label1(atom(i)))));
            Vector rhs = hopf_star(d2.carrier, phi.image(label1(atom(i))));
            if (lhs != rhs) {
                chk.pass = false;
                chk.witness = d1.basis.factor(0).atom_name(atom(i));
            }
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"iso_comult", true, ""};
        auto phi_atom = [&](const Atom& a) { return phi.image(label1(a)); };
        for (int i = 0; i < n && chk.pass; ++i) {
            Vector lhs = hopf_comult(d2.carrier, phi.image(label1(atom(i))));
            Vector rhs = apply_on_leg(phi_atom, d2.basis, hopf_comult(d1.carrier,
                                      Vector::basis_vector(d1.basis, label1(atom(i)))), 0);
            rhs = apply_on_leg(phi_atom, d2.basis, rhs, 1);
            if (lhs != rhs) {
                chk.pass = false;
                chk.witness = d1.basis.factor(0).atom_name(atom(i));
            }
        }
        out.push_back(std::move(chk));
    }
    {
        Check chk{"iso_counit_antipode", true, ""};
        for (int i = 0; i < n && chk.pass; ++i) {
            Atom a = atom(i);
            if (hopf_counit(d2.carrier, phi.image(label1(a))) != d1.carrier.counit(a)) {
                chk.pass = false;
                chk.witness = "counit at " + d1.basis.factor(0).atom_name(a);
                break;
            }
            Vector lhs = phi.apply(d1.carrier.antipode(a));
            Vector rhs = hopf_antipode(d2.carrier, phi.image(label1(a)));
            if (lhs != rhs) {
                chk.pass = false;
                chk.witness = "antipode at " + d1.basis.factor(0).atom_name(a);
            }
        }
        out.push_back(std::move(chk));
    }
    return out;
}

bool theta_is_identity(const DoubledHopf& d) { return d.theta.is_identity(); }

bool theta_fixes_generators(const DoubledHopf& d, const GeneratingSet& s) {
    for (int g : s.generators)
        if (d.theta.map[g] != g) return false;
    return true;
}

} // namespace qsgd
