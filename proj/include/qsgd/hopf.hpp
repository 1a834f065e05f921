#pragma once

#include "qsgd/linalg.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qsgd {

/// One pass/fail verification step; failing checks carry a witness.
struct Check {
    std::string name;
    bool pass = false;
    std::string witness; // empty on pass unless informational
};
using CheckList = std::vector<Check>;

bool all_pass(const CheckList& checks);

/// A Hopf *-algebra presented by structure maps on a finite rank-1 basis.
/// The maps are given atom-level; linear extensions are the free functions
/// below. Star is a basis rule combined with coefficient conjugation.
struct HopfAlgebra {
    Basis basis;
    std::function<Vector(const Atom&, const Atom&)> mult;
    Vector unit;
    std::function<Vector(const Atom&)> comult; // into basis (x) basis
    std::function<Scalar(const Atom&)> counit;
    std::function<Vector(const Atom&)> antipode;
    std::function<Atom(const Atom&)> star;
};

Vector hopf_mult(const HopfAlgebra& h, const Vector& x, const Vector& y);
Vector hopf_comult(const HopfAlgebra& h, const Vector& x);
Scalar hopf_counit(const HopfAlgebra& h, const Vector& x);
Vector hopf_antipode(const HopfAlgebra& h, const Vector& x);
Vector hopf_star(const HopfAlgebra& h, const Vector& x);

/// Componentwise product on basis (x) basis: (a(x)b)(c(x)d) = ac (x) bd.
Vector hopf_mult2(const HopfAlgebra& h, const Vector& u, const Vector& v);

/// The group ring C[G] with mult(g,h) = gh, Delta(g) = g(x)g, eps(g) = 1,
/// S(g) = g^{-1}, g* = g^{-1}.
struct GroupAlgebra {
    FiniteGroup group;
    Basis basis;
    HopfAlgebra hopf;

    Vector element(int idx) const {
        return Vector::basis_vector(basis, label1(Atom{Tag::Plain, idx}));
    }
};

GroupAlgebra group_algebra(FiniteGroup g);

/// Coefficient of the neutral element.
Scalar canonical_trace(const GroupAlgebra& a, const Vector& x);

/// A linear functional on a rank-1 basis.
struct Functional {
    Basis basis;
    std::map<Atom, Scalar> values;
    bool tracial = false; // claims f(xy) = f(yx); see check_tracial

    Scalar operator()(const Vector& x) const;
};

/// f(xy) = f(yx) on every basis pair.
bool check_tracial(const Functional& f, const HopfAlgebra& h, std::string* witness = nullptr);

/// The canonical trace as a Functional value (flagged tracial).
Functional canonical_trace_functional(const GroupAlgebra& a);

struct AxiomOptions {
    long long max_dim = 1000;       // suite refuses larger carriers
    int exhaustive_limit = 200;     // full triple scan up to this dim
    int sampled_triples = 20000;    // deterministic samples above it
    unsigned seed = 0x5eed;
};

/// Exact per-axiom verification on basis elements (sufficient by linearity):
/// unit, associativity, coassociativity, counit laws, antipode convolution
/// laws, multiplicativity of the coproduct, star compatibility of the
/// coproduct. First failing basis element is reported as witness.
CheckList verify_hopf_axioms(const HopfAlgebra& h, const AxiomOptions& opts = {});

/// x != 0, Delta(x) = x (x) x and eps(x) = 1.
bool is_grouplike(const HopfAlgebra& h, const Vector& x);

/// Exhaustive group-like enumeration over vectors of support <= 2 with
/// coefficients drawn from the given patterns (both coefficients range over
/// all patterns). Deterministic order; guard support size 2 by construction.
std::vector<Vector> grouplike_scan_support2(const HopfAlgebra& h,
                                            const std::vector<Scalar>& patterns);

/// Linear extension of a group homomorphism given by element images.
LinearMap group_hom_linear(const GroupAlgebra& dom, const GroupAlgebra& cod,
                           const std::vector<int>& image_of_element);

LinearMap automorphism_linear(const GroupAlgebra& a, const GroupAutomorphism& th);

bool map_is_unital_multiplicative(const LinearMap& f, const HopfAlgebra& dom,
                                  const HopfAlgebra& cod, std::string* witness = nullptr);
bool map_is_star_map(const LinearMap& f, const HopfAlgebra& dom, const HopfAlgebra& cod,
                     std::string* witness = nullptr);
bool map_intertwines_comult(const LinearMap& f, const HopfAlgebra& dom, const HopfAlgebra& cod,
                            std::string* witness = nullptr);
bool map_preserves_counit(const LinearMap& f, const HopfAlgebra& dom, const HopfAlgebra& cod,
                          std::string* witness = nullptr);
bool map_commutes_antipode(const LinearMap& f, const HopfAlgebra& dom, const HopfAlgebra& cod,
                           std::string* witness = nullptr);

/// All of the above as one check list, names prefixed.
CheckList check_star_hopf_morphism(const std::string& prefix, const LinearMap& f,
                                   const HopfAlgebra& dom, const HopfAlgebra& cod);

/// Class sums, one per conjugacy class; each commutes with every basis
/// element.
std::vector<Vector> center_basis(const GroupAlgebra& a);

} // namespace qsgd
