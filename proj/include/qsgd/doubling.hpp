#pragma once

#include "qsgd/hopf.hpp"

#include <vector>

namespace qsgd {

/// The doubling A~ = A + A of a group algebra by an order-two automorphism
/// theta, on the tagged basis {xi(g)} u {eta(g)}:
///   product componentwise, xi(a)eta(b) = 0, unit = xi(e) + eta(e),
///   Delta(xi g) = xi g (x) xi g + eta g (x) eta(theta g),
///   Delta(eta g) = xi g (x) eta g + eta g (x) xi(theta g),
///   eps(xi g) = 1, eps(eta g) = 0,
///   S(xi g) = xi(g^-1), S(eta g) = eta(theta(g)^-1),
///   star componentwise, Haar = (tau o pr1 + tau o pr2)/2.
struct DoubledHopf {
    GroupAlgebra base;
    GroupAutomorphism theta;
    HopfAlgebra carrier;
    Basis basis; // doubled basis
    Vector p1, p2;
    Functional haar;

    Atom xi_atom(int g) const { return Atom{Tag::Xi, g}; }
    Atom eta_atom(int g) const { return Atom{Tag::Eta, g}; }
    Vector xi(const Vector& a) const;  // retag a plain vector into the xi leg
    Vector eta(const Vector& a) const;
    Vector unit() const { return carrier.unit; }
};

/// Rejects theta with theta^2 != id (witness element in the message).
DoubledHopf make_double(const GroupAlgebra& a, const GroupAutomorphism& theta);

Functional haar_state(const DoubledHopf& d);

/// Two-sided invariance (h (x) id)Delta(x) = h(x)1 = (id (x) h)Delta(x) on
/// every basis atom.
CheckList check_haar_invariance(const DoubledHopf& d);

/// A coaction map: algebra A -> A (x) Q with Q the coacting Hopf algebra.
struct Coaction {
    HopfAlgebra algebra;
    HopfAlgebra coalgebra;
    LinearMap map;
};

/// alpha(g) = g (x) xi(g) + theta(g) (x) eta(theta(g)).
Coaction doubling_coaction(const DoubledHopf& d);

struct CoactionOptions {
    long long podles_guard = 250000; // skip the rank check above this dim
};

/// Action equation, counit law, *-homomorphism property and the Podles
/// spanning condition (exact rank of alpha(A)(1 (x) Q)).
CheckList check_coaction(const Coaction& c, const CoactionOptions& opts = {});

/// Xi(a) = xi(a) + eta(theta(a)).
LinearMap embedding_xi(const DoubledHopf& d);

/// Xi is an injective *-homomorphism with Delta o Xi = (Xi (x) id) o alpha.
CheckList check_embedding(const DoubledHopf& d);

/// Delta(p1) = p1 (x) p1 + p2 (x) p2 and Delta(p2) = p1 (x) p2 + p2 (x) p1;
/// p1, p2 central projections summing to the unit.
CheckList check_central_projections(const DoubledHopf& d);

/// The unique linear extension f~ with f~ o xi1 = xi2 o f and
/// f~ o eta1 = eta2 o f, for f a linear map between the base algebras.
LinearMap extend_map(const LinearMap& f, const DoubledHopf& d1, const DoubledHopf& d2);

/// Verifies, as applicable, that the extension preserves equivariance,
/// injectivity/surjectivity, multiplicativity, the Hopf property for
/// equivariant Hopf maps, and the intertwining alpha2 o f = (f (x) f~) o
/// alpha1. Entries for hypotheses that do not hold are reported "skipped".
CheckList check_extension_properties(const LinearMap& f, const DoubledHopf& d1,
                                     const DoubledHopf& d2);

/// All mu for which xi(g) + mu eta(h) is group-like, by exact expansion of
/// the coproduct and coefficient comparison. Sorted by (re, im).
std::vector<Scalar> grouplike_binomial(const DoubledHopf& d, int g, int h);

/// xi1(g) -> xi2(theta g), eta1(g) -> eta2(theta g); requires
/// theta o theta1 = theta2 o theta (witness element otherwise).
LinearMap iso_from_conjugate(const DoubledHopf& d1, const DoubledHopf& d2,
                             const GroupAutomorphism& theta);

/// Bijective, unital, multiplicative, star-preserving, counit/antipode
/// compatible, and (phi (x) phi) o Delta1 = Delta2 o phi.
CheckList check_hopf_star_iso(const LinearMap& phi, const DoubledHopf& d1,
                              const DoubledHopf& d2);

/// theta == id as the linear extension (first reading of the faithfulness
/// hypothesis).
bool theta_is_identity(const DoubledHopf& d);

/// theta fixes every generator (second reading); equivalent to the first
/// whenever S generates.
bool theta_fixes_generators(const DoubledHopf& d, const GeneratingSet& s);

} // namespace qsgd
