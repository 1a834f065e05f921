#pragma once

#include "qsgd/group.hpp"
#include "qsgd/scalar.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsgd {

/// Basis label tags: plain group elements, or the two coordinates of a
/// doubled algebra.
enum class Tag : std::uint8_t { Plain = 0, Xi = 1, Eta = 2 };

struct Atom {
    Tag tag = Tag::Plain;
    int elem = 0;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// A tensor-product label: one atom per factor. Tensor products are kept
/// flat, so ((a,b),c) and (a,(b,c)) are the same label.
using Label = std::vector<Atom>;

inline Label label1(Atom a) { return Label{a}; }

/// One tensor factor: the group algebra basis of a group, or the xi/eta
/// tagged basis of its doubling.
struct BasisFactor {
    FiniteGroup group;
    bool doubled = false;

    int dim() const { return doubled ? 2 * group.size() : group.size(); }
    int ordinal_of(const Atom& a) const;
    Atom atom_at(int ordinal) const;
    std::string atom_name(const Atom& a) const;
    bool operator==(const BasisFactor& o) const {
        return doubled == o.doubled && group == o.group;
    }
};

class Basis {
public:
    Basis() = default;
    static Basis group_basis(FiniteGroup g);
    static Basis doubled_basis(FiniteGroup g);

    Basis tensor(const Basis& o) const;
    int rank() const { return static_cast<int>(factors_.size()); }
    const std::vector<BasisFactor>& factors() const { return factors_; }
    const BasisFactor& factor(int i) const { return factors_[i]; }
    long long dim() const;
    long long ordinal_of(const Label& l) const;
    std::string label_name(const Label& l) const;

    /// Calls fn for every label, in ordinal order.
    void for_each_label(const std::function<void(const Label&)>& fn) const;

    bool operator==(const Basis& o) const { return factors_ == o.factors_; }
    bool operator!=(const Basis& o) const { return !(*this == o); }

private:
    std::vector<BasisFactor> factors_;
};

/// Finitely supported exact vector over a tagged basis. No zero entries are
/// ever stored; equality is exact coordinatewise equality.
class Vector {
public:
    Vector() = default;
    explicit Vector(Basis basis) : basis_(std::move(basis)) {}

    static Vector basis_vector(const Basis& basis, const Label& l);

    const Basis& basis() const { return basis_; }
    const std::map<Label, Scalar>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    int support_size() const { return static_cast<int>(coords_.size()); }

    Scalar coefficient(const Label& l) const;
    void add_term(const Label& l, const Scalar& c);

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    Vector scaled(const Scalar& c) const;

    bool operator==(const Vector& o) const {
        return basis_ == o.basis_ && coords_ == o.coords_;
    }
    bool operator!=(const Vector& o) const { return !(*this == o); }

private:
    Basis basis_;
    std::map<Label, Scalar> coords_;
};

/// x (x) y; coords[(i,j)] = x[i] * y[j].
Vector tensor(const Vector& x, const Vector& y);

/// A linear map given by images of domain basis labels.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(Basis domain, Basis codomain)
        : domain_(std::move(domain)), codomain_(std::move(codomain)) {}

    const Basis& domain() const { return domain_; }
    const Basis& codomain() const { return codomain_; }
    const std::map<Label, Vector>& images() const { return images_; }

    void set_image(const Label& l, Vector v);
    const Vector& image(const Label& l) const;
    Vector apply(const Vector& v) const;

    /// (*this . inner)
    LinearMap compose(const LinearMap& inner) const;
    static LinearMap identity(const Basis& b);

    /// Rank of the image span.
    int rank() const;

    bool operator==(const LinearMap& o) const {
        return domain_ == o.domain_ && codomain_ == o.codomain_ && images_ == o.images_;
    }

private:
    Basis domain_, codomain_;
    std::map<Label, Vector> images_;
};

/// (f (x) g)(x (x) y) = f(x) (x) g(y), materialized on all pair labels.
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);

/// Applies an atom-level map to one tensor leg of v, keeping the other legs.
/// image(atom) must return vectors over a fixed rank-1 basis.
Vector apply_on_leg(const std::function<Vector(const Atom&)>& image, const Basis& image_basis,
                    const Vector& v, int leg);

/// Incremental exact row echelon over the scalar field. Deterministic:
/// pivots are the smallest label ordinals, rows are normalized to pivot 1,
/// and insertion order is the caller's order.
class SpanBuilder {
public:
    explicit SpanBuilder(Basis basis) : basis_(std::move(basis)) {}

    /// Returns the reduced, normalized row if the rank grew, nullopt if v was
    /// already in the span.
    std::optional<Vector> insert(const Vector& v);
    bool contains(const Vector& v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    using Row = std::vector<std::pair<long long, Scalar>>; // ordinal-sorted
    Row reduce(const Vector& v) const;
    Basis basis_;
    std::map<long long, Row> rows_; // pivot ordinal -> normalized row
};

/// Dimension of the exact linear span (all vectors over a common basis).
int span_rank(const std::vector<Vector>& vectors);

/// Exact solution of the affine system {<form_k, x> = rhs_k}. Unknowns are
/// the labels appearing in the forms; free unknowns are set to 0. Fraction-
/// free Bareiss elimination with exact division.
struct AffineResult {
    bool feasible = false;
    std::map<Label, Scalar> assignment; // valid when feasible
    int witness_row = -1;               // index of an inconsistent constraint
};
AffineResult solve_affine(const std::vector<std::pair<Vector, Scalar>>& constraints);

} // namespace qsgd
