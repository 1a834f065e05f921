#pragma once

#include <string>
#include <vector>

namespace qsgd {

/// A bijection of a finite ordered set of integers, stored in one-line form
/// over an explicit ground set. Cycle notation is a parse/print format only.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> ground); // identity
    Permutation(std::vector<int> ground, std::vector<int> images);

    const std::vector<int>& ground() const { return ground_; }
    const std::vector<int>& images() const { return images_; }
    int degree() const { return static_cast<int>(ground_.size()); }

    int apply(int point) const;
    /// (*this . rhs)(x) = (*this)(rhs(x)); grounds must coincide.
    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// first point.
    std::vector<std::vector<int>> cycles() const;

    /// Number of inversions of the one-line form (positions of the ground
    /// order). Equals the word length w.r.t. adjacent transpositions when the
    /// ground is an integer interval.
    int inversions() const;

    /// Sum over nontrivial cycles of (length - 1); the word length w.r.t. the
    /// set of all transpositions.
    int cycle_excess() const;

    std::vector<int> fixed_points() const;

    /// max { |k| : sigma(k) != k }, 0 for the identity.
    int support_radius() const;

    static Permutation transposition(std::vector<int> ground, int a, int b);
    static Permutation from_cycles(std::vector<int> ground,
                                   const std::vector<std::vector<int>>& cycles);

    /// "perm{ground=-2..2; (-1 0)(1 2)}"
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        if (a.ground_ != b.ground_) return a.ground_ < b.ground_;
        return a.images_ < b.images_;
    }

private:
    int pos(int point) const;
    std::vector<int> ground_; // sorted ascending, distinct
    std::vector<int> images_; // images_[i] = sigma(ground_[i])
};

/// Ground set as maximal runs: "-3..-1,1..3", "1..5", "7".
std::string ground_str(const std::vector<int>& ground);

/// Integer interval {lo..hi}.
std::vector<int> interval(int lo, int hi);

/// Extension by the identity to a larger ground set.
Permutation extend_identity(const Permutation& p, std::vector<int> bigger_ground);

/// Transport along the order-preserving bijection between two grounds of
/// equal size.
Permutation relabel(const Permutation& p, std::vector<int> new_ground);

} // namespace qsgd
