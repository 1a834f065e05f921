#include "qsgd/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qsgd {

std::vector<int> interval(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("interval: empty range");
    std::vector<int> out;
    out.reserve(hi - lo + 1);
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

static std::vector<int> normalize_ground(std::vector<int> ground) {
    std::sort(ground.begin(), ground.end());
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
        throw std::invalid_argument("Permutation: duplicate ground point");
    if (ground.empty()) throw std::invalid_argument("Permutation: empty ground");
    return ground;
}

Permutation::Permutation(std::vector<int> ground)
    : ground_(normalize_ground(std::move(ground))), images_(ground_) {}

Permutation::Permutation(std::vector<int> ground, std::vector<int> images)
    : ground_(normalize_ground(std::move(ground))), images_(std::move(images)) {
    if (images_.size() != ground_.size())
        throw std::invalid_argument("Permutation: image count mismatch");
    std::vector<int> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ground_)
        throw std::invalid_argument("Permutation: images are not a bijection of the ground");
}

int Permutation::pos(int point) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), point);
    if (it == ground_.end() || *it != point)
        throw std::invalid_argument("Permutation: point not in ground");
    return static_cast<int>(it - ground_.begin());
}

int Permutation::apply(int point) const { return images_[pos(point)]; }

Permutation Permutation::compose(const Permutation& rhs) const {
    if (ground_ != rhs.ground_)
        throw std::invalid_argument("Permutation: ground mismatch in composition");
    std::vector<int> images(ground_.size());
    for (size_t i = 0; i < ground_.size(); ++i) images[i] = apply(rhs.images_[i]);
    Permutation out;
    out.ground_ = ground_;
    out.images_ = std::move(images);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> images(ground_.size());
    for (size_t i = 0; i < ground_.size(); ++i) images[pos(images_[i])] = ground_[i];
    Permutation out;
    out.ground_ = ground_;
    out.images_ = std::move(images);
    return out;
}

bool Permutation::is_identity() const { return images_ == ground_; }

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(ground_.size(), false);
    for (size_t i = 0; i < ground_.size(); ++i) {
        if (seen[i] || images_[i] == ground_[i]) continue;
        std::vector<int> cycle;
        int p = ground_[i];
        while (true) {
            int ip = pos(p);
            if (seen[ip]) break;
            seen[ip] = true;
            cycle.push_back(p);
            p = images_[ip];
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

int Permutation::inversions() const {
    int count = 0;
    const int n = degree();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (images_[i] > images_[j]) ++count;
    return count;
}

int Permutation::cycle_excess() const {
    int total = 0;
    for (const auto& c : cycles()) total += static_cast<int>(c.size()) - 1;
    return total;
}

std::vector<int> Permutation::fixed_points() const {
    std::vector<int> out;
    for (size_t i = 0; i < ground_.size(); ++i)
        if (images_[i] == ground_[i]) out.push_back(ground_[i]);
    return out;
}

int Permutation::support_radius() const {
    int radius = 0;
    for (size_t i = 0; i < ground_.size(); ++i)
        if (images_[i] != ground_[i]) radius = std::max(radius, std::abs(ground_[i]));
    return radius;
}

Permutation Permutation::transposition(std::vector<int> ground, int a, int b) {
    Permutation out(std::move(ground));
    int pa = out.pos(a), pb = out.pos(b);
    std::swap(out.images_[pa], out.images_[pb]);
    return out;
}

Permutation Permutation::from_cycles(std::vector<int> ground,
                                     const std::vector<std::vector<int>>& cycles) {
    Permutation acc(std::move(ground));
    for (const auto& c : cycles) {
        if (c.size() < 2) continue;
        Permutation cyc(acc.ground_); // (a b c): a->b, b->c, c->a
        for (size_t i = 0; i < c.size(); ++i)
            cyc.images_[cyc.pos(c[i])] = c[(i + 1) % c.size()];
        std::vector<int> sorted = cyc.images_;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != cyc.ground_)
            throw std::invalid_argument("Permutation: invalid cycle");
        acc = cyc.compose(acc);
    }
    return acc;
}

Permutation extend_identity(const Permutation& p, std::vector<int> bigger_ground) {
    Permutation id(std::move(bigger_ground));
    std::vector<int> images = id.ground();
    for (size_t i = 0; i < images.size(); ++i) {
        int point = id.ground()[i];
        if (std::binary_search(p.ground().begin(), p.ground().end(), point))
            images[i] = p.apply(point);
    }
    return Permutation(id.ground(), images);
}

Permutation relabel(const Permutation& p, std::vector<int> new_ground) {
    Permutation id(std::move(new_ground));
    if (id.ground().size() != p.ground().size())
        throw std::invalid_argument("relabel: ground size mismatch");
    // position i of the old ground corresponds to position i of the new one
    std::vector<int> images(id.ground().size());
    for (size_t i = 0; i < images.size(); ++i) {
        int image_old = p.images()[i];
        auto it = std::lower_bound(p.ground().begin(), p.ground().end(), image_old);
        images[i] = id.ground()[it - p.ground().begin()];
    }
    return Permutation(id.ground(), images);
}

std::string ground_str(const std::vector<int>& ground) {
    std::string out;
    size_t i = 0;
    while (i < ground.size()) {
        size_t j = i;
        while (j + 1 < ground.size() && ground[j + 1] == ground[j] + 1) ++j;
        if (!out.empty()) out += ",";
        if (j > i)
            out += std::to_string(ground[i]) + ".." + std::to_string(ground[j]);
        else
            out += std::to_string(ground[i]);
        i = j + 1;
    }
    return out;
}

std::string Permutation::str() const {
    std::string out = "perm{ground=" + ground_str(ground_) + "; ";
    auto cs = cycles();
    if (cs.empty()) {
        out += "()";
    } else {
        for (const auto& c : cs) {
            out += "(";
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) out += " ";
                out += std::to_string(c[i]);
            }
            out += ")";
        }
    }
    out += "}";
    return out;
}

} // namespace qsgd
