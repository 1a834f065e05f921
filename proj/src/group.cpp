#include "qsgd/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qsgd {

struct FiniteGroup::Data {
    Kind kind = Kind::Cyclic;
    int modulus = 0;                      // cyclic
    std::vector<int> ground;              // symmetric
    std::vector<Permutation> elements;    // symmetric, lexicographic
    std::map<std::vector<int>, int> index; // one-line images -> index
    std::vector<int> inverse;
    std::vector<int> table; // op table when size <= 720, row-major
    int n = 0;
};

static constexpr int kTableLimit = 720;
static constexpr int kSymmetricEnumerationLimit = 8;

FiniteGroup FiniteGroup::cyclic(int l) {
    if (l < 1) throw std::invalid_argument("cyclic_group: order must be >= 1");
    auto d = std::make_shared<Data>();
    d->kind = Kind::Cyclic;
    d->modulus = l;
    d->n = l;
    d->inverse.resize(l);
    for (int t = 0; t < l; ++t) d->inverse[t] = (l - t) % l;
    FiniteGroup g;
    g.data_ = std::move(d);
    return g;
}

FiniteGroup FiniteGroup::symmetric(std::vector<int> ground) {
    std::sort(ground.begin(), ground.end());
    if (ground.empty()) throw std::invalid_argument("symmetric_group: empty ground");
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
        throw std::invalid_argument("symmetric_group: duplicate ground point");
    if (static_cast<int>(ground.size()) > kSymmetricEnumerationLimit)
        throw std::invalid_argument("symmetric_group: full enumeration limited to 8 points");

    auto d = std::make_shared<Data>();
    d->kind = Kind::Symmetric;
    d->ground = ground;
    std::vector<int> images = ground;
    do {
        d->index.emplace(images, static_cast<int>(d->elements.size()));
        d->elements.emplace_back(ground, images);
    } while (std::next_permutation(images.begin(), images.end()));
    d->n = static_cast<int>(d->elements.size());

    d->inverse.resize(d->n);
    for (int i = 0; i < d->n; ++i)
        d->inverse[i] = d->index.at(d->elements[i].inverse().images());
    if (d->n <= kTableLimit) {
        d->table.resize(static_cast<size_t>(d->n) * d->n);
        for (int a = 0; a < d->n; ++a)
            for (int b = 0; b < d->n; ++b)
                d->table[static_cast<size_t>(a) * d->n + b] =
                    d->index.at(d->elements[a].compose(d->elements[b]).images());
    }
    FiniteGroup g;
    g.data_ = std::move(d);
    return g;
}

FiniteGroup::Kind FiniteGroup::kind() const { return data_->kind; }
int FiniteGroup::size() const { return data_->n; }

int FiniteGroup::op(int a, int b) const {
    const Data& d = *data_;
    if (d.kind == Kind::Cyclic) return (a + b) % d.modulus;
    if (!d.table.empty()) return d.table[static_cast<size_t>(a) * d.n + b];
    return d.index.at(d.elements[a].compose(d.elements[b]).images());
}

int FiniteGroup::inverse(int a) const { return data_->inverse[a]; }

int FiniteGroup::element_order(int a) const {
    int order = 1;
    int x = a;
    while (x != identity()) {
        x = op(x, a);
        ++order;
    }
    return order;
}

bool FiniteGroup::is_abelian() const {
    if (data_->kind == Kind::Cyclic) return true;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

int FiniteGroup::modulus() const {
    if (data_->kind != Kind::Cyclic) throw std::logic_error("modulus: not a cyclic group");
    return data_->modulus;
}

const std::vector<int>& FiniteGroup::ground() const {
    if (data_->kind != Kind::Symmetric) throw std::logic_error("ground: not a symmetric group");
    return data_->ground;
}

const Permutation& FiniteGroup::permutation(int idx) const {
    if (data_->kind != Kind::Symmetric)
        throw std::logic_error("permutation: not a symmetric group");
    return data_->elements[idx];
}

int FiniteGroup::index_of(const Permutation& p) const {
    if (data_->kind != Kind::Symmetric)
        throw std::logic_error("index_of: not a symmetric group");
    if (p.ground() != data_->ground)
        throw std::invalid_argument("index_of: ground mismatch");
    return data_->index.at(p.images());
}

std::string FiniteGroup::element_name(int idx) const {
    if (data_->kind == Kind::Cyclic)
        return "c" + std::to_string(data_->modulus) + ":" + std::to_string(idx);
    return data_->elements[idx].str();
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(size(), false);
    for (int g = 0; g < size(); ++g) {
        if (seen[g]) continue;
        std::set<int> cls;
        for (int x = 0; x < size(); ++x) cls.insert(op(op(x, g), inverse(x)));
        std::vector<int> sorted(cls.begin(), cls.end());
        for (int h : sorted) seen[h] = true;
        classes.push_back(std::move(sorted));
    }
    return classes;
}

bool FiniteGroup::operator==(const FiniteGroup& o) const {
    if (data_ == o.data_) return true;
    if (data_->kind != o.data_->kind) return false;
    if (data_->kind == Kind::Cyclic) return data_->modulus == o.data_->modulus;
    return data_->ground == o.data_->ground;
}

GeneratingSet GeneratingSet::make(FiniteGroup group, std::vector<int> generators) {
    std::set<int> gens(generators.begin(), generators.end());
    if (gens.size() != generators.size())
        throw std::invalid_argument("GeneratingSet: duplicate generator");
    for (int s : generators) {
        if (s == group.identity())
            throw std::invalid_argument("GeneratingSet: identity is not allowed");
        if (!gens.count(group.inverse(s)))
            throw std::invalid_argument("GeneratingSet: not closed under inverses");
    }
    return GeneratingSet{std::move(group), std::move(generators)};
}

GeneratingSet adjacent_transpositions(const FiniteGroup& sym) {
    const auto& ground = sym.ground();
    std::vector<int> gens;
    for (size_t i = 0; i + 1 < ground.size(); ++i)
        gens.push_back(sym.index_of(
            Permutation::transposition(ground, ground[i], ground[i + 1])));
    return GeneratingSet::make(sym, std::move(gens));
}

GeneratingSet pm_one(const FiniteGroup& cyc) {
    int l = cyc.modulus();
    std::vector<int> gens;
    if (l >= 2) gens.push_back(1);
    if (l >= 3) gens.push_back(l - 1);
    return GeneratingSet::make(cyc, std::move(gens));
}

GeneratingSet all_transpositions(const FiniteGroup& sym) {
    const auto& ground = sym.ground();
    std::vector<int> gens;
    for (size_t i = 0; i < ground.size(); ++i)
        for (size_t j = i + 1; j < ground.size(); ++j)
            gens.push_back(sym.index_of(
                Permutation::transposition(ground, ground[i], ground[j])));
    return GeneratingSet::make(sym, std::move(gens));
}

bool GroupAutomorphism::is_identity() const {
    for (int i = 0; i < group.size(); ++i)
        if (map[i] != i) return false;
    return true;
}

bool GroupAutomorphism::is_involution() const {
    for (int i = 0; i < group.size(); ++i)
        if (map[map[i]] != i) return false;
    return true;
}

GroupAutomorphism GroupAutomorphism::compose(const GroupAutomorphism& inner) const {
    if (!(group == inner.group))
        throw std::invalid_argument("GroupAutomorphism: group mismatch");
    std::vector<int> out(map.size());
    for (size_t i = 0; i < map.size(); ++i) out[i] = map[inner.map[i]];
    return GroupAutomorphism{group, std::move(out)};
}

GroupAutomorphism GroupAutomorphism::identity(FiniteGroup g) {
    std::vector<int> map(g.size());
    std::iota(map.begin(), map.end(), 0);
    return GroupAutomorphism{std::move(g), std::move(map)};
}

GroupAutomorphism GroupAutomorphism::from_images(FiniteGroup g, std::vector<int> map) {
    if (static_cast<int>(map.size()) != g.size())
        throw std::invalid_argument("GroupAutomorphism: size mismatch");
    std::vector<bool> hit(map.size(), false);
    for (int v : map) {
        if (v < 0 || v >= g.size() || hit[v])
            throw std::invalid_argument("GroupAutomorphism: not a bijection");
        hit[v] = true;
    }
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            if (map[g.op(a, b)] != g.op(map[a], map[b]))
                throw std::invalid_argument(
                    "GroupAutomorphism: not a homomorphism at (" +
                    g.element_name(a) + ", " + g.element_name(b) + ")");
    return GroupAutomorphism{std::move(g), std::move(map)};
}

GroupAutomorphism GroupAutomorphism::conjugation(const FiniteGroup& g, int by) {
    std::vector<int> map(g.size());
    int inv = g.inverse(by);
    for (int x = 0; x < g.size(); ++x) map[x] = g.op(g.op(by, x), inv);
    return GroupAutomorphism{g, std::move(map)};
}

std::vector<int> word_lengths(const GeneratingSet& s) {
    const FiniteGroup& g = s.group;
    std::vector<int> dist(g.size(), -1);
    std::deque<int> queue;
    dist[g.identity()] = 0;
    queue.push_back(g.identity());
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int gen : s.generators) {
            int y = g.op(x, gen);
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

int word_length_bfs(const GeneratingSet& s, int g) {
    std::vector<int> dist = word_lengths(s);
    if (dist[g] < 0) {
        for (int x = 0; x < s.group.size(); ++x)
            if (dist[x] < 0)
                throw std::invalid_argument("word_length_bfs: S does not generate; unreached " +
                                            s.group.element_name(x));
    }
    return dist[g];
}

int coxeter_length(const Permutation& sigma) { return sigma.inversions(); }

int transposition_length(const Permutation& sigma) { return sigma.cycle_excess(); }

int support_radius(const Permutation& sigma, GroundMode mode) {
    if (mode == GroundMode::Even) {
        for (int k : sigma.ground())
            if (k == 0)
                throw std::invalid_argument("support_radius: even mode forbids 0 in the ground");
    }
    return sigma.support_radius();
}

std::vector<int> fixed_points(const Permutation& pi) { return pi.fixed_points(); }

GroupAutomorphism flip_automorphism(int n) {
    if (n < 2) throw std::invalid_argument("flip_automorphism: n must be >= 2");
    FiniteGroup g = FiniteGroup::symmetric(interval(1, n));
    std::vector<int> rev(n);
    for (int i = 0; i < n; ++i) rev[i] = n - i;
    int w0 = g.index_of(Permutation(interval(1, n), rev));
    return GroupAutomorphism::conjugation(g, w0);
}

GroupAutomorphism inverse_automorphism(const FiniteGroup& g) {
    if (!g.is_abelian())
        throw std::invalid_argument("inverse_automorphism: group is not abelian");
    std::vector<int> map(g.size());
    for (int x = 0; x < g.size(); ++x) map[x] = g.inverse(x);
    return GroupAutomorphism{g, std::move(map)};
}

Permutation reflection_permutation(const std::vector<int>& ground, ReflectionCenter center) {
    Permutation id{std::vector<int>(ground)};
    const auto& sorted = id.ground();
    std::vector<int> images(sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i) {
        int image = center == ReflectionCenter::Zero ? -sorted[i] : 1 - sorted[i];
        if (!std::binary_search(sorted.begin(), sorted.end(), image))
            throw std::invalid_argument("reflection: ground is not symmetric about the center");
        images[i] = image;
    }
    return Permutation(sorted, images);
}

GroupAutomorphism reflection_conjugation(const std::vector<int>& ground, ReflectionCenter center) {
    Permutation pi = reflection_permutation(ground, center);
    FiniteGroup g = FiniteGroup::symmetric(ground);
    return GroupAutomorphism::conjugation(g, g.index_of(pi));
}

namespace {

// Greedy generating sequence: add the smallest element outside the current
// closure until the whole group is generated.
std::vector<int> generating_sequence(const FiniteGroup& g) {
    std::vector<int> gens;
    std::set<int> closure{g.identity()};
    auto close = [&]() {
        std::deque<int> queue(closure.begin(), closure.end());
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int s : gens) {
                int y = g.op(x, s);
                if (closure.insert(y).second) queue.push_back(y);
            }
        }
    };
    for (int x = 0; x < g.size(); ++x) {
        if (closure.count(x)) continue;
        gens.push_back(x);
        close();
    }
    return gens;
}

} // namespace

std::vector<GroupAutomorphism> automorphism_group(const FiniteGroup& g) {
    if (g.size() > 24)
        throw std::invalid_argument("automorphism_group: guard |G| <= 24 exceeded");
    std::vector<int> gens = generating_sequence(g);
    const int r = static_cast<int>(gens.size());
    std::vector<std::vector<int>> candidates(r);
    for (int i = 0; i < r; ++i) {
        int order = g.element_order(gens[i]);
        for (int x = 0; x < g.size(); ++x)
            if (g.element_order(x) == order) candidates[i].push_back(x);
    }

    std::vector<GroupAutomorphism> out;
    std::vector<int> choice(r, 0);
    while (true) {
        // map each group element through its generator word via BFS
        std::vector<int> map(g.size(), -1);
        map[g.identity()] = g.identity();
        std::deque<int> queue{g.identity()};
        bool ok = true;
        while (ok && !queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int i = 0; i < r; ++i) {
                int y = g.op(x, gens[i]);
                int img = g.op(map[x], candidates[i][choice[i]]);
                if (map[y] < 0) {
                    map[y] = img;
                    queue.push_back(y);
                } else if (map[y] != img) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            std::vector<bool> hit(g.size(), false);
            for (int v : map) {
                if (v < 0 || hit[v]) {
                    ok = false;
                    break;
                }
                hit[v] = true;
            }
        }
        if (ok) {
            for (int a = 0; ok && a < g.size(); ++a)
                for (int b = 0; b < g.size(); ++b)
                    if (map[g.op(a, b)] != g.op(map[a], map[b])) {
                        ok = false;
                        break;
                    }
        }
        if (ok) out.push_back(GroupAutomorphism{g, std::move(map)});

        int i = r - 1;
        while (i >= 0 && ++choice[i] == static_cast<int>(candidates[i].size())) {
            choice[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end(),
              [](const GroupAutomorphism& a, const GroupAutomorphism& b) { return a.map < b.map; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const GroupAutomorphism& a, const GroupAutomorphism& b) {
                              return a.map == b.map;
                          }),
              out.end());
    return out;
}

std::optional<GroupAutomorphism> conjugate_in_aut(const FiniteGroup& g,
                                                  const GroupAutomorphism& theta1,
                                                  const GroupAutomorphism& theta2) {
    for (const GroupAutomorphism& theta : automorphism_group(g))
        if (theta.compose(theta1) == theta2.compose(theta)) return theta;
    return std::nullopt;
}

} // namespace qsgd
