#include "qsgd/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsgd {

int BasisFactor::ordinal_of(const Atom& a) const {
    if (!doubled) {
        if (a.tag != Tag::Plain) throw std::invalid_argument("Basis: tagged atom in a plain factor");
        return a.elem;
    }
    if (a.tag == Tag::Xi) return a.elem;
    if (a.tag == Tag::Eta) return group.size() + a.elem;
    throw std::invalid_argument("Basis: plain atom in a doubled factor");
}

Atom BasisFactor::atom_at(int ordinal) const {
    if (!doubled) return Atom{Tag::Plain, ordinal};
    int n = group.size();
    return ordinal < n ? Atom{Tag::Xi, ordinal} : Atom{Tag::Eta, ordinal - n};
}

std::string BasisFactor::atom_name(const Atom& a) const {
    std::string name = group.element_name(a.elem);
    switch (a.tag) {
        case Tag::Plain: return name;
        case Tag::Xi: return "xi:" + name;
        case Tag::Eta: return "eta:" + name;
    }
    return name;
}

Basis Basis::group_basis(FiniteGroup g) {
    Basis b;
    b.factors_.push_back(BasisFactor{std::move(g), false});
    return b;
}

Basis Basis::doubled_basis(FiniteGroup g) {
    Basis b;
    b.factors_.push_back(BasisFactor{std::move(g), true});
    return b;
}

Basis Basis::tensor(const Basis& o) const {
    Basis b;
    b.factors_ = factors_;
    b.factors_.insert(b.factors_.end(), o.factors_.begin(), o.factors_.end());
    return b;
}

long long Basis::dim() const {
    long long d = 1;
    for (const auto& f : factors_) d *= f.dim();
    return d;
}

long long Basis::ordinal_of(const Label& l) const {
    if (static_cast<int>(l.size()) != rank())
        throw std::invalid_argument("Basis: label rank mismatch");
    long long ord = 0;
    for (size_t i = 0; i < l.size(); ++i)
        ord = ord * factors_[i].dim() + factors_[i].ordinal_of(l[i]);
    return ord;
}

std::string Basis::label_name(const Label& l) const {
    std::string out;
    for (size_t i = 0; i < l.size(); ++i) {
        if (i) out += " (x) ";
        out += factors_[i].atom_name(l[i]);
    }
    return out;
}

void Basis::for_each_label(const std::function<void(const Label&)>& fn) const {
    Label current(rank());
    std::function<void(int)> rec = [&](int leg) {
        if (leg == rank()) {
            fn(current);
            return;
        }
        for (int o = 0; o < factors_[leg].dim(); ++o) {
            current[leg] = factors_[leg].atom_at(o);
            rec(leg + 1);
        }
    };
    rec(0);
}

Vector Vector::basis_vector(const Basis& basis, const Label& l) {
    Vector v(basis);
    v.add_term(l, Scalar(1));
    return v;
}

Scalar Vector::coefficient(const Label& l) const {
    auto it = coords_.find(l);
    return it == coords_.end() ? Scalar() : it->second;
}

void Vector::add_term(const Label& l, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coords_.emplace(l, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coords_.erase(it);
    }
}

Vector& Vector::operator+=(const Vector& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("Vector: basis mismatch");
    if (this == &o) {
        for (auto& [l, c] : coords_) c += c;
        return *this;
    }
    for (const auto& [l, c] : o.coords_) add_term(l, c);
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("Vector: basis mismatch");
    if (this == &o) {
        coords_.clear();
        return *this;
    }
    for (const auto& [l, c] : o.coords_) add_term(l, -c);
    return *this;
}

Vector Vector::scaled(const Scalar& c) const {
    Vector out(basis_);
    if (c.is_zero()) return out;
    for (const auto& [l, v] : coords_) out.coords_.emplace(l, v * c);
    return out;
}

Vector tensor(const Vector& x, const Vector& y) {
    Vector out(x.basis().tensor(y.basis()));
    for (const auto& [lx, cx] : x.coords())
        for (const auto& [ly, cy] : y.coords()) {
            Label l = lx;
            l.insert(l.end(), ly.begin(), ly.end());
            out.add_term(l, cx * cy);
        }
    return out;
}

void LinearMap::set_image(const Label& l, Vector v) {
    if (v.basis() != codomain_) throw std::invalid_argument("LinearMap: codomain mismatch");
    images_[l] = std::move(v);
}

const Vector& LinearMap::image(const Label& l) const {
    auto it = images_.find(l);
    if (it == images_.end()) throw std::invalid_argument("LinearMap: image not defined");
    return it->second;
}

Vector LinearMap::apply(const Vector& v) const {
    if (v.basis() != domain_) throw std::invalid_argument("LinearMap: domain mismatch");
    Vector out(codomain_);
    for (const auto& [l, c] : v.coords()) out += image(l).scaled(c);
    return out;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (inner.codomain_ != domain_)
        throw std::invalid_argument("LinearMap: composition mismatch");
    LinearMap out(inner.domain_, codomain_);
    for (const auto& [l, v] : inner.images_) out.set_image(l, apply(v));
    return out;
}

LinearMap LinearMap::identity(const Basis& b) {
    LinearMap out(b, b);
    b.for_each_label([&](const Label& l) { out.set_image(l, Vector::basis_vector(b, l)); });
    return out;
}

int LinearMap::rank() const {
    SpanBuilder span(codomain_);
    for (const auto& [l, v] : images_) span.insert(v);
    return span.rank();
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
    LinearMap out(f.domain().tensor(g.domain()), f.codomain().tensor(g.codomain()));
    for (const auto& [lf, vf] : f.images())
        for (const auto& [lg, vg] : g.images()) {
            Label l = lf;
            l.insert(l.end(), lg.begin(), lg.end());
            out.set_image(l, tensor(vf, vg));
        }
    return out;
}

Vector apply_on_leg(const std::function<Vector(const Atom&)>& image, const Basis& image_basis,
                    const Vector& v, int leg) {
    // result basis: factors before leg, then the image factors, then the rest
    Basis result;
    auto append = [&](const BasisFactor& f) {
        Basis single = f.doubled ? Basis::doubled_basis(f.group) : Basis::group_basis(f.group);
        result = result.rank() == 0 ? single : result.tensor(single);
    };
    for (int i = 0; i < leg; ++i) append(v.basis().factor(i));
    for (const auto& f : image_basis.factors()) append(f);
    for (int i = leg + 1; i < v.basis().rank(); ++i) append(v.basis().factor(i));
    Vector out(result);
    for (const auto& [l, c] : v.coords()) {
        Vector img = image(l[leg]);
        for (const auto& [li, ci] : img.coords()) {
            Label nl;
            nl.reserve(l.size() - 1 + li.size());
            nl.insert(nl.end(), l.begin(), l.begin() + leg);
            nl.insert(nl.end(), li.begin(), li.end());
            nl.insert(nl.end(), l.begin() + leg + 1, l.end());
            out.add_term(nl, c * ci);
        }
    }
    return out;
}

SpanBuilder::Row SpanBuilder::reduce(const Vector& v) const {
    Row row;
    row.reserve(v.coords().size());
    for (const auto& [l, c] : v.coords()) row.emplace_back(basis_.ordinal_of(l), c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!row.empty()) {
        auto it = rows_.find(row.front().first);
        if (it == rows_.end()) break;
        // row -= lead * pivot_row (pivot rows are normalized to lead 1)
        Scalar lead = row.front().second;
        Row next;
        next.reserve(row.size() + it->second.size());
        auto a = row.begin();
        auto b = it->second.begin();
        while (a != row.end() || b != it->second.end()) {
            if (b == it->second.end() || (a != row.end() && a->first < b->first)) {
                next.push_back(*a++);
            } else if (a == row.end() || b->first < a->first) {
                next.emplace_back(b->first, -(lead * b->second));
                ++b;
            } else {
                Scalar c = a->second - lead * b->second;
                if (!c.is_zero()) next.emplace_back(a->first, c);
                ++a;
                ++b;
            }
        }
        row = std::move(next);
    }
    return row;
}

std::optional<Vector> SpanBuilder::insert(const Vector& v) {
    if (v.basis() != basis_) throw std::invalid_argument("SpanBuilder: basis mismatch");
    Row row = reduce(v);
    if (row.empty()) return std::nullopt;
    Scalar lead = row.front().second;
    for (auto& [o, c] : row) c = c / lead;
    long long pivot = row.front().first;
    rows_.emplace(pivot, row);

    // convert back to a Vector for callers that multiply rows further
    Vector out(basis_);
    // ordinal -> label: decode mixed radix
    for (const auto& [ord, c] : row) {
        Label l(basis_.rank());
        long long rem = ord;
        for (int i = basis_.rank() - 1; i >= 0; --i) {
            int d = basis_.factor(i).dim();
            l[i] = basis_.factor(i).atom_at(static_cast<int>(rem % d));
            rem /= d;
        }
        out.add_term(l, c);
    }
    return out;
}

bool SpanBuilder::contains(const Vector& v) const { return reduce(v).empty(); }

int span_rank(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return 0;
    SpanBuilder span(vectors.front().basis());
    for (const auto& v : vectors) span.insert(v);
    return span.rank();
}

AffineResult solve_affine(const std::vector<std::pair<Vector, Scalar>>& constraints) {
    AffineResult result;
    // collect unknowns in label order
    std::map<Label, int> columns;
    for (const auto& [form, rhs] : constraints)
        for (const auto& [l, c] : form.coords()) columns.emplace(l, 0);
    int ncols = 0;
    for (auto& [l, idx] : columns) idx = ncols++;

    const int nrows = static_cast<int>(constraints.size());
    std::vector<std::vector<Scalar>> m(nrows, std::vector<Scalar>(ncols + 1));
    std::vector<int> origin(nrows);
    for (int r = 0; r < nrows; ++r) {
        origin[r] = r;
        for (const auto& [l, c] : constraints[r].first.coords()) m[r][columns.at(l)] = c;
        m[r][ncols] = constraints[r].second;
    }

    // fraction-free forward elimination (Bareiss); prev divides exactly
    Scalar prev(1);
    int row = 0;
    std::vector<int> pivot_col_of_row;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int p = -1;
        for (int r = row; r < nrows; ++r)
            if (!m[r][col].is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        std::swap(origin[row], origin[p]);
        for (int r = row + 1; r < nrows; ++r) {
            for (int c = col + 1; c <= ncols; ++c)
                m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev;
            m[r][col] = Scalar();
        }
        prev = m[row][col];
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < nrows; ++r) {
        bool all_zero = true;
        for (int c = 0; c < ncols; ++c)
            if (!m[r][c].is_zero()) all_zero = false;
        if (all_zero && !m[r][ncols].is_zero()) {
            result.feasible = false;
            result.witness_row = origin[r];
            return result;
        }
    }

    // back substitution; free unknowns stay 0
    std::vector<Scalar> x(ncols);
    for (int r = row - 1; r >= 0; --r) {
        int col = pivot_col_of_row[r];
        Scalar acc = m[r][ncols];
        for (int c = col + 1; c < ncols; ++c) acc -= m[r][c] * x[c];
        x[col] = acc / m[r][col];
    }
    result.feasible = true;
    for (const auto& [l, idx] : columns) result.assignment[l] = x[idx];

    // exact self-check against the original constraints
    for (int r = 0; r < nrows; ++r) {
        Scalar acc;
        for (const auto& [l, c] : constraints[r].first.coords())
            acc += c * result.assignment.at(l);
        if (acc != constraints[r].second)
            throw std::logic_error("solve_affine: self-check failed");
    }
    return result;
}

} // namespace qsgd
