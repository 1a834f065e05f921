#include "qsgd/literal.hpp"

#include <cctype>
#include <optional>

namespace qsgd {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!done() && text_[pos_] == ' ') ++pos_;
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool accept_word(const std::string& w) {
        if (text_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    long parse_int() {
        size_t start = pos_;
        bool neg = accept('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        (void)start;
        return neg ? -v : v;
    }

    mpq_class parse_rational() {
        long num = parse_int();
        if (accept('/')) {
            long den = parse_int();
            if (den == 0) fail("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        return mpq_class(num);
    }

    Scalar parse_scalar() {
        mpq_class first = parse_rational();
        if (accept('i')) return Scalar(mpq_class(0), first); // pure imaginary
        size_t mark = pos_;
        if (peek() == '+' || peek() == '-') {
            bool neg = text_[pos_] == '-';
            ++pos_;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                mpq_class second = parse_rational();
                if (accept('i')) return Scalar(first, neg ? mpq_class(-second) : second);
            }
            pos_ = mark; // the sign belonged to the next term
        }
        return Scalar(first);
    }

    Permutation parse_perm() {
        if (!accept_word("perm{ground=")) fail("expected perm literal");
        std::vector<int> ground;
        while (true) {
            int lo = static_cast<int>(parse_int());
            if (accept_word("..")) {
                int hi = static_cast<int>(parse_int());
                if (hi < lo) fail("empty ground range");
                for (int k = lo; k <= hi; ++k) ground.push_back(k);
            } else {
                ground.push_back(lo);
            }
            if (!accept(',')) break;
        }
        expect(';');
        skip_ws();
        std::vector<std::vector<int>> cycles;
        if (accept_word("()")) {
            // identity
        } else {
            while (accept('(')) {
                std::vector<int> cycle;
                cycle.push_back(static_cast<int>(parse_int()));
                while (accept(' ')) cycle.push_back(static_cast<int>(parse_int()));
                expect(')');
                cycles.push_back(std::move(cycle));
            }
            if (cycles.empty()) fail("expected cycles or ()");
        }
        expect('}');
        try {
            return Permutation::from_cycles(std::move(ground), cycles);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    struct ParsedLabel {
        Tag tag = Tag::Plain;
        bool cyclic = false;
        int modulus = 0;
        int residue = 0;
        std::optional<Permutation> perm;
    };

    ParsedLabel parse_label() {
        ParsedLabel out;
        if (accept_word("xi:"))
            out.tag = Tag::Xi;
        else if (accept_word("eta:"))
            out.tag = Tag::Eta;
        if (peek() == 'c' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            out.cyclic = true;
            out.modulus = static_cast<int>(parse_int());
            expect(':');
            out.residue = static_cast<int>(parse_int());
            if (out.modulus < 1 || out.residue < 0 || out.residue >= out.modulus)
                fail("residue out of range");
        } else if (peek() == 'p') {
            out.perm = parse_perm();
        } else {
            fail("expected element label");
        }
        return out;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

std::string print_element(const Vector& v) {
    if (v.basis().rank() != 1)
        throw std::invalid_argument("print_element: element literals are rank-1");
    if (v.is_zero()) return "0";
    std::string out;
    const BasisFactor& f = v.basis().factor(0);
    for (const auto& [l, c] : v.coords()) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*" + f.atom_name(l[0]);
    }
    return out;
}

Vector parse_element(const std::string& text) {
    Parser p(text);
    struct Term {
        Scalar coeff;
        Parser::ParsedLabel label;
    };
    std::vector<Term> terms;
    p.skip_ws();
    bool negate = false;
    while (true) {
        Term t;
        t.coeff = p.parse_scalar();
        if (negate) t.coeff = -t.coeff;
        p.skip_ws();
        p.expect('*');
        p.skip_ws();
        t.label = p.parse_label();
        terms.push_back(std::move(t));
        p.skip_ws();
        size_t mark = p.pos();
        if (p.accept('+'))
            negate = false;
        else if (p.accept('-'))
            negate = true;
        else
            break;
        p.skip_ws();
        if (p.done()) throw ParseError(mark, "dangling separator");
    }
    p.skip_ws();
    if (!p.done()) p.fail("trailing input");
    if (terms.empty()) p.fail("empty element");

    // infer the common group and tagging
    const auto& first = terms.front().label;
    bool doubled = false;
    for (const auto& t : terms) {
        if (t.label.cyclic != first.cyclic) throw ParseError(0, "mixed element kinds");
        if (t.label.cyclic && t.label.modulus != first.modulus)
            throw ParseError(0, "mixed cyclic moduli");
        if (!t.label.cyclic && t.label.perm->ground() != first.perm->ground())
            throw ParseError(0, "mixed grounds");
        if (t.label.tag != Tag::Plain) doubled = true;
    }
    if (doubled)
        for (const auto& t : terms)
            if (t.label.tag == Tag::Plain) throw ParseError(0, "mixed tagged and plain labels");

    FiniteGroup group = first.cyclic ? FiniteGroup::cyclic(first.modulus)
                                     : FiniteGroup::symmetric(first.perm->ground());
    Basis basis = doubled ? Basis::doubled_basis(group) : Basis::group_basis(group);
    Vector v(basis);
    for (const auto& t : terms) {
        int elem = t.label.cyclic ? t.label.residue : group.index_of(*t.label.perm);
        v.add_term(label1(Atom{t.label.tag, elem}), t.coeff);
    }
    return v;
}

Scalar parse_scalar(const std::string& text) {
    Parser p(text);
    Scalar s = p.parse_scalar();
    if (!p.done()) p.fail("trailing input");
    return s;
}

Permutation parse_permutation(const std::string& text) {
    Parser p(text);
    Permutation out = p.parse_perm();
    if (!p.done()) p.fail("trailing input");
    return out;
}

} // namespace qsgd
