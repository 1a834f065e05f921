#include "qsgd/scalar.hpp"

#include <stdexcept>

namespace qsgd {

Scalar Scalar::operator/(const Scalar& b) const {
    mpq_class n = b.norm();
    if (sgn(n) == 0) throw std::domain_error("Scalar: division by zero");
    // (a + bi) / (c + di) = (a + bi)(c - di) / (c^2 + d^2)
    Scalar num = *this * b.conj();
    return Scalar(num.re_ / n, num.im_ / n);
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out += re_.get_str();
    if (sgn(im_) != 0) {
        if (sgn(re_) != 0 && sgn(im_) > 0) out += "+";
        if (sgn(im_) < 0) {
            out += "-";
            out += mpq_class(-im_).get_str();
        } else {
            out += im_.get_str();
        }
        out += "i";
    }
    return out;
}

bool sqrt_rational(const mpq_class& q, mpq_class& out) {
    if (sgn(q) < 0) return false;
    if (sgn(q) == 0) {
        out = 0;
        return true;
    }
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = mpq_class(rn, rd);
    out.canonicalize();
    return true;
}

bool sqrt_gaussian(const Scalar& k, Scalar& out) {
    const mpq_class& x = k.re();
    const mpq_class& y = k.im();
    if (sgn(y) == 0) {
        mpq_class r;
        if (sgn(x) >= 0) {
            if (!sqrt_rational(x, r)) return false;
            out = Scalar(r);
        } else {
            if (!sqrt_rational(mpq_class(-x), r)) return false;
            out = Scalar(mpq_class(0), r);
        }
        return true;
    }
    // (p + qi)^2 = x + yi  =>  p^2 - q^2 = x, 2pq = y, p^2 + q^2 = |k|
    mpq_class modulus;
    if (!sqrt_rational(k.norm(), modulus)) return false;
    mpq_class p2 = (x + modulus) / 2;
    mpq_class p;
    if (!sqrt_rational(p2, p)) return false;
    if (sgn(p) == 0) return false; // y != 0 forces p != 0
    mpq_class q = y / (2 * p);
    out = Scalar(p, q);
    return true;
}

} // namespace qsgd
