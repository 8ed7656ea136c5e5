#include "blowup/exactmath/rational.hpp"
#include "blowup/exactmath/complex_rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace blowup::exact {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational::Rational(const std::string& s) {
    if (v_.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
    return Rational(mpq_class(x));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned k) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), k);
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool exact_sqrt(const Rational& r, Rational& out) {
    if (r.sign() < 0) return false;
    mpz_class n = r.numerator(), d = r.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rational(sn, sd);
    return true;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    if (o.is_zero()) throw std::domain_error("ComplexRational: division by zero");
    Rational n = o.norm2();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
    return os << '(' << z.re() << (z.im().sign() < 0 ? " - " : " + ") << z.im().abs() << "i)";
}

}  // namespace blowup::exact
