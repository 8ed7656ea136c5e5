#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace blowup::exact {

// Arbitrary precision rational kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(v) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const std::string& s);

    static Rational from_double(double x);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(unsigned k) const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact square root when the argument is a square of a rational; otherwise false.
bool exact_sqrt(const Rational& r, Rational& out);

}  // namespace blowup::exact
