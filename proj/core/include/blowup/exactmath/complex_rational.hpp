#pragma once

#include "blowup/exactmath/rational.hpp"

#include <complex>
#include <iosfwd>

namespace blowup::exact {

// Gaussian rational re + i*im. Division by zero throws std::domain_error.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(const Rational& re) : re_(re) {}
    ComplexRational(long re) : re_(re) {}
    ComplexRational(int re) : re_(re) {}
    ComplexRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    ComplexRational conj() const { return {re_, -im_}; }
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    ComplexRational operator-() const { return {-re_, -im_}; }
    ComplexRational& operator+=(const ComplexRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    ComplexRational& operator-=(const ComplexRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    ComplexRational& operator*=(const ComplexRational& o);
    ComplexRational& operator/=(const ComplexRational& o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

}  // namespace blowup::exact
