#pragma once

#include "blowup/exactmath/complex_rational.hpp"
#include "blowup/exactmath/rational.hpp"

#include <complex>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace blowup::exact {

inline bool coeff_is_zero(const Rational& r) { return r.is_zero(); }
inline bool coeff_is_zero(const ComplexRational& z) { return z.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& z) { return z == 0.0; }
inline bool coeff_is_zero(double x) { return x == 0.0; }

template <class T>
class Poly;

namespace detail {
template <class T>
struct ring {
    static T one() { return T(1); }
    static T from_int(long k) { return T(k); }
};
template <class U>
struct ring<Poly<U>> {
    static Poly<U> one() { return Poly<U>::constant(ring<U>::one()); }
    static Poly<U> from_int(long k) { return Poly<U>::constant(ring<U>::from_int(k)); }
};
}  // namespace detail

// Dense univariate polynomial, coefficients stored in ascending degree.
// The zero polynomial has no coefficients and degree -1.
template <class T>
class Poly {
public:
    using coeff_type = T;

    Poly() = default;
    explicit Poly(std::string var) : var_(std::move(var)) {}
    Poly(std::vector<T> coeffs, std::string var = "x") : c_(std::move(coeffs)), var_(std::move(var)) { trim(); }
    Poly(std::initializer_list<T> coeffs, std::string var = "x") : c_(coeffs), var_(std::move(var)) { trim(); }

    static Poly constant(const T& v, std::string var = "x") { return Poly(std::vector<T>{v}, std::move(var)); }
    static Poly monomial(const T& v, std::size_t k, std::string var = "x") {
        std::vector<T> c(k + 1);
        c[k] = v;
        return Poly(std::move(c), std::move(var));
    }
    static Poly x(std::string var = "x") { return monomial(detail::ring<T>::one(), 1, std::move(var)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::string& var() const { return var_; }
    Poly with_var(std::string v) const { Poly p = *this; p.var_ = std::move(v); return p; }
    const std::vector<T>& coeffs() const { return c_; }
    T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(); }
    T leading() const { return c_.empty() ? T() : c_.back(); }

    template <class U>
    U eval(const U& x) const {
        U acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }
    T operator()(const T& x) const { return eval<T>(x); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(var_);
        std::vector<T> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * detail::ring<T>::from_int(static_cast<long>(k));
        return Poly(std::move(d), var_);
    }
    Poly derivative(int order) const {
        Poly p = *this;
        for (int i = 0; i < order; ++i) p = p.derivative();
        return p;
    }

    // p(q(x)); the result carries the variable of q
    Poly compose(const Poly& q) const {
        Poly acc(q.var_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it, q.var_);
        return acc.with_var(q.var_);
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        check_compatible(*this, o);
        adopt_var(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_compatible(*this, o);
        adopt_var(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_compatible(a, b);
        Poly r(a.degree() > 0 ? a.var_ : b.var_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, T());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const T& s) {
        Poly r = a;
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly pow(unsigned k) const {
        Poly r = constant(detail::ring<T>::one(), var_), b = *this;
        while (k) {
            if (k & 1u) r = r * b;
            b = b * b;
            k >>= 1u;
        }
        return r;
    }

    // Euclidean division over a field; throws on a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        check_compatible(*this, d);
        Poly r = *this;
        if (degree() < d.degree()) return {Poly(var_), r};
        std::vector<T> q(static_cast<std::size_t>(degree() - d.degree() + 1));
        const T lead = d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            T f = r.leading() / lead;
            q[shift] = f;
            for (std::size_t k = 0; k < d.c_.size(); ++k) r.c_[k + shift] -= f * d.c_[k];
            r.c_.pop_back();
            r.trim();
        }
        return {Poly(std::move(q), var_), r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (detail::ring<T>::one() / leading());
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(c_.size());
        for (const auto& v : c_) out.push_back(f(v));
        return Poly<U>(std::move(out), var_);
    }

private:
    static void check_compatible(const Poly& a, const Poly& b) {
        if (a.var_ != b.var_ && a.degree() > 0 && b.degree() > 0)
            throw std::invalid_argument("Poly: incompatible variables '" + a.var_ + "' and '" + b.var_ + "'");
    }
    void adopt_var(const Poly& o) {
        if (degree() <= 0 && o.degree() > 0) var_ = o.var_;
    }
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
    std::string var_ = "x";
};

template <class T>
bool coeff_is_zero(const Poly<T>& p) { return p.is_zero(); }

template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Poly<T>& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const T c = p[static_cast<std::size_t>(k)];
        if (coeff_is_zero(c)) continue;
        if (!first) os << " + ";
        first = false;
        std::ostringstream cs;
        cs << c;
        if (k == 0) {
            os << cs.str();
        } else {
            if (cs.str() != "1") os << cs.str() << "*";
            os << p.var();
            if (k > 1) os << "^" << k;
        }
    }
    return os;
}

using RatPoly = Poly<Rational>;
using CRatPoly = Poly<ComplexRational>;
using BiPoly = Poly<RatPoly>;  // polynomial in an outer variable with RatPoly coefficients

RatPoly rat_poly(std::initializer_list<long> ascending, std::string var = "x");
CRatPoly to_complex(const RatPoly& p);
RatPoly real_part(const CRatPoly& p);
RatPoly imag_part(const CRatPoly& p);
// Scales by a positive rational so that the coefficients are coprime integers.
RatPoly primitive_part(const RatPoly& p);
std::vector<double> to_doubles(const RatPoly& p);
// A dense string form "c0 c1 c2 ..." used in certificate witnesses.
std::string coeff_string(const RatPoly& p);

enum class PolyOp { add, sub, mul, compose, derivative, eval };
// Scalar result only for eval (q must then be constant); derivative ignores q.
std::variant<RatPoly, Rational> poly_arith(const RatPoly& p, const RatPoly& q, PolyOp op);

}  // namespace blowup::exact
