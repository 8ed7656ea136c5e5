#include "blowup/exactmath/poly.hpp"

#include <sstream>

namespace blowup::exact {

RatPoly rat_poly(std::initializer_list<long> ascending, std::string var) {
    std::vector<Rational> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.emplace_back(v);
    return RatPoly(std::move(c), std::move(var));
}

CRatPoly to_complex(const RatPoly& p) {
    return p.map([](const Rational& r) { return ComplexRational(r); });
}

RatPoly real_part(const CRatPoly& p) {
    return p.map([](const ComplexRational& z) { return z.re(); });
}

RatPoly imag_part(const CRatPoly& p) {
    return p.map([](const ComplexRational& z) { return z.im(); });
}

RatPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return p;
    mpz_class l = 1, g = 0;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    for (const auto& c : p.coeffs()) {
        mpz_class n = c.numerator() * (l / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    return p * Rational(l, g);
}

std::vector<double> to_doubles(const RatPoly& p) {
    std::vector<double> out;
    for (const auto& c : p.coeffs()) out.push_back(c.to_double());
    return out;
}

std::string coeff_string(const RatPoly& p) {
    std::ostringstream os;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) os << (k ? " " : "") << p.coeffs()[k];
    return os.str();
}

std::variant<RatPoly, Rational> poly_arith(const RatPoly& p, const RatPoly& q, PolyOp op) {
    switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    case PolyOp::compose: return p.compose(q);
    case PolyOp::derivative: return p.derivative();
    case PolyOp::eval:
        if (q.degree() > 0) throw std::invalid_argument("poly_arith: eval needs a constant argument");
        return p(q[0]);
    }
    throw std::invalid_argument("poly_arith: unknown op");
}

}  // namespace blowup::exact
