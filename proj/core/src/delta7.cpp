#include "blowup/spectral/delta7.hpp"

#include "blowup/exactmath/positivity.hpp"
#include "blowup/spectral/recurrence.hpp"

#include <sstream>

namespace blowup::spectral {

using exact::ComplexRational;
using exact::CRatPoly;
using exact::Rational;
using exact::RatPoly;

namespace {

RatPoly L(std::vector<Rational> c) { return RatPoly(std::move(c), "lambda"); }

RatPoly A_poly(long n) {
    const Rational den(310 * (2 * n + 15) * (n + 2));
    return L({Rational(2 * (458 * n * n + 2357 * n + 2727)) / den, Rational(155 * (4 * n + 9)) / den,
              Rational(155) / den});
}

RatPoly B_poly(long n) {
    const Rational den(155 * (2 * n + 15) * (n + 2));
    return L({Rational(2 * n + 3), Rational(1)}) * L({Rational(2 * n), Rational(1)}) * (Rational(-37) / den);
}

RatPoly r_tilde_poly(long n) {
    return L({Rational(2 * n + 12, 2 * n + 23), Rational(1, n + 7), Rational(1, 4 * n * n + 28 * n + 27)});
}

// Q1, Q2 scaled by one common positive factor to coprime integer coefficients
void joint_primitive(RatPoly& a, RatPoly& b) {
    mpz_class l = 1, g = 0;
    for (const RatPoly* p : {&a, &b})
        for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    for (const RatPoly* p : {&a, &b})
        for (const auto& c : p->coeffs()) {
            mpz_class n = c.numerator() * (l / c.denominator());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
    Rational s(l, g);
    a = a * s;
    b = b * s;
}

}  // namespace

RationalFunction delta7_rational_function() {
    RatPoly p = A_poly(-1), q = L({Rational(1)});
    for (long n = 0; n < 7; ++n) {
        RatPoly next = A_poly(n) * p + B_poly(n) * q;
        q = p;
        p = next;
    }
    RatPoly rt = r_tilde_poly(7);
    RatPoly num = p - q * rt, den = q * rt;
    RatPoly g = exact::gcd(num, den);
    num = num / g;
    den = den / g;
    // normalize the denominator to be monic
    Rational lc = den.leading();
    return {num * (Rational(1) / lc), den * (Rational(1) / lc)};
}

ComplexRational delta7_stepwise(const ComplexRational& lam) {
    ComplexRational r = A_coef<ComplexRational>(-1, lam);
    for (long n = 0; n < 7; ++n) r = A_coef<ComplexRational>(n, lam) + B_coef<ComplexRational>(n, lam) / r;
    return r / r_tilde<ComplexRational>(7, lam) - ComplexRational(1);
}

const char* to_string(Delta7Substitution s) {
    return s == Delta7Substitution::shifted_axis ? "lambda = (t+4)i" : "lambda = 4ti/(t+1)";
}

ModulusSquared delta7_modulus_squared(Delta7Substitution s) {
    RationalFunction f = delta7_rational_function();
    const ComplexRational I = ComplexRational::i();
    CRatPoly N, D;
    if (s == Delta7Substitution::shifted_axis) {
        CRatPoly sub({I * ComplexRational(4), I}, "t");
        N = exact::to_complex(f.num).compose(sub);
        D = exact::to_complex(f.den).compose(sub);
    } else {
        // multiply numerator and denominator by (t+1)^K, K = max degree
        const int K = std::max(f.num.degree(), f.den.degree());
        CRatPoly it4({ComplexRational(0), I * ComplexRational(4)}, "t");
        CRatPoly tp1({ComplexRational(1), ComplexRational(1)}, "t");
        auto homogenize = [&](const RatPoly& p) {
            CRatPoly acc("t");
            for (int k = 0; k <= p.degree(); ++k)
                acc = acc + it4.pow(static_cast<unsigned>(k)) * tp1.pow(static_cast<unsigned>(K - k))
                                * ComplexRational(p[static_cast<std::size_t>(k)]);
            return acc;
        };
        N = homogenize(f.num);
        D = homogenize(f.den);
    }
    auto mod2 = [](const CRatPoly& p) {
        RatPoly re = exact::real_part(p), im = exact::imag_part(p);
        return re * re + im * im;
    };
    ModulusSquared m{mod2(N), mod2(D)};
    RatPoly g = exact::gcd(m.Q1, m.Q2);
    if (g.degree() > 0) {
        m.Q1 = m.Q1 / g;
        m.Q2 = m.Q2 / g;
    }
    joint_primitive(m.Q1, m.Q2);
    return m;
}

exact::Certificate delta7_exact_certificate() {
    exact::Certificate cert("|delta_7| <= 1/3 on the imaginary axis (exact)");
    RationalFunction f = delta7_rational_function();
    {
        std::ostringstream w;
        w << "deg num = " << f.num.degree() << ", deg den = " << f.den.degree();
        cert.add("delta_7 built by unrolling the ratio recurrence", !f.den.is_zero(), w.str());
    }
    for (auto s : {Delta7Substitution::shifted_axis, Delta7Substitution::compressed_axis}) {
        const std::string tag = to_string(s);
        ModulusSquared m = delta7_modulus_squared(s);
        cert.add(tag + ": deg Q1 = 32", m.Q1.degree() == 32, "deg Q1 = " + std::to_string(m.Q1.degree()));
        cert.add(tag + ": deg Q2 = 32", m.Q2.degree() == 32, "deg Q2 = " + std::to_string(m.Q2.degree()));
        bool integral = true, positive = true;
        for (const RatPoly* p : {&m.Q1, &m.Q2})
            for (const auto& c : p->coeffs()) integral = integral && c.is_integer();
        for (std::size_t k = 0; k <= static_cast<std::size_t>(m.Q2.degree()); ++k)
            positive = positive && m.Q2[k].sign() > 0;
        cert.add(tag + ": Q1, Q2 in Z[t]", integral, "");
        cert.add(tag + ": Q2 has all positive coefficients", positive, "Q2(0) = " + m.Q2[0].str());
        RatPoly diff = m.Q2 - m.Q1 * Rational(9);
        cert.absorb(exact::coeff_nonneg_certificate(diff), tag + ": Q2 - 9 Q1 coefficients >= 0");
    }
    return cert;
}

}  // namespace blowup::spectral
