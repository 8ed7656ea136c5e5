#include "blowup/exactmath/positivity.hpp"

#include <sstream>
#include <stdexcept>

namespace blowup::exact {

namespace {

int sign_of(const Rational& r) { return r.sign(); }

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

std::string str(const Rational& r) { return r.str(); }

}  // namespace

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
    std::vector<RatPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    RatPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    for (;;) {
        RatPoly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        // positive rescaling keeps the signs and the numbers small
        chain.push_back(-primitive_part(r));
    }
    return chain;
}

int sign_variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
    std::vector<int> s;
    for (const auto& q : chain) s.push_back(sign_of(q(x)));
    return count_variations(s);
}

int sign_variations_at_infinity(const std::vector<RatPoly>& chain) {
    std::vector<int> s;
    for (const auto& q : chain) s.push_back(sign_of(q.leading()));
    return count_variations(s);
}

int count_roots_above(const RatPoly& p, const Rational& a) {
    if (p.is_zero()) throw std::invalid_argument("count_roots_above: zero polynomial");
    if (p(a).is_zero()) throw std::invalid_argument("count_roots_above: p(a) = 0");
    auto chain = sturm_sequence(p);
    return sign_variations_at(chain, a) - sign_variations_at_infinity(chain);
}

Certificate coeff_nonneg_certificate(const RatPoly& p) {
    Certificate c("coefficients nonnegative");
    c.add("polynomial is nonzero", !p.is_zero(), p.is_zero() ? "p = 0" : "degree " + std::to_string(p.degree()));
    std::ostringstream neg;
    bool ok = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k].sign() < 0) {
            if (!ok) neg << ",";
            neg << k;
            ok = false;
        }
    }
    c.add("every coefficient >= 0", ok, ok ? "no negative coefficient" : "negative at index " + neg.str());
    return c;
}

Certificate positive_on_halfline(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("positive_on_halfline: zero polynomial");
    Certificate c("positive on [0,inf)");
    const Rational p0 = p(Rational(0));
    c.add("p(0) > 0", p0.sign() > 0, "p(0) = " + str(p0));
    c.add("leading coefficient > 0", p.leading().sign() > 0, "lc = " + str(p.leading()));
    if (p0.is_zero()) {
        c.add("no root in (0,inf)", false, "p(0) = 0, Sturm count undefined");
        return c;
    }
    auto chain = sturm_sequence(p);
    int v0 = sign_variations_at(chain, Rational(0));
    int vinf = sign_variations_at_infinity(chain);
    std::ostringstream w;
    w << "Sturm chain length " << chain.size() << ", V(0) = " << v0 << ", V(inf) = " << vinf
      << ", distinct roots in (0,inf) = " << (v0 - vinf);
    c.add("no root in (0,inf)", v0 == vinf, w.str());
    return c;
}

Certificate sqrt_compare(const RatPoly& P, const RatPoly& Q, const RatPoly& R) {
    Certificate c("P*sqrt(Q) - R > 0 on [0,inf)");
    if (Q.is_zero() || P.is_zero()) {
        c.add("P and Q nonzero", false, "zero input");
        return c;
    }
    c.absorb(positive_on_halfline(Q), "Q > 0");
    c.absorb(positive_on_halfline(P), "P > 0");
    RatPoly D = P * P * Q - R * R;
    if (!D.is_zero()) {
        Certificate dc = positive_on_halfline(D);
        if (dc.pass()) {
            c.add("P^2 Q - R^2 computed", true, coeff_string(D));
            c.absorb(dc, "P^2 Q - R^2 > 0");
            return c;
        }
    }
    if (R.is_zero()) {
        c.add("R <= 0", true, "R = 0");
        return c;
    }
    Certificate rc = positive_on_halfline(-R);
    if (rc.pass()) {
        c.absorb(rc, "-R > 0");
        return c;
    }
    c.add("P^2 Q - R^2 > 0 or R <= 0", false, "P^2 Q - R^2 = " + coeff_string(D));
    return c;
}

Certificate surd_positive(const RatPoly& A, const RatPoly& B, const RatPoly& Q) {
    Certificate c("A - B*sqrt(Q) > 0 on [0,inf)");
    if (A.is_zero() || B.is_zero() || Q.is_zero()) {
        c.add("A, B and Q nonzero", false, "zero input");
        return c;
    }
    c.absorb(positive_on_halfline(Q), "Q > 0");
    c.absorb(positive_on_halfline(B), "B > 0");
    c.absorb(positive_on_halfline(A), "A > 0");
    RatPoly D = A * A - B * B * Q;
    if (D.is_zero()) {
        c.add("A^2 - B^2 Q > 0", false, "A^2 - B^2 Q = 0");
        return c;
    }
    c.add("A^2 - B^2 Q computed", true, coeff_string(D));
    c.absorb(positive_on_halfline(D), "A^2 - B^2 Q > 0");
    return c;
}

}  // namespace blowup::exact
