#pragma once

#include "blowup/exactmath/certificate.hpp"
#include "blowup/exactmath/poly.hpp"

#include <vector>

namespace blowup::exact {

// Standard Sturm chain p, p', -rem(p0, p1), ...
std::vector<RatPoly> sturm_sequence(const RatPoly& p);
// Sign variations of the chain at x (finite) or at +infinity.
int sign_variations_at(const std::vector<RatPoly>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<RatPoly>& chain);
// Number of distinct real roots in (a, +inf) for p(a) != 0.
int count_roots_above(const RatPoly& p, const Rational& a);

Certificate coeff_nonneg_certificate(const RatPoly& p);
// p(x) > 0 for every x >= 0. Throws std::invalid_argument on the zero polynomial.
Certificate positive_on_halfline(const RatPoly& p);
// P*sqrt(Q) - R > 0 on [0, inf).
Certificate sqrt_compare(const RatPoly& P, const RatPoly& Q, const RatPoly& R);
// A - B*sqrt(Q) > 0 on [0, inf) with B > 0.
Certificate surd_positive(const RatPoly& A, const RatPoly& B, const RatPoly& Q);

}  // namespace blowup::exact
