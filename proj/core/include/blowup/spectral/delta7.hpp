#pragma once

#include "blowup/exactmath/certificate.hpp"
#include "blowup/exactmath/poly.hpp"

namespace blowup::spectral {

struct RationalFunction {
    exact::RatPoly num;
    exact::RatPoly den;
};

// delta_7(lambda) = r_7/r~_7 - 1 as a reduced quotient of polynomials in lambda,
// obtained by unrolling r_{n+1} = A_n + B_n/r_n from r_0 = A_{-1}.
RationalFunction delta7_rational_function();
// delta_7 at a Gaussian rational lambda by direct stepping of the ratio recurrence.
exact::ComplexRational delta7_stepwise(const exact::ComplexRational& lam);

enum class Delta7Substitution { shifted_axis, compressed_axis };  // (t+4)i and 4ti/(t+1)
const char* to_string(Delta7Substitution s);

// |delta_7(lambda(t))|^2 = Q1(t)/Q2(t), Q1 and Q2 integer, coprime and jointly primitive
struct ModulusSquared {
    exact::RatPoly Q1;
    exact::RatPoly Q2;
};
ModulusSquared delta7_modulus_squared(Delta7Substitution s);

exact::Certificate delta7_exact_certificate();

}  // namespace blowup::spectral
