#pragma once

#include "blowup/exactmath/certificate.hpp"
#include "blowup/exactmath/complex_rational.hpp"
#include "blowup/spectral/frobenius.hpp"

#include <cstdint>
#include <vector>

namespace blowup::spectral {

// Coefficients of a_{n+2} = A_n a_{n+1} + B_n a_n for the series of the Heun form at x = 0.
template <class T>
T A_coef(long n, const T& lam) {
    return (T(155) * lam * (lam + T(4 * n + 9)) + T(2 * (458 * n * n + 2357 * n + 2727)))
         / T(310 * (2 * n + 15) * (n + 2));
}

template <class T>
T B_coef(long n, const T& lam) {
    return T(-37) * (lam + T(2 * n + 3)) * (lam + T(2 * n)) / T(155 * (2 * n + 15) * (n + 2));
}

// Quasi-solution of the ratio recurrence.
template <class T>
T r_tilde(long n, const T& lam) {
    return lam * lam / T(4 * n * n + 28 * n + 27) + lam / T(n + 7) + T(2 * n + 12) / T(2 * n + 23);
}

struct SpectralSequence {
    cplx lambda;
    int N = 0;
    std::vector<cplx> a;        // a_0..a_N
    std::vector<cplx> r;        // r_n = a_{n+1}/a_n, n = 0..N-1
    std::vector<cplx> r_tilde;  // n = 0..N
    std::vector<cplx> delta;    // r_n/r~_n - 1, n = 0..N-1
    std::vector<cplx> eps;      // n = 0..N-1
    std::vector<cplx> C;        // n = 0..N-1
};

SpectralSequence recurrence(cplx lam, int N);
// a_0..a_N in exact arithmetic
std::vector<exact::ComplexRational> recurrence_exact(const exact::ComplexRational& lam, int N);
// r_n from r_0 = A_{-1} for n = 0..N-1, without forming a_n
std::vector<cplx> ratio_sequence(cplx lam, int N);

enum class LimitClass { one, seventyfour_over_155, undecided };
const char* to_string(LimitClass c);

struct LimitEstimate {
    LimitClass cls = LimitClass::undecided;
    cplx r_last;        // r_{N-1}
    cplx extrapolated;  // Richardson estimate of lim r_n
};
LimitEstimate classify_limit(cplx lam, int N = 2000, double tol = 1e-4);

struct BoundViolation {
    cplx lambda;
    int n = 0;
    const char* which = "";
    double value = 0;
};

struct BoundReport {
    exact::Certificate cert;
    double max_delta7 = 0, max_eps = 0, max_C = 0, max_delta_induction = 0;
    std::vector<BoundViolation> violations;
};

// Sampled check of |delta_7| <= 1/3, |eps_n| <= 1/12, |C_n| <= 1/2 for 7 <= n <= n_max,
// and of the induced bound |delta_n| <= 1/3. Every sample must satisfy Re lambda >= 0.
BoundReport verify_bounds(const std::vector<cplx>& samples, int n_max);

// count_axis points on [-R i, R i] (deterministic grid) and count_interior uniform points of
// the closed right half plane with |lambda| <= R drawn from a seeded generator.
std::vector<cplx> half_plane_samples(int count_axis, int count_interior, double R, std::uint64_t seed);

}  // namespace blowup::spectral
