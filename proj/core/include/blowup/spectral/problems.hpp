#pragma once

#include "blowup/spectral/frobenius.hpp"

#include <utility>

namespace blowup::spectral {

// Linearized eigenvalue equation for u1, multiplied through by rho (155 - 74 rho^2)^2.
template <class T>
LinearOde2<T> eigen_equation(const T& lam) {
    using P = exact::Poly<T>;
    P rho = P::x("rho");
    P r2 = rho * rho;
    P w = P::constant(T(155), "rho") - r2 * T(74);
    P w2 = w * w;
    P one = P::constant(T(1), "rho");
    return {rho * (one - r2) * w2,
            (P::constant(T(10), "rho") - r2 * (T(2) * (lam + T(2)))) * w2,
            -(rho * ((lam + T(1)) * (lam + T(2)) * w2 - (r2 * T(3737) - P::constant(T(4340), "rho")) * T(54)))};
}

// Supersymmetric partner equation, multiplied through by rho^2 (155 - 74 rho^2)^2.
template <class T>
LinearOde2<T> susy_equation(const T& lam) {
    using P = exact::Poly<T>;
    P rho = P::x("rho");
    P r2 = rho * rho;
    P w = P::constant(T(155), "rho") - r2 * T(74);
    P w2 = w * w;
    P one = P::constant(T(1), "rho");
    P vt = r2 * r2 * T(3737) + r2 * T(5735) - P::constant(T(24025), "rho");
    return {r2 * (one - r2) * w2,
            rho * (P::constant(T(8), "rho") - r2 * (T(2) * (lam + T(1)))) * w2,
            r2 * w2 * (-(lam + T(2)) * (lam - T(1))) + vt * T(18)};
}

// Heun canonical form in x = rho^2, multiplied through by 4x(x-1)(74x-155).
template <class T>
LinearOde2<T> heun_equation(const T& lam) {
    using P = exact::Poly<T>;
    P x = P::x("x");
    P one = P::constant(T(1), "x");
    P xm1 = x - one;
    P lin = x * T(74) - P::constant(T(155), "x");
    return {x * xm1 * lin * T(4),
            xm1 * lin * T(26) + x * lin * (T(4) * (lam - T(3))) - x * xm1 * T(296),
            x * (T(74) * lam * (lam + T(3))) - P::constant(T(155) * lam * lam + T(775) * lam + T(1656), "x")};
}

enum class FrobeniusPoint { eigen_at_0, eigen_at_1, susy_at_0, susy_at_1, heun_at_0 };

template <class T>
LinearOde2<T> local_equation(FrobeniusPoint where, const T& lam) {
    switch (where) {
    case FrobeniusPoint::eigen_at_0: return eigen_equation(lam);
    case FrobeniusPoint::eigen_at_1: return shift_to_one(eigen_equation(lam));
    case FrobeniusPoint::susy_at_0: return susy_equation(lam);
    case FrobeniusPoint::susy_at_1: return shift_to_one(susy_equation(lam));
    case FrobeniusPoint::heun_at_0: return heun_equation(lam);
    }
    throw std::invalid_argument("local_equation: unknown point");
}

// Roots of the indicial polynomial; when it has a root at 0 that root is listed first.
template <class T>
std::pair<T, T> frobenius_indices_exact(FrobeniusPoint where, const T& lam) {
    FrobeniusData<T> fd(local_equation(where, lam));
    auto [a, b, g] = fd.indicial();
    if (!exact::coeff_is_zero(g)) throw std::domain_error("frobenius_indices_exact: no zero index");
    return {T(0), (a - b) / a};
}

std::pair<cplx, cplx> frobenius_indices(FrobeniusPoint where, cplx lam);

}  // namespace blowup::spectral
