#include "blowup/spectral/problems.hpp"

namespace blowup::spectral {

std::pair<cplx, cplx> frobenius_indices(FrobeniusPoint where, cplx lam) {
    FrobeniusData<cplx> fd(local_equation(where, lam));
    auto [a, b, g] = fd.indicial();
    if (g == 0.0) return {0.0, (a - b) / a};
    // a s^2 + (b - a) s + g
    const cplx B = b - a;
    const cplx disc = std::sqrt(B * B - 4.0 * a * g);
    cplx r1 = (-B + disc) / (2.0 * a);
    cplx r2 = (-B - disc) / (2.0 * a);
    if (std::real(r2) > std::real(r1)) std::swap(r1, r2);
    return {r1, r2};
}

}  // namespace blowup::spectral
