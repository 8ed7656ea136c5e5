#pragma once

#include "blowup/exactmath/poly.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace blowup::spectral {

using cplx = std::complex<double>;

// P2 y'' + P1 y' + P0 y = 0 with polynomial coefficients in the local variable.
template <class T>
struct LinearOde2 {
    exact::Poly<T> P2, P1, P0;
};

// Re-expands an equation in rho around rho = 1 in the variable x = 1 - rho.
template <class T>
LinearOde2<T> shift_to_one(const LinearOde2<T>& eq) {
    using P = exact::Poly<T>;
    P x = P(std::vector<T>{T(1), -T(1)}, "x");
    return {eq.P2.compose(x), -eq.P1.compose(x), eq.P0.compose(x)};
}

// Frobenius data at x = 0: with f_e(s) = P2[e+2] s(s-1) + P1[e+1] s + P0[e],
// the indicial polynomial is f_{emin}(s) for the lowest e where f_e is not identically zero.
template <class T>
class FrobeniusData {
public:
    explicit FrobeniusData(LinearOde2<T> eq) : eq_(std::move(eq)) {
        if (eq_.P2.is_zero()) throw std::invalid_argument("FrobeniusData: vanishing leading coefficient");
        emin_ = -2;
        while (coeffs(emin_) == std::array<T, 3>{T(), T(), T()}) ++emin_;
    }

    int emin() const { return emin_; }

    // (alpha, beta, gamma) of the indicial polynomial alpha s(s-1) + beta s + gamma
    std::array<T, 3> indicial() const { return coeffs(emin_); }

    T f(int e, const T& s) const {
        auto c = coeffs(e);
        return c[0] * s * (s - T(1)) + c[1] * s + c[2];
    }

    struct Series {
        std::vector<T> c;          // c[0] = 1
        std::optional<int> resonance;  // order m where the leading factor vanished
        T log_obstruction{};           // sum that must vanish for a log-free series
    };

    // Coefficients of x^s sum_m c_m x^m up to the given order.
    Series series(const T& s, int order) const {
        Series out;
        out.c.reserve(static_cast<std::size_t>(order) + 1);
        out.c.push_back(T(1));
        for (int m = 1; m <= order; ++m) {
            T acc{};
            for (int k = 0; k < m; ++k) {
                const int e = emin_ + m - k;
                if (e - emin_ > span()) continue;
                acc += out.c[static_cast<std::size_t>(k)] * f(e, s + T(k));
            }
            T lead = f(emin_, s + T(m));
            if (exact::coeff_is_zero(lead)) {
                if (!out.resonance) {
                    out.resonance = m;
                    out.log_obstruction = acc;
                }
                out.c.push_back(T());
            } else {
                out.c.push_back(-acc / lead);
            }
        }
        return out;
    }

private:
    std::array<T, 3> coeffs(int e) const {
        return {e + 2 >= 0 ? eq_.P2[static_cast<std::size_t>(e + 2)] : T(),
                e + 1 >= 0 ? eq_.P1[static_cast<std::size_t>(e + 1)] : T(),
                e >= 0 ? eq_.P0[static_cast<std::size_t>(e)] : T()};
    }
    int span() const {
        return std::max({eq_.P2.degree() - 2, eq_.P1.degree() - 1, eq_.P0.degree()}) - emin_;
    }

    LinearOde2<T> eq_;
    int emin_ = 0;
};

}  // namespace blowup::spectral
