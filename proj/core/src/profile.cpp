#include "blowup/profile/profile.hpp"

#include "blowup/exactmath/poly.hpp"
#include "blowup/exactmath/positivity.hpp"

#include <cmath>
#include <stdexcept>

namespace blowup::profile {

using exact::Rational;

ProfileParams profile_params(int d) {
    if (d < 2) throw std::domain_error("profile_params: d must be >= 2");
    const double dd = d;
    const double rad = (46 * dd * dd - 291 * dd - 49) * (dd - 1);
    if (rad < 0) throw std::domain_error("profile_params: E(d) is complex for d = " + std::to_string(d));
    ProfileParams p;
    p.d = d;
    p.E = std::sqrt(rad) + 7 * (dd - 1);
    if (!(p.E > 0)) throw std::domain_error("profile_params: E(d) <= 0");
    p.a = std::sqrt(dd / p.E);
    p.b = 1 + dd / 2 - 7 * dd * (dd - 1) / p.E;
    return p;
}

std::optional<ExactProfileParams> exact_profile_params(int d) {
    if (d < 2) return std::nullopt;
    const long dl = d;
    Rational rad((46 * dl * dl - 291 * dl - 49) * (dl - 1));
    Rational root;
    if (!exact::exact_sqrt(rad, root)) return std::nullopt;
    ExactProfileParams e;
    e.d = d;
    e.E = root + Rational(7 * (dl - 1));
    if (e.E.sign() <= 0) return std::nullopt;
    e.a_squared = Rational(dl) / e.E;
    e.b = Rational(1) + Rational(dl, 2) - Rational(7 * dl * (dl - 1)) / e.E;
    return e;
}

exact::Certificate certify_b_exceeds_one(int d) {
    // b > 1  <=>  E > 14(d-1)  <=>  sqrt(X) - 7(d-1) > 0,  X = (46d^2-291d-49)(d-1)
    exact::Certificate c("b(" + std::to_string(d) + ") > 1");
    const long dl = d;
    const long X = (46 * dl * dl - 291 * dl - 49) * (dl - 1);
    if (X < 0 || d < 2) {
        c.add("E(d) real", false, "radicand " + std::to_string(X));
        return c;
    }
    using exact::RatPoly;
    c.absorb(exact::sqrt_compare(RatPoly::constant(Rational(1)), RatPoly::constant(Rational(X)),
                                 RatPoly::constant(Rational(7 * (dl - 1)))),
             "sqrt(X) > 7(d-1)");
    return c;
}

double phi0(const ProfileParams& p, double rho) {
    const double q = p.b - rho * rho;
    if (!(q > 0)) throw std::domain_error("phi0: rho^2 >= b");
    return p.a * rho / std::sqrt(q);
}

double phi0_over_rho(const ProfileParams& p, double rho) {
    const double q = p.b - rho * rho;
    if (!(q > 0)) throw std::domain_error("phi0: rho^2 >= b");
    return p.a / std::sqrt(q);
}

std::array<double, 5> phi0_derivs(const ProfileParams& p, double rho) {
    const double q = p.b - rho * rho;
    if (!(q > 0)) throw std::domain_error("phi0: rho^2 >= b");
    const double s = std::sqrt(q);
    const double ab = p.a * p.b;
    const double r2 = rho * rho;
    return {
        p.a * rho / s,
        ab / (q * s),
        3 * ab * rho / (q * q * s),
        3 * ab * (p.b + 4 * r2) / (q * q * q * s),
        15 * ab * rho * (3 * p.b + 4 * r2) / (q * q * q * q * s),
    };
}

double ode_residual(const ProfileParams& p, const std::vector<double>& grid) {
    const double dm1 = p.d - 1;
    const double c5 = 3.0 * (23.0 * p.d - 170.0);
    double worst = 0;
    for (double rho : grid) {
        if (!(rho > 0)) throw std::domain_error("ode_residual: grid must lie in (0,1]");
        auto f = phi0_derivs(p, rho);
        const double x = f[0];
        const double res = (1 - rho * rho) * f[2] + (dm1 / rho - 2 * rho) * f[1]
                         - dm1 * (x + 14 * x * x * x - c5 * std::pow(x, 5)) / (rho * rho);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

std::vector<double> uniform_grid(int count, double lo, double hi, bool include_lo) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        double t = include_lo ? (count == 1 ? 0.0 : double(i) / (count - 1)) : double(i + 1) / count;
        g.push_back(lo + (hi - lo) * t);
    }
    return g;
}

const ProfileParams& params9() {
    static const ProfileParams p = [] {
        ProfileParams q;
        q.d = 9;
        q.E = 148;
        q.a = 3.0 / std::sqrt(148.0);
        q.b = 155.0 / 74.0;
        return q;
    }();
    return p;
}

double n9(double x) { return 14 * x * x * x - 111 * std::pow(x, 5); }
double n9_prime(double x) { return 42 * x * x - 555 * x * x * x * x; }

double V_closed(double rho) {
    const double w = 155 - 74 * rho * rho;
    return -54 * (3737 * rho * rho - 4340) / (w * w);
}

double V_from_nonlinearity(double rho) {
    const auto& p = params9();
    const double q = p.b - rho * rho;
    const double a2 = p.a * p.a;
    // n'(phi)/rho^2 = 42 a^2/q - 555 a^4 rho^2/q^2
    return 8 * (42 * a2 / q - 555 * a2 * a2 * rho * rho / (q * q));
}

double Vhat_closed(double rho) {
    const double r2 = rho * rho, w = 155 - 74 * r2;
    return -10 * (15799 * r2 * r2 - 5084 * r2 - 19220) / (r2 * w * w);
}

double Vtilde_closed(double rho) {
    const double r2 = rho * rho, w = 155 - 74 * r2;
    return -18 * (3737 * r2 * r2 + 5735 * r2 - 24025) / (r2 * w * w);
}

double W(double rho) { return -V_closed(rho); }

PotentialSet potentials() { return {V_closed, Vhat_closed, Vtilde_closed}; }

double g1(double rho) { return phi0_derivs(params9(), rho)[1]; }
double g1_prime(double rho) { return phi0_derivs(params9(), rho)[2]; }
double g1_second(double rho) { return phi0_derivs(params9(), rho)[3]; }

double g2(double rho) {
    auto f = phi0_derivs(params9(), rho);
    return rho * f[2] + 2 * f[1];
}

double g1_system_residual(double rho) {
    auto f = phi0_derivs(params9(), rho);
    return (1 - rho * rho) * f[3] + (10 / rho - 6 * rho) * f[2] - (6 + V_from_nonlinearity(rho)) * f[1];
}

UnstableMode unstable_mode() { return {g1, g2}; }

std::array<double, 4> nonlinearity_coeffs(double rho) {
    const auto& p = params9();
    const double phi = phi0(p, rho);
    const double phi_over_rho = phi0_over_rho(p, rho);
    return {
        -8 * (42 - 1110 * phi * phi) * phi_over_rho,
        -8 * (14 - 1110 * phi * phi),
        8 * 555 * phi * rho,
        8 * 111 * rho * rho,
    };
}

double nonlinearity(double rho, double w) {
    auto c = nonlinearity_coeffs(rho);
    const double w2 = w * w;
    return w2 * (c[0] + w * (c[1] + w * (c[2] + w * c[3])));
}

double nonlinearity_direct(double rho, double w) {
    if (!(rho > 0)) throw std::domain_error("nonlinearity_direct: rho must be > 0");
    const double phi = phi0(params9(), rho);
    return -8 / (rho * rho * rho) * (n9(phi + rho * w) - n9(phi) - n9_prime(phi) * rho * w);
}

}  // namespace blowup::profile
