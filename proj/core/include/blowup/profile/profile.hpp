#pragma once

#include "blowup/exactmath/certificate.hpp"
#include "blowup/exactmath/rational.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace blowup::profile {

// phi0(rho) = a*rho/sqrt(b - rho^2) with E(d) = sqrt((46d^2-291d-49)(d-1)) + 7(d-1),
// a = sqrt(d/E), b = 1 + d/2 - 7d(d-1)/E.
struct ProfileParams {
    int d = 0;
    double E = 0;
    double a = 0;
    double b = 0;
    // b <= 1: the profile is singular inside the closed unit ball
    bool singular_in_cone() const { return !(b > 1.0); }
};

ProfileParams profile_params(int d);

// Exact values when the radicand of E(d) is a perfect square (d = 8, 9, ...).
struct ExactProfileParams {
    int d = 0;
    exact::Rational E;
    exact::Rational a_squared;
    exact::Rational b;
};
std::optional<ExactProfileParams> exact_profile_params(int d);

// Exact decision of b(d) > 1 without extracting the square root.
exact::Certificate certify_b_exceeds_one(int d);

double phi0(const ProfileParams& p, double rho);
// phi0 and its derivatives of order 0..4
std::array<double, 5> phi0_derivs(const ProfileParams& p, double rho);
// phi0(rho)/rho, regular at rho = 0
double phi0_over_rho(const ProfileParams& p, double rho);

double ode_residual(const ProfileParams& p, const std::vector<double>& grid);
std::vector<double> uniform_grid(int count, double lo = 0.0, double hi = 1.0, bool include_lo = false);

// d = 9 from here on.
const ProfileParams& params9();
// n(x) = 14x^3 - 111x^5 and its derivative
double n9(double x);
double n9_prime(double x);

struct PotentialSet {
    std::function<double(double)> V;
    std::function<double(double)> Vhat;
    std::function<double(double)> Vtilde;
};
PotentialSet potentials();
double V_closed(double rho);
double V_from_nonlinearity(double rho);  // 8 n'(phi0)/rho^2, evaluated without 0/0
double Vhat_closed(double rho);
double Vtilde_closed(double rho);
// W(rho, phi0(rho)) = -V(rho)
double W(double rho);

struct UnstableMode {
    std::function<double(double)> g1;
    std::function<double(double)> g2;
};
UnstableMode unstable_mode();
double g1(double rho);
double g2(double rho);
double g1_prime(double rho);
double g1_second(double rho);
// second line of the lambda = 1 system applied to g1
double g1_system_residual(double rho);

// Coefficients of w^2..w^5 in -(8/rho^3)[n(phi0 + rho w) - n(phi0) - n'(phi0) rho w].
std::array<double, 4> nonlinearity_coeffs(double rho);
double nonlinearity(double rho, double w);
double nonlinearity_direct(double rho, double w);

}  // namespace blowup::profile
