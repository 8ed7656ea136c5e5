#pragma once

#include "blowup/evolution/grid.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace blowup::evolution {

enum class Mode { linearized, full };

// Perturbation (phi1, phi2) of the self-similar solution on the grid.
struct FieldState {
    Eigen::VectorXd phi1, phi2;
    double tau = 0.0;

    static FieldState zero(const Grid& g) { return {Eigen::VectorXd::Zero(g.n), Eigen::VectorXd::Zero(g.n), 0.0}; }
    Eigen::VectorXd stacked() const;
    static FieldState from_stacked(const Eigen::VectorXd& x, double tau = 0.0);
};

// Linear operator on the stacked state (phi1; phi2), 2n x 2n.
Eigen::MatrixXd linear_operator(const Grid& g);

FieldState rhs(const Grid& g, const FieldState& s, Mode mode);

// The symmetry mode g = (g1, g2) sampled on the grid.
FieldState symmetry_mode(const Grid& g);

// sqrt(S_k(phi1) + S_{k-1}(phi2)) with S the Sobolev surrogate
double state_norm(const Grid& g, const FieldState& s, int k);
double g_component(const Grid& g, const FieldState& s);
// max over the grid of |phi0 + rho phi1|
double sup_amplitude(const Grid& g, const FieldState& s);

struct IntegrateOptions {
    double dt = 0.0;             // 0: 0.25 / n^2
    double output_every = 0.05;
    int norm_order = 2;
    double abort_norm = 1e6;
    double fit_from = 0.0;       // window of the log-linear norm fit
    double fit_to = -1.0;        // negative: tau_end
    bool keep_trajectory = false;
};

struct RunReport {
    std::vector<double> times;
    std::vector<double> norms;                                   // at norm_order
    std::vector<std::array<double, kMaxNormOrder + 1>> norms_by_order;
    std::vector<double> g_component;
    std::vector<double> sup_u;
    double fitted_rate = 0.0;    // slope of log(norm) over the fit window
    bool aborted = false;
    std::string diagnostic;
    std::vector<FieldState> trajectory;
    FieldState final_state;
};

// Four-stage Runge-Kutta with the spectral filter after each step; no condition at rho = 1.
RunReport integrate(const Grid& g, const FieldState& initial, double tau_end, Mode mode,
                    const IntegrateOptions& opt = {});

// Least-squares slope of log(y) against t over [lo, hi].
double fit_log_slope(const std::vector<double>& t, const std::vector<double>& y, double lo, double hi);

// lim e^{-tau} g_component(tau) along the linearized flow, read off at tau_probe.
// Pass the options of the run that follows: the cancellation is exact only for the same discrete propagator.
double unstable_amplitude(const Grid& g, const FieldState& s, double tau_probe = 20.0, const IntegrateOptions& opt = {});
// s - c g with c chosen so that the linearized flow has no e^tau component.
FieldState cancel_unstable_mode(const Grid& g, const FieldState& s, double tau_probe = 20.0,
                                const IntegrateOptions& opt = {});

// Perturbation v = (F, G) of the data at t = 0, given as F(r)/r and G(r)/r.
struct Perturbation {
    std::function<double(double)> F_over_r = [](double) { return 0.0; };
    std::function<double(double)> G_over_r = [](double) { return 0.0; };
};
// Data of the self-similar solution with blowup time tprime, relative to T0.
Perturbation exact_solution_data(double tprime, double T0 = 1.0);
// Initial perturbation U(v, T) for the similarity variables of blowup time T.
FieldState initial_data_U(const Grid& g, const Perturbation& v, double T, double T0 = 1.0);

struct BlowupTimeOptions {
    std::vector<double> probe_horizons{1.5, 3.0, 6.0, 10.0};
    double amplitude_tol = 1e-12;
    double step_tol = 1e-12;
    int max_iter = 40;
    double max_offset = 0.25;    // |T - T0| <= max_offset T0
    IntegrateOptions integrate;
};

struct BlowupTimeResult {
    double T = 0.0;
    bool converged = false;
    int iterations = 0;
    double amplitude = 0.0;      // e^{-tau} g_component at the last probe
    std::string message;
};

BlowupTimeResult find_blowup_time(const Grid& g, const Perturbation& v, double T0 = 1.0,
                                  const BlowupTimeOptions& opt = {});

}  // namespace blowup::evolution
