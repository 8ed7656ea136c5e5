#include "blowup/evolution/evolve.hpp"

#include "blowup/profile/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace blowup::evolution {

namespace pf = blowup::profile;

Eigen::VectorXd FieldState::stacked() const {
    Eigen::VectorXd x(phi1.size() + phi2.size());
    x << phi1, phi2;
    return x;
}

FieldState FieldState::from_stacked(const Eigen::VectorXd& x, double tau) {
    const Eigen::Index n = x.size() / 2;
    return {x.head(n), x.tail(n), tau};
}

Eigen::MatrixXd linear_operator(const Grid& g) {
    const int n = g.n;
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, n), Wd = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd radial(n, n);
    for (int i = 0; i < n; ++i) {
        const double r = g.nodes[static_cast<std::size_t>(i)];
        R(i, i) = r;
        Wd(i, i) = pf::W(r);
        // 10/rho d/drho, by its limit 10 d^2/drho^2 at the centre
        radial.row(i) = r > 0.0 ? Eigen::RowVectorXd(10.0 / r * g.D1.row(i)) : Eigen::RowVectorXd(10.0 * g.D2.row(i));
    }
    Eigen::MatrixXd L(2 * n, 2 * n);
    L << -R * g.D1 - I, I, g.D2 + radial + Wd, -R * g.D1 - 2.0 * I;
    return L;
}

namespace {

Eigen::VectorXd nonlinear_part(const Grid& g, const Eigen::VectorXd& phi1) {
    Eigen::VectorXd out(g.n);
    for (int i = 0; i < g.n; ++i) out[i] = pf::nonlinearity(g.nodes[static_cast<std::size_t>(i)], phi1[i]);
    return out;
}

Eigen::VectorXd apply_filter(const Grid& g, const Eigen::VectorXd& x) {
    const Eigen::Index n = g.n;
    Eigen::VectorXd y(x.size());
    y.head(n) = g.filter * x.head(n);
    y.tail(n) = g.filter * x.tail(n);
    return y;
}

// Filtered one-step map of the linear flow, F (I + hL + (hL)^2/2 + (hL)^3/6 + (hL)^4/24).
Eigen::MatrixXd linear_step_matrix(const Grid& g, const Eigen::MatrixXd& L, double dt) {
    const Eigen::Index m = L.rows();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(m, m);
    const Eigen::MatrixXd h = dt * L;
    Eigen::MatrixXd S = I + h * (I + h / 2.0 * (I + h / 3.0 * (I + h / 4.0)));
    Eigen::MatrixXd F = Eigen::MatrixXd::Zero(m, m);
    F.topLeftCorner(g.n, g.n) = g.filter;
    F.bottomRightCorner(g.n, g.n) = g.filter;
    return F * S;
}

Eigen::MatrixXd matrix_power(Eigen::MatrixXd b, long k) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(b.rows(), b.cols());
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

}  // namespace

FieldState rhs(const Grid& g, const FieldState& s, Mode mode) {
    if (s.phi1.size() != g.n || s.phi2.size() != g.n) throw std::invalid_argument("rhs: state does not match grid");
    Eigen::VectorXd x = linear_operator(g) * s.stacked();
    if (mode == Mode::full) x.tail(g.n) += nonlinear_part(g, s.phi1);
    return FieldState::from_stacked(x, s.tau);
}

FieldState symmetry_mode(const Grid& g) {
    return {g.sample(pf::g1), g.sample(pf::g2), 0.0};
}

double state_norm(const Grid& g, const FieldState& s, int k) {
    return std::sqrt(sobolev_surrogate(g, s.phi1, k) + sobolev_surrogate(g, s.phi2, k > 0 ? k - 1 : 0));
}

double g_component(const Grid& g, const FieldState& s) {
    const FieldState m = symmetry_mode(g);
    const double num = weighted_inner(g, s.phi1, m.phi1) + weighted_inner(g, s.phi2, m.phi2);
    const double den = weighted_inner(g, m.phi1, m.phi1) + weighted_inner(g, m.phi2, m.phi2);
    return num / den;
}

double sup_amplitude(const Grid& g, const FieldState& s) {
    const auto& p = pf::params9();
    double best = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double r = g.nodes[static_cast<std::size_t>(i)];
        best = std::max(best, std::abs(pf::phi0(p, r) + r * s.phi1[i]));
    }
    return best;
}

double fit_log_slope(const std::vector<double>& t, const std::vector<double>& y, double lo, double hi) {
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < t.size() && i < y.size(); ++i) {
        if (t[i] < lo - 1e-12 || t[i] > hi + 1e-12 || !(y[i] > 0.0)) continue;
        const double ly = std::log(y[i]);
        n += 1;
        sx += t[i];
        sy += ly;
        sxx += t[i] * t[i];
        sxy += t[i] * ly;
    }
    const double den = n * sxx - sx * sx;
    if (n < 2 || den == 0.0) return std::nan("");
    return (n * sxy - sx * sy) / den;
}

RunReport integrate(const Grid& g, const FieldState& initial, double tau_end, Mode mode, const IntegrateOptions& opt) {
    if (initial.phi1.size() != g.n || initial.phi2.size() != g.n)
        throw std::invalid_argument("integrate: state does not match grid");
    if (!(tau_end >= 0.0)) throw std::invalid_argument("integrate: tau_end must be >= 0");
    if (opt.norm_order < 0 || opt.norm_order > kMaxNormOrder) throw std::invalid_argument("integrate: norm order outside 0..6");
    const double dt_max = opt.dt > 0.0 ? opt.dt : 0.25 / (double(g.n) * g.n);
    const double out_dt = opt.output_every > 0.0 ? opt.output_every : tau_end;

    const Eigen::MatrixXd L = linear_operator(g);
    RunReport rep;
    Eigen::VectorXd x = initial.stacked();
    double tau = initial.tau;
    const double tau0 = tau;

    auto record = [&](double t) {
        FieldState s = FieldState::from_stacked(x, t);
        std::array<double, kMaxNormOrder + 1> all{};
        for (int k = 0; k <= kMaxNormOrder; ++k) all[static_cast<std::size_t>(k)] = state_norm(g, s, k);
        rep.times.push_back(t);
        rep.norms_by_order.push_back(all);
        rep.norms.push_back(all[static_cast<std::size_t>(opt.norm_order)]);
        rep.g_component.push_back(g_component(g, s));
        rep.sup_u.push_back(sup_amplitude(g, s));
        if (opt.keep_trajectory) rep.trajectory.push_back(s);
        const double nrm = rep.norms.back();
        if (!std::isfinite(nrm) || nrm > opt.abort_norm) {
            rep.aborted = true;
            rep.diagnostic = "norm " + std::to_string(nrm) + " exceeded the abort threshold at tau = " + std::to_string(t);
        }
    };

    auto full_step = [&](double h) {
        auto f = [&](const Eigen::VectorXd& y) {
            Eigen::VectorXd d = L * y;
            d.tail(g.n) += nonlinear_part(g, y.head(g.n));
            return d;
        };
        const Eigen::VectorXd k1 = f(x);
        const Eigen::VectorXd k2 = f(x + 0.5 * h * k1);
        const Eigen::VectorXd k3 = f(x + 0.5 * h * k2);
        const Eigen::VectorXd k4 = f(x + h * k3);
        x = apply_filter(g, x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
    };

    record(tau);
    // chunk length -> propagator over the chunk, for the linear flow
    double cached_len = -1.0;
    Eigen::MatrixXd chunk_map;
    while (!rep.aborted && tau < tau0 + tau_end - 1e-12) {
        const double len = std::min(out_dt, tau0 + tau_end - tau);
        const long steps = std::max(1L, static_cast<long>(std::ceil(len / dt_max - 1e-9)));
        const double h = len / steps;
        if (mode == Mode::linearized) {
            if (std::abs(len - cached_len) > 1e-14) {
                chunk_map = matrix_power(linear_step_matrix(g, L, h), steps);
                cached_len = len;
            }
            x = chunk_map * x;
        } else {
            for (long k = 0; k < steps; ++k) full_step(h);
        }
        tau += len;
        record(tau);
    }
    rep.final_state = FieldState::from_stacked(x, tau);
    const double hi = opt.fit_to >= 0.0 ? opt.fit_to : tau;
    rep.fitted_rate = fit_log_slope(rep.times, rep.norms, tau0 + opt.fit_from, hi);
    return rep;
}

double unstable_amplitude(const Grid& g, const FieldState& s, double tau_probe, const IntegrateOptions& opt) {
    IntegrateOptions o = opt;
    o.abort_norm = 1e300;
    o.keep_trajectory = false;
    FieldState s0 = s;
    s0.tau = 0.0;
    RunReport r = integrate(g, s0, tau_probe, Mode::linearized, o);
    return r.g_component.back() * std::exp(-r.times.back());
}

FieldState cancel_unstable_mode(const Grid& g, const FieldState& s, double tau_probe, const IntegrateOptions& opt) {
    const FieldState m = symmetry_mode(g);
    const double c = unstable_amplitude(g, s, tau_probe, opt) / unstable_amplitude(g, m, tau_probe, opt);
    return {s.phi1 - c * m.phi1, s.phi2 - c * m.phi2, s.tau};
}

Perturbation exact_solution_data(double tprime, double T0) {
    if (!(tprime > 0.0) || !(T0 > 0.0)) throw std::domain_error("exact_solution_data: blowup times must be positive");
    const auto& p = pf::params9();
    Perturbation v;
    v.F_over_r = [p, tprime, T0](double r) {
        return pf::phi0_over_rho(p, r / tprime) / tprime - pf::phi0_over_rho(p, r / T0) / T0;
    };
    v.G_over_r = [p, tprime, T0](double r) {
        return pf::phi0_derivs(p, r / tprime)[1] / (tprime * tprime) - pf::phi0_derivs(p, r / T0)[1] / (T0 * T0);
    };
    return v;
}

FieldState initial_data_U(const Grid& g, const Perturbation& v, double T, double T0) {
    if (!(T0 > 0.0)) throw std::domain_error("initial_data_U: T0 must be positive");
    if (T < 0.75 * T0 || T > 1.25 * T0) throw std::domain_error("initial_data_U: T outside [3 T0/4, 5 T0/4]");
    const auto& p = pf::params9();
    const double s = T / T0;
    if (s >= std::sqrt(p.b)) throw std::domain_error("initial_data_U: profile singular at T rho / T0");
    FieldState u = FieldState::zero(g);
    for (int i = 0; i < g.n; ++i) {
        const double r = g.nodes[static_cast<std::size_t>(i)];
        u.phi1[i] = s * pf::phi0_over_rho(p, s * r) - pf::phi0_over_rho(p, r) + T * v.F_over_r(T * r);
        u.phi2[i] = s * s * pf::phi0_derivs(p, s * r)[1] - pf::phi0_derivs(p, r)[1] + T * T * v.G_over_r(T * r);
    }
    return u;
}

}  // namespace blowup::evolution
