#include "blowup/evolution/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blowup::evolution {

namespace {

struct Probe {
    double amplitude = 0.0;
    bool ok = true;
};

Probe probe(const Grid& g, const Perturbation& v, double T, double T0, double horizon, const IntegrateOptions& io) {
    const FieldState u = initial_data_U(g, v, T, T0);
    if (u.phi1.isZero(0.0) && u.phi2.isZero(0.0)) return {};
    RunReport r = integrate(g, u, horizon, Mode::full, io);
    if (r.aborted) return {0.0, false};
    return {r.g_component.back() * std::exp(-r.times.back()), true};
}

}  // namespace

BlowupTimeResult find_blowup_time(const Grid& g, const Perturbation& v, double T0, const BlowupTimeOptions& opt) {
    if (!(T0 > 0.0)) throw std::domain_error("find_blowup_time: T0 must be positive");
    if (opt.probe_horizons.empty()) throw std::invalid_argument("find_blowup_time: no probe horizon");
    BlowupTimeResult res;
    IntegrateOptions io = opt.integrate;
    io.keep_trajectory = false;
    const double lo = T0 * (1.0 - opt.max_offset), hi = T0 * (1.0 + opt.max_offset);

    double T = T0;
    for (double horizon : opt.probe_horizons) {
        Probe pa = probe(g, v, T, T0, horizon, io);
        ++res.iterations;
        if (!pa.ok) {
            res.T = T;
            res.message = "flow left the small-data regime at horizon " + std::to_string(horizon);
            return res;
        }
        res.amplitude = pa.amplitude;
        if (std::abs(pa.amplitude) <= opt.amplitude_tol) continue;
        // keep the trial offset small after amplification by e^horizon
        double Ta = T, Tb = std::clamp(T + 1e-2 * T0 * std::exp(-horizon), lo, hi);
        double ka = pa.amplitude;
        bool done = false;
        for (int it = 0; it < opt.max_iter && res.iterations < opt.max_iter * 4; ++it) {
            Probe pb = probe(g, v, Tb, T0, horizon, io);
            ++res.iterations;
            if (!pb.ok) {
                res.T = Tb;
                res.message = "flow left the small-data regime at horizon " + std::to_string(horizon);
                return res;
            }
            res.amplitude = pb.amplitude;
            if (std::abs(pb.amplitude) <= opt.amplitude_tol) {
                T = Tb;
                done = true;
                break;
            }
            if (pb.amplitude == ka) break;
            const double Tc = std::clamp(Tb - pb.amplitude * (Tb - Ta) / (pb.amplitude - ka), lo, hi);
            Ta = Tb;
            ka = pb.amplitude;
            Tb = Tc;
            if (std::abs(Tb - Ta) <= opt.step_tol * T0) {
                T = Tb;
                done = true;
                break;
            }
        }
        if (!done) {
            res.T = Tb;
            res.message = "secant iteration did not converge at horizon " + std::to_string(horizon);
            return res;
        }
    }
    res.T = T;
    res.converged = true;
    res.message = "converged";
    return res;
}

}  // namespace blowup::evolution
