// Acceptance driver: one line per criterion, exit status 0 iff every selected criterion passes.
#include "blowup/evolution/evolve.hpp"
#include "blowup/geometry/metric.hpp"
#include "blowup/profile/profile.hpp"
#include "blowup/spectral/delta7.hpp"
#include "blowup/spectral/eigensearch.hpp"
#include "blowup/spectral/recurrence.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ev = blowup::evolution;
namespace pf = blowup::profile;
namespace sp = blowup::spectral;
namespace geo = blowup::geometry;
using blowup::exact::Rational;
using sp::cplx;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string cfmt(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

Outcome profile_exactness() {
    double worst = 0;
    const auto grid = pf::uniform_grid(1000);
    for (int d : {8, 9, 12, 20}) worst = std::max(worst, pf::ode_residual(pf::profile_params(d), grid));
    double closed = 0;
    for (double r : grid) closed = std::max(closed, std::abs(pf::phi0(pf::params9(), r) - 3 * r / std::sqrt(2 * (155 - 74 * r * r))));
    return {worst <= 1e-10 && closed <= 1e-14, "max residual " + fmt("%.3g", worst) + ", d=9 closed form " + fmt("%.3g", closed)};
}

Outcome parameter_values() {
    auto p8 = pf::exact_profile_params(8), p9 = pf::exact_profile_params(9);
    const bool exact = p8 && p9 && p8->E == Rational(112) && p9->E == Rational(148) && p9->b == Rational(155, 74);
    const bool flagged = pf::profile_params(7).singular_in_cone() && !pf::certify_b_exceeds_one(7).pass();
    return {exact && flagged, std::string("E(8), E(9), b(9) ") + (exact ? "exact" : "mismatch") + ", b(7) < 1 " +
                                  (flagged ? "flagged" : "not flagged")};
}

Outcome curvature() {
    bool all = geo::certify_negative_curvature_all().pass();
    int failed = 0;
    for (int d = 8; d <= 100; ++d) failed += !geo::certify_negative_curvature(d).pass();
    const auto k = geo::sectional_curvatures(9, 0.0);
    const bool origin = std::abs(k.type1 + 21) <= 1e-12 && std::abs(k.type2 + 21) <= 1e-12;
    return {all && failed == 0 && origin, std::string("symbolic ") + (all ? "pass" : "fail") + ", d=8..100 failures " +
                                              std::to_string(failed) + ", K(0) = (" + fmt("%.15g", k.type1) + ", " +
                                              fmt("%.15g", k.type2) + ")"};
}

Outcome delta7_certificate() {
    const bool cert = sp::delta7_exact_certificate().pass();
    bool degrees = true, dominated = true;
    for (auto s : {sp::Delta7Substitution::shifted_axis, sp::Delta7Substitution::compressed_axis}) {
        auto m = sp::delta7_modulus_squared(s);
        degrees = degrees && m.Q1.degree() == 32 && m.Q2.degree() == 32;
        auto diff = m.Q2 - m.Q1 * blowup::exact::RatPoly::constant(Rational(9));
        for (const auto& c : diff.coeffs()) dominated = dominated && c.sign() >= 0;
    }
    return {cert && degrees && dominated, std::string("certificate ") + (cert ? "pass" : "fail") + ", degrees 32 " +
                                              (degrees ? "yes" : "no") + ", Q2 - 9 Q1 coefficients >= 0 " +
                                              (dominated ? "yes" : "no")};
}

Outcome bound_sweep() {
    auto samples = sp::half_plane_samples(500, 200, 100.0, 0);
    auto rep = sp::verify_bounds(samples, 2000);
    std::ostringstream os;
    os << samples.size() << " samples, violations " << rep.violations.size() << ", max |delta7| " << rep.max_delta7
       << ", max |eps| " << rep.max_eps << ", max |C| " << rep.max_C;
    return {rep.cert.pass() && rep.violations.empty(), os.str()};
}

Outcome ratio_limit() {
    double worst = 0;
    std::ostringstream os;
    for (cplx lam : {cplx(0), cplx(1), cplx(0, 1), cplx(2, 3)}) {
        auto r = sp::ratio_sequence(lam, 5001);
        const double e = std::abs(r[5000] - 1.0);
        worst = std::max(worst, e);
        const auto lim = sp::classify_limit(lam, 5000);
        os << " lambda=" << cfmt(lam) << ": |r_5000 - 1| = " << e << ", extrapolated limit " << cfmt(lim.extrapolated) << ";";
    }
    return {worst <= 1e-8, "max |r_5000 - 1| = " + fmt("%.3g", worst) + " (tolerance 1e-8);" + os.str()};
}

Outcome spectrum() {
    auto res = sp::eigenvalue_search({-0.2, 3, -6, 6}, 4, 1e-10);
    bool one = false, others = false;
    std::ostringstream os;
    for (std::size_t k = 0; k < res.eigenvalues.size(); ++k) {
        const cplx z = res.eigenvalues[k];
        os << " " << cfmt(z) << " [" << res.status[k] << ", residual " << res.residuals[k] << "]";
        if (std::abs(z - 1.0) < 1e-8 && res.residuals[k] < 1e-8) one = true;
        else if (z.real() >= 0.0) others = true;
    }
    auto left = sp::eigenvalue_search({-2, 0, 0, 5}, 3, 1e-10);
    bool pair = false;
    for (auto z : left.eigenvalues) {
        pair = pair || std::abs(z - cplx(-0.98, 3.76)) <= 0.05;
        os << " | left half plane " << cfmt(z);
    }
    return {one && !others && pair && res.contour_resolved, "roots in [-0.2,3]x[-6,6]:" + os.str()};
}

Outcome eigenfunction() {
    const auto grid = pf::uniform_grid(2001, 0.0, 1.0, true);
    auto ef = sp::eigenfunction(sp::ShootingProblem::eigen, cplx(1.0), grid);
    cplx fit = 0;
    double gg = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        fit += ef.u[i] * pf::g1(grid[i]);
        gg += pf::g1(grid[i]) * pf::g1(grid[i]);
    }
    fit /= gg;
    double num = 0, den = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        num += std::norm(ef.u[i] - fit * pf::g1(grid[i]));
        den += std::norm(ef.u[i]);
    }
    const double e = std::sqrt(num / den);
    return {e < 1e-8, "relative L2 distance to phi0' " + fmt("%.3g", e)};
}

Outcome linear_growth() {
    ev::Grid g = ev::make_grid(64);
    auto rep = ev::integrate(g, ev::symmetry_mode(g), 5.0, ev::Mode::linearized);
    return {std::abs(rep.fitted_rate - 1.0) <= 0.02, "n=64 fitted rate " + fmt("%.6f", rep.fitted_rate)};
}

double decay_rate(int n, std::uint64_t seed) {
    ev::Grid g = ev::make_grid(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<double> c(6);
    for (auto& x : c) x = U(rng);
    ev::FieldState s{g.sample([&](double r) { return 1e-3 * (c[0] + c[1] * r * r + c[2] * std::cos(3 * r * r)); }),
                     g.sample([&](double r) { return 1e-3 * (c[3] + c[4] * r * r + c[5] * std::exp(-r * r)); }), 0.0};
    ev::IntegrateOptions o;
    o.fit_from = 2.0;
    s = ev::cancel_unstable_mode(g, s, 20.0, o);
    auto rep = ev::integrate(g, s, 10.0, ev::Mode::linearized, o);
    return -rep.fitted_rate;
}

Outcome stable_decay() {
    const double r64 = decay_rate(64, 0), r96 = decay_rate(96, 0);
    const double predicted = 0.98004575655799;
    const bool ok = r64 >= 0.5 && r96 >= 0.5 && std::abs(r96 - predicted) <= 0.15;
    return {ok, "decay rate n=64 " + fmt("%.4f", r64) + ", n=96 " + fmt("%.4f", r96) + " (spectral " +
                    fmt("%.4f", predicted) + ")"};
}

struct RecoveryRun {
    double tprime, T, data_norm;
    bool converged;
    ev::RunReport flow;
};

std::vector<RecoveryRun>& recovery_runs() {
    static std::vector<RecoveryRun> runs = [] {
        std::vector<RecoveryRun> out;
        ev::Grid g = ev::make_grid(32);
        for (double tp : {0.95, 1.05}) {
            const auto v = ev::exact_solution_data(tp);
            auto r = ev::find_blowup_time(g, v);
            const double data_norm = ev::state_norm(g, ev::initial_data_U(g, v, 1.0), 2);
            ev::RunReport flow;
            if (r.converged) flow = ev::integrate(g, ev::initial_data_U(g, v, r.T), 8.0, ev::Mode::full);
            out.push_back({tp, r.T, data_norm, r.converged, flow});
        }
        return out;
    }();
    return runs;
}

Outcome blowup_time() {
    bool ok = true;
    std::ostringstream os;
    for (const auto& run : recovery_runs()) {
        const bool close = run.converged && std::abs(run.T - run.tprime) <= 1e-3;
        double worst = 0;
        bool decays = run.converged && !run.flow.aborted;
        for (std::size_t k = 0; decays && k < run.flow.times.size(); ++k) {
            const double t = run.flow.times[k];
            if (t < 2.0 - 1e-9) continue;
            const double ratio = run.flow.norms[k] / (run.data_norm * std::exp(-0.3 * t));
            worst = std::max(worst, ratio);
        }
        decays = decays && worst <= 1.0;
        ok = ok && close && decays;
        os << " T'=" << run.tprime << ": T=" << fmt("%.12f", run.T) << ", max norm/(initial e^{-0.3 tau}) on [2,8] " << worst
           << ";";
    }
    return {ok, os.str()};
}

Outcome amplitude_bound() {
    const double bound = pf::phi0(pf::params9(), 1.0) + geo::epsilon_margin(9);
    double worst = 0;
    bool ok = true;
    for (const auto& run : recovery_runs()) {
        ok = ok && run.converged && !run.flow.sup_u.empty();
        for (double s : run.flow.sup_u) worst = std::max(worst, s);
    }
    ok = ok && worst <= bound;
    return {ok, "max |u| " + fmt("%.10f", worst) + " <= " + fmt("%.10f", bound)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"profile exactness", profile_exactness}, {"parameter values", parameter_values},
        {"curvature certification", curvature},    {"delta7 certificate", delta7_certificate},
        {"bound sweep", bound_sweep},              {"ratio limit", ratio_limit},
        {"spectrum", spectrum},                    {"eigenfunction", eigenfunction},
        {"linearized growth", linear_growth},      {"stable decay", stable_decay},
        {"blowup-time recovery", blowup_time},     {"amplitude bound", amplitude_bound}};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        const long k = std::strtol(argv[i], &end, 10);
        if (*end != '\0' || k < 1 || k > static_cast<long>(criteria.size())) {
            std::fprintf(stderr, "usage: acceptance [criterion 1..%zu]...\n", criteria.size());
            return 2;
        }
        selected.push_back(static_cast<int>(k));
    }
    if (selected.empty())
        for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) selected.push_back(k);

    // wall-clock budgets in seconds, 0 where none is set
    const double budget[] = {1, 1, 10, 30, 60, 5, 120, 0, 0, 0, 0, 0};
    int failures = 0;
    for (int k : selected) {
        const auto& [name, run] = criteria[static_cast<std::size_t>(k - 1)];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const double limit = budget[k - 1];
        if (limit > 0 && secs > limit) {
            o.pass = false;
            o.detail += " (over the " + fmt("%.0f", limit) + " s budget)";
        }
        std::printf("criterion %d (%s): %s  %s  [%.2f s]\n", k, name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
