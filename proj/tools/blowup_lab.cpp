#include "blowup/evolution/evolve.hpp"
#include "blowup/geometry/metric.hpp"
#include "blowup/profile/profile.hpp"
#include "blowup/spectral/delta7.hpp"
#include "blowup/spectral/eigensearch.hpp"
#include "blowup/spectral/recurrence.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>

namespace ev = blowup::evolution;
namespace pf = blowup::profile;
namespace sp = blowup::spectral;
namespace geo = blowup::geometry;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, nonconvergence = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json cjson(sp::cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// "re=a:b" -> (a, b)
std::pair<double, double> parse_range(const std::string& s, const std::string& key) {
    if (s.rfind(key + "=", 0) != 0) throw UsageError("--search expects " + key + "=lo:hi, got '" + s + "'");
    const auto body = s.substr(key.size() + 1);
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw UsageError("--search expects " + key + "=lo:hi, got '" + s + "'");
    try {
        std::size_t p1 = 0, p2 = 0;
        const double lo = std::stod(body.substr(0, colon), &p1), hi = std::stod(body.substr(colon + 1), &p2);
        if (p1 != colon || p2 != body.size() - colon - 1) throw std::invalid_argument("trailing characters");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("cannot parse range '" + s + "'");
    }
}

// Writes to path, or stdout for "-".
void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << text;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int cmd_profile(int d, int grid, bool csv, bool as_json) {
    const auto p = pf::profile_params(d);
    if (p.singular_in_cone()) {
        std::cerr << "profile: b<1 for d=" << d << " (b = " << p.b << "); the profile is singular inside the cone\n";
        if (as_json) std::cout << json{{"d", d}, {"E", p.E}, {"a", p.a}, {"b", p.b}, {"verdict", "fail"}}.dump(2) << "\n";
        return failed;
    }
    const auto pts = pf::uniform_grid(grid, 0.0, 1.0, true);
    std::vector<double> interior(pts.begin() + 1, pts.end());
    const double residual = pf::ode_residual(p, interior);
    const bool with_modes = d == 9;
    if (csv) {
        std::string out = with_modes ? "rho,phi0,dphi0,V,g1,g2\n" : "rho,phi0,dphi0\n";
        for (double r : pts) {
            const auto f = pf::phi0_derivs(p, r);
            out += fmt(r) + "," + fmt(f[0]) + "," + fmt(f[1]);
            if (with_modes) out += "," + fmt(pf::V_closed(r)) + "," + fmt(pf::g1(r)) + "," + fmt(pf::g2(r));
            out += "\n";
        }
        std::cout << out;
        return ok;
    }
    json j{{"d", d}, {"E", p.E}, {"a", p.a}, {"b", p.b}, {"ode_residual", residual}, {"grid", grid}};
    if (auto ex = pf::exact_profile_params(d)) j["exact"] = {{"E", ex->E.str()}, {"a_squared", ex->a_squared.str()}, {"b", ex->b.str()}};
    j["b_exceeds_one"] = pf::certify_b_exceeds_one(d).pass() ? "pass" : "fail";
    j["verdict"] = "pass";
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "d = " << d << "\nE = " << fmt(p.E) << "\na = " << fmt(p.a) << "\nb = " << fmt(p.b)
                  << "\nmax ODE residual on " << grid << " points: " << residual << "\n";
    }
    return ok;
}

int cmd_curvature(int d, bool as_json) {
    const auto cert = d > 0 ? geo::certify_negative_curvature(d) : geo::certify_negative_curvature_all();
    if (as_json) {
        std::cout << cert.to_json() << "\n";
    } else {
        std::cout << cert.name() << ": " << (cert.pass() ? "pass" : "fail") << "\n";
        for (const auto& s : cert.steps()) std::cout << "  [" << (s.pass ? "pass" : "fail") << "] " << s.desc << "\n";
        if (d >= 8 && cert.pass()) std::cout << "epsilon margin: " << geo::epsilon_margin(d) << "\n";
    }
    return cert.pass() ? ok : failed;
}

int cmd_search(const std::vector<std::string>& search, int grid, double tol, const std::string& problem, bool as_json) {
    if (search.size() != 2) throw UsageError("--search expects re=lo:hi im=lo:hi");
    const auto [r0, r1] = parse_range(search[0], "re");
    const auto [i0, i1] = parse_range(search[1], "im");
    const auto p = problem == "susy" ? sp::ShootingProblem::susy : sp::ShootingProblem::eigen;
    const auto res = sp::eigenvalue_search({r0, r1, i0, i1}, grid, tol, p);
    bool converged = res.contour_resolved;
    json roots = json::array();
    for (std::size_t k = 0; k < res.eigenvalues.size(); ++k) {
        converged = converged && res.status[k] != "not converged";
        roots.push_back({{"lambda", cjson(res.eigenvalues[k])}, {"residual", res.residuals[k]}, {"status", res.status[k]}});
    }
    if (as_json) {
        json j{{"method", res.method}, {"problem", problem}, {"region", {{"re", {r0, r1}}, {"im", {i0, i1}}}},
               {"tol", tol}, {"winding_total", res.winding_total}, {"contour_resolved", res.contour_resolved},
               {"eigenvalues", roots}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << res.method << ", " << res.eigenvalues.size() << " root(s)\n";
        for (std::size_t k = 0; k < res.eigenvalues.size(); ++k)
            std::cout << "  " << fmt(res.eigenvalues[k].real()) << " " << (res.eigenvalues[k].imag() < 0 ? "- " : "+ ")
                      << fmt(std::abs(res.eigenvalues[k].imag())) << "i  residual " << res.residuals[k] << "  "
                      << res.status[k] << "\n";
    }
    return converged ? ok : nonconvergence;
}

int cmd_bounds(int axis, int interior, double radius, int n_max, std::uint64_t seed, bool as_json) {
    const auto rep = sp::verify_bounds(sp::half_plane_samples(axis, interior, radius, seed), n_max);
    if (as_json) {
        json j = json::parse(rep.cert.to_json());
        j["max_delta7"] = rep.max_delta7;
        j["max_eps"] = rep.max_eps;
        j["max_C"] = rep.max_C;
        j["max_delta_induction"] = rep.max_delta_induction;
        json v = json::array();
        for (const auto& b : rep.violations)
            v.push_back({{"lambda", cjson(b.lambda)}, {"n", b.n}, {"which", b.which}, {"value", b.value}});
        j["violations"] = v;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "sampled bounds: " << (rep.cert.pass() ? "pass" : "fail") << "\n  max |delta_7| " << rep.max_delta7
                  << "\n  max |eps_n| " << rep.max_eps << "\n  max |C_n| " << rep.max_C << "\n  violations "
                  << rep.violations.size() << "\n";
    }
    return rep.cert.pass() ? ok : failed;
}

int cmd_certify(bool delta7) {
    if (!delta7) throw UsageError("certify: nothing selected (use --delta7)");
    const auto cert = sp::delta7_exact_certificate();
    std::cout << cert.to_json() << "\n";
    return cert.pass() ? ok : failed;
}

ev::FieldState seeded_data(const ev::Grid& g, double amp, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    double c[6];
    for (double& x : c) x = U(rng);
    return {g.sample([&](double r) { return amp * (c[0] + c[1] * r * r + c[2] * std::cos(3 * r * r)); }),
            g.sample([&](double r) { return amp * (c[3] + c[4] * r * r + c[5] * std::exp(-r * r)); }), 0.0};
}

int cmd_evolve(int n, double tau_end, double amp, const std::string& mode, const std::string& csv, bool cancel,
               std::uint64_t seed, int norm_order, double output_every, bool as_json) {
    const ev::Grid g = ev::make_grid(n);
    ev::IntegrateOptions o;
    o.norm_order = norm_order;
    o.output_every = output_every;
    ev::FieldState s = seeded_data(g, amp, seed);
    if (cancel) s = ev::cancel_unstable_mode(g, s, 20.0, o);
    const auto rep = ev::integrate(g, s, tau_end, mode == "full" ? ev::Mode::full : ev::Mode::linearized, o);
    if (!csv.empty()) {
        std::string out = "tau";
        for (int k = 0; k <= ev::kMaxNormOrder; ++k) out += ",norm_" + std::to_string(k);
        out += ",g_component,sup_u\n";
        for (std::size_t i = 0; i < rep.times.size(); ++i) {
            out += fmt(rep.times[i]);
            for (double v : rep.norms_by_order[i]) out += "," + fmt(v);
            out += "," + fmt(rep.g_component[i]) + "," + fmt(rep.sup_u[i]) + "\n";
        }
        emit(csv, out);
    }
    if (as_json) {
        json j{{"n", n}, {"mode", mode}, {"amp", amp}, {"seed", seed}, {"cancelled", cancel}, {"tau_end", rep.times.back()},
               {"norm_order", norm_order}, {"initial_norm", rep.norms.front()}, {"final_norm", rep.norms.back()},
               {"fitted_rate", rep.fitted_rate}, {"aborted", rep.aborted}, {"diagnostic", rep.diagnostic},
               {"norm_note", "Sobolev surrogate, up to norm equivalence"}};
        std::cout << j.dump(2) << "\n";
    } else if (csv != "-") {
        std::cout << "tau = " << rep.times.back() << "  norm_" << norm_order << " " << rep.norms.front() << " -> "
                  << rep.norms.back() << "  fitted rate " << rep.fitted_rate << "\n";
        if (rep.aborted) std::cout << rep.diagnostic << "\n";
    }
    return rep.aborted ? nonconvergence : ok;
}

int cmd_find_t(double tprime, double t0, int n, bool as_json) {
    const ev::Grid g = ev::make_grid(n);
    const auto r = ev::find_blowup_time(g, ev::exact_solution_data(tprime, t0), t0);
    if (as_json) {
        std::cout << json{{"tprime", tprime}, {"T0", t0}, {"n", n}, {"T", r.T}, {"converged", r.converged},
                          {"iterations", r.iterations}, {"amplitude", r.amplitude}, {"message", r.message}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "T = " << fmt(r.T) << " (" << r.message << ", " << r.iterations << " iterations)\n";
    }
    return r.converged ? ok : nonconvergence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"blowup-lab: self-similar blowup toolkit"};
    app.require_subcommand(1);

    int d = 9, grid = 1000;
    bool csv_flag = false, as_json = false;
    auto* profile = app.add_subcommand("profile", "profile parameters, residual and samples");
    profile->add_option("--d", d, "target dimension")->required();
    profile->add_option("--grid", grid, "sample count on [0, 1]")->check(CLI::Range(2, 10000000));
    profile->add_flag("--csv", csv_flag, "samples rho, phi0, phi0' (and V, g1, g2 for d = 9) as CSV");
    profile->add_flag("--json", as_json, "JSON summary");

    int cd = 0;
    auto* curvature = app.add_subcommand("curvature", "negative sectional curvature certificate");
    curvature->add_option("--d", cd, "dimension; omitted: all d >= 8 at once")->check(CLI::Range(2, 1000000));
    curvature->add_flag("--json", as_json, "certificate JSON");

    std::vector<std::string> search;
    int sgrid = 4, axis = 500, interior = 200, n_max = 2000;
    double tol = 1e-10, radius = 100;
    std::uint64_t seed = 0;
    std::string problem = "eigen";
    bool bounds = false;
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue search or sampled recurrence bounds");
    auto* search_opt = spectrum->add_option("--search", search, "re=lo:hi im=lo:hi")->expected(2);
    spectrum->add_option("--grid", sgrid, "cells per side")->check(CLI::Range(1, 64));
    spectrum->add_option("--tol", tol, "secant tolerance")->check(CLI::PositiveNumber);
    spectrum->add_option("--problem", problem, "eigen or susy")->check(CLI::IsMember({"eigen", "susy"}));
    auto* bounds_opt = spectrum->add_flag("--bounds", bounds, "sampled bound sweep instead of a search");
    spectrum->add_option("--axis", axis, "samples on the imaginary axis")->check(CLI::NonNegativeNumber);
    spectrum->add_option("--interior", interior, "samples inside the half plane")->check(CLI::NonNegativeNumber);
    spectrum->add_option("--radius", radius, "sample radius")->check(CLI::PositiveNumber);
    spectrum->add_option("--n-max", n_max, "last index checked")->check(CLI::Range(8, 10000000));
    spectrum->add_option("--seed", seed, "sampling seed");
    spectrum->add_flag("--json", as_json, "JSON output");
    search_opt->excludes(bounds_opt);

    bool delta7 = false;
    auto* certify = app.add_subcommand("certify", "exact certificates");
    certify->add_flag("--delta7", delta7, "|delta_7| <= 1/3 on the imaginary axis");

    int n = 64, norm_order = 2;
    double tau_end = 10, amp = 1e-3, output_every = 0.05;
    std::string mode = "full", csv_path;
    bool cancel = false;
    auto* evolve = app.add_subcommand("evolve", "time evolution in similarity coordinates");
    evolve->add_option("--n", n, "collocation nodes")->check(CLI::Range(4, 512));
    evolve->add_option("--tau-end", tau_end, "final time")->check(CLI::NonNegativeNumber);
    evolve->add_option("--amp", amp, "amplitude of the seeded data");
    evolve->add_option("--mode", mode, "full or linear")->check(CLI::IsMember({"full", "linear"}));
    evolve->add_option("--csv", csv_path, "time series CSV ('-' for stdout)");
    evolve->add_flag("--cancel", cancel, "remove the symmetry-mode component first");
    evolve->add_option("--seed", seed, "data seed");
    evolve->add_option("--norm-order", norm_order, "surrogate order for the fit")->check(CLI::Range(0, ev::kMaxNormOrder));
    evolve->add_option("--output-every", output_every, "output interval")->check(CLI::PositiveNumber);
    evolve->add_flag("--json", as_json, "JSON summary");

    double tprime = 1.05, t0 = 1.0;
    int fn = 32;
    auto* find_t = app.add_subcommand("find-T", "blowup time of rescaled self-similar data");
    find_t->add_option("--tprime", tprime, "blowup time of the data")->check(CLI::PositiveNumber);
    find_t->add_option("--t0", t0, "reference time")->check(CLI::PositiveNumber);
    find_t->add_option("--n", fn, "collocation nodes")->check(CLI::Range(4, 512));
    find_t->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*profile) return cmd_profile(d, grid, csv_flag, as_json);
        if (*curvature) return cmd_curvature(cd, as_json);
        if (*spectrum) {
            if (bounds) return cmd_bounds(axis, interior, radius, n_max, seed, as_json);
            if (search.empty()) throw UsageError("spectrum: give --search re=lo:hi im=lo:hi or --bounds");
            return cmd_search(search, sgrid, tol, problem, as_json);
        }
        if (*certify) return cmd_certify(delta7);
        if (*evolve) return cmd_evolve(n, tau_end, amp, mode, csv_path, cancel, seed, norm_order, output_every, as_json);
        if (*find_t) return cmd_find_t(tprime, t0, fn, as_json);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failed;
    }
    return usage;
}
