#include "doctest.h"

#include "blowup/evolution/evolve.hpp"
#include "blowup/profile/profile.hpp"

#include <cmath>
#include <random>

using namespace blowup::evolution;
namespace pf = blowup::profile;

namespace {

double rel_diff(const FieldState& a, const FieldState& b) {
    return (a.stacked() - b.stacked()).norm() / b.stacked().norm();
}

FieldState bump(const Grid& g, double amp) {
    return {g.sample([amp](double r) { return amp * std::exp(-4.0 * r * r); }),
            g.sample([amp](double r) { return amp * r * r * std::exp(-r * r); }), 0.0};
}

}  // namespace

TEST_CASE("grid invariants") {
    for (int n : {8, 17, 32}) {
        Grid g = make_grid(n);
        REQUIRE(g.nodes.size() == static_cast<std::size_t>(n));
        CHECK(g.nodes.front() == 0.0);
        CHECK(g.nodes.back() == 1.0);
        for (std::size_t i = 1; i < g.nodes.size(); ++i) CHECK(g.nodes[i] > g.nodes[i - 1]);
        const Eigen::VectorXd p = g.sample([](double r) { return std::pow(r, 6) - 2 * r * r; });
        const Eigen::VectorXd dp = g.sample([](double r) { return 6 * std::pow(r, 5) - 4 * r; });
        const Eigen::VectorXd ddp = g.sample([](double r) { return 30 * std::pow(r, 4) - 4; });
        CHECK((g.D1 * p - dp).lpNorm<Eigen::Infinity>() < 1e-10);
        CHECK((g.D2 * p - ddp).lpNorm<Eigen::Infinity>() < 1e-8);
        const Eigen::VectorXd one = Eigen::VectorXd::Ones(n);
        CHECK((g.filter * one - one).lpNorm<Eigen::Infinity>() < 1e-12);
        CHECK(g.quad_weights.sum() == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(make_grid(3), std::invalid_argument);
}

TEST_CASE("Sobolev surrogate") {
    Grid g = make_grid(16);
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(g.n);
    CHECK(sobolev_surrogate(g, Eigen::VectorXd::Zero(g.n), 3) == 0.0);
    CHECK(std::abs(sobolev_surrogate(g, one, 0) - 1.0 / 11) < 1e-15);
    // high derivatives amplify round-off in the nodal values
    CHECK(std::abs(sobolev_surrogate(g, one, 6) - 1.0 / 11) < 1e-6);
    // int r^14 + 4 r^12 = 1/15 + 4/13
    const Eigen::VectorXd sq = g.sample([](double r) { return r * r; });
    CHECK(sobolev_surrogate(g, sq, 1) == doctest::Approx(1.0 / 15 + 4.0 / 13).epsilon(1e-12));
    const Eigen::VectorXd u = bump(g, 1.0).phi1;
    for (int k = 1; k <= kMaxNormOrder; ++k) CHECK(sobolev_surrogate(g, u, k) >= sobolev_surrogate(g, u, k - 1));
    CHECK_THROWS_AS(sobolev_surrogate(g, u, 7), std::invalid_argument);
    CHECK_THROWS_AS(sobolev_surrogate(g, u, -1), std::invalid_argument);
}

TEST_CASE("right-hand side") {
    Grid g = make_grid(48);
    const FieldState z = FieldState::zero(g);
    CHECK(rhs(g, z, Mode::full).stacked().norm() == 0.0);
    const FieldState m = symmetry_mode(g);
    CHECK(rel_diff(rhs(g, m, Mode::linearized), m) < 1e-8);
    auto nl = [&](double a) {
        const FieldState s = bump(g, a);
        return (rhs(g, s, Mode::full).stacked() - rhs(g, s, Mode::linearized).stacked()).norm();
    };
    const double ratio = nl(1e-3) / nl(5e-4);
    CHECK(ratio == doctest::Approx(4.0).epsilon(1e-2));
    CHECK_THROWS_AS(rhs(g, FieldState::zero(make_grid(8)), Mode::full), std::invalid_argument);
}

TEST_CASE("zero state is stationary") {
    Grid g = make_grid(24);
    auto rep = integrate(g, FieldState::zero(g), 10.0, Mode::full);
    for (double v : rep.norms) CHECK(v <= 1e-10);
    CHECK_FALSE(rep.aborted);
}

TEST_CASE("symmetry mode grows at rate one") {
    Grid g = make_grid(32);
    IntegrateOptions o;
    o.fit_from = 0.5;
    auto rep = integrate(g, symmetry_mode(g), 5.0, Mode::linearized, o);
    CHECK(rep.fitted_rate == doctest::Approx(1.0).epsilon(0.02));
    for (double c : rep.g_component) CHECK(c > 0.0);
}

TEST_CASE("linear flow of the symmetry mode matches e^tau g") {
    auto err = [](int n) {
        Grid g = make_grid(n);
        const FieldState m = symmetry_mode(g);
        IntegrateOptions o;
        o.keep_trajectory = true;
        auto rep = integrate(g, m, 3.0, Mode::linearized, o);
        double worst = 0;
        for (const auto& s : rep.trajectory) {
            FieldState ref{m.phi1 * std::exp(s.tau), m.phi2 * std::exp(s.tau), s.tau};
            worst = std::max(worst, rel_diff(s, ref));
        }
        return worst;
    };
    const double e32 = err(32), e64 = err(64);
    CHECK(e64 <= 1e-3);
    CHECK(e64 < e32);
}

TEST_CASE("spatial convergence") {
    auto final_on_quad = [](int n, const Eigen::VectorXd& x) {
        Grid g = make_grid(n);
        IntegrateOptions o;
        o.output_every = 0.5;
        auto rep = integrate(g, bump(g, 1e-2), 1.0, Mode::full, o);
        const Eigen::VectorXd c = g.to_coeffs * rep.final_state.phi1;
        Eigen::VectorXd out(x.size());
        for (Eigen::Index q = 0; q < x.size(); ++q) {
            double s = 0;
            for (Eigen::Index k = 0; k < c.size(); ++k) s += c[k] * std::cos(2.0 * k * std::acos(x[q]));
            out[q] = s;
        }
        return out;
    };
    Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(41, 0.0, 1.0);
    const Eigen::VectorXd ref = final_on_quad(40, x);
    const double e8 = (final_on_quad(8, x) - ref).lpNorm<Eigen::Infinity>();
    const double e12 = (final_on_quad(12, x) - ref).lpNorm<Eigen::Infinity>();
    CHECK(e8 / e12 >= 4.0);
}

TEST_CASE("initial data for a trial blowup time") {
    Grid g = make_grid(24);
    const Perturbation none;
    CHECK(initial_data_U(g, none, 1.0).stacked().norm() == 0.0);
    const FieldState m = symmetry_mode(g);
    const double h = 1e-5;
    const FieldState up = initial_data_U(g, none, 1.0 + h), dn = initial_data_U(g, none, 1.0 - h);
    FieldState dT{(up.phi1 - dn.phi1) / (2 * h), (up.phi2 - dn.phi2) / (2 * h), 0.0};
    CHECK(rel_diff(dT, m) < 1e-8);
    const FieldState u = initial_data_U(g, none, 1.01);
    FieldState lin{0.01 * m.phi1, 0.01 * m.phi2, 0.0};
    const double rem = (u.stacked() - lin.stacked()).norm() / m.stacked().norm();
    CHECK(rem < 1e-3);
    CHECK(rem > 1e-6);
    // exact data of a shifted blowup time vanish at that time
    CHECK(initial_data_U(g, exact_solution_data(1.05), 1.05).stacked().norm() < 1e-12);
    CHECK_THROWS_AS(initial_data_U(g, none, 0.7), std::domain_error);
    CHECK_THROWS_AS(initial_data_U(g, none, 1.3), std::domain_error);
}

TEST_CASE("component along the symmetry mode") {
    Grid g = make_grid(24);
    const FieldState m = symmetry_mode(g);
    CHECK(g_component(g, m) == doctest::Approx(1.0).epsilon(1e-14));
    const FieldState s = bump(g, 1.0);
    const double c = g_component(g, s);
    FieldState perp{s.phi1 - c * m.phi1, s.phi2 - c * m.phi2, 0.0};
    CHECK(std::abs(g_component(g, perp)) < 1e-14);
    // relative to the symmetry mode itself, the amplitude settles along the linearized flow
    auto rel = [&](double t) { return unstable_amplitude(g, s, t) / unstable_amplitude(g, m, t); };
    const double r5 = rel(5.0), r10 = rel(10.0), r15 = rel(15.0);
    CHECK(std::abs(r10 - r15) < 1e-6 * std::abs(r15));
    CHECK(std::abs(r10 - r15) < std::abs(r5 - r10));
}

TEST_CASE("cancelled data decay") {
    Grid g = make_grid(32);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const double c1 = U(rng), c2 = U(rng), c3 = U(rng);
    FieldState s{g.sample([&](double r) { return c1 + c2 * r * r; }),
                 g.sample([&](double r) { return c3 * std::cos(r * r); }), 0.0};
    IntegrateOptions o;
    o.fit_from = 2.0;
    const FieldState t = cancel_unstable_mode(g, s, 20.0, o);
    auto rep = integrate(g, t, 8.0, Mode::linearized, o);
    CHECK(rep.fitted_rate < -0.5);
    CHECK(rep.norms.back() < rep.norms.front());
}

TEST_CASE("blowup time of unperturbed data") {
    Grid g = make_grid(24);
    auto r = find_blowup_time(g, Perturbation{});
    CHECK(r.converged);
    CHECK(std::abs(r.T - 1.0) <= 1e-6);
}

TEST_CASE("blowup time of a rescaled solution") {
    Grid g = make_grid(24);
    auto r = find_blowup_time(g, exact_solution_data(1.05));
    CHECK(r.converged);
    CHECK(std::abs(r.T - 1.05) <= 1e-6);
    CHECK(r.message == "converged");
}

TEST_CASE("sup amplitude of the profile") {
    Grid g = make_grid(16);
    CHECK(sup_amplitude(g, FieldState::zero(g)) == doctest::Approx(pf::phi0(pf::params9(), 1.0)).epsilon(1e-15));
}
