#include "blowup/spectral/shooting.hpp"

#include "blowup/spectral/problems.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace blowup::spectral {

namespace odeint = boost::numeric::odeint;
using exact::Rational;

namespace {

using State = std::array<cplx, 2>;

struct Coeffs {
    std::vector<cplx> p2, p1, p0;
};

cplx horner(const std::vector<cplx>& c, double x) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

LinearOde2<cplx> equation(ShootingProblem p, cplx lam) {
    return p == ShootingProblem::eigen ? eigen_equation(lam) : susy_equation(lam);
}

FrobeniusPoint at_one(ShootingProblem p) {
    return p == ShootingProblem::eigen ? FrobeniusPoint::eigen_at_1 : FrobeniusPoint::susy_at_1;
}

Coeffs coeffs_in_rho(ShootingProblem p, cplx lam) {
    auto eq = equation(p, lam);
    return {eq.P2.coeffs(), eq.P1.coeffs(), eq.P0.coeffs()};
}

State integrate(const Coeffs& c, State y, double from, double to, const ShootingOptions& o) {
    if (from == to) return y;
    auto rhs = [&c](const State& s, State& ds, double rho) {
        ds[0] = s[1];
        ds[1] = -(horner(c.p1, rho) * s[1] + horner(c.p0, rho) * s[0]) / horner(c.p2, rho);
    };
    auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(o.atol, o.rtol);
    const double dt = (to > from ? 1.0 : -1.0) * 1e-3;
    odeint::integrate_adaptive(stepper, rhs, y, from, to, dt);
    return y;
}

// x^s sum c_m x^m and its x-derivative
State eval_series(const std::vector<cplx>& c, cplx s, double x) {
    cplx u = 0.0, du = 0.0;
    double xm = 1.0;
    for (std::size_t m = 0; m < c.size(); ++m) {
        const cplx e = s + static_cast<double>(m);
        u += c[m] * xm;
        du += c[m] * e * xm;
        xm *= x;
    }
    const cplx xs = s == 0.0 ? cplx(1.0) : std::pow(cplx(x), s);
    return {u * xs, du * xs / x};
}

std::optional<long> resonant_integer(cplx lam) {
    if (lam.imag() != 0.0) return std::nullopt;
    const double r = lam.real();
    if (r != std::floor(r) || r >= 4.0 || std::abs(r) > 1e6) return std::nullopt;
    return static_cast<long>(r);
}

double vnorm(const State& s) { return std::sqrt(std::norm(s[0]) + std::norm(s[1])); }

struct RightSeries {
    std::vector<cplx> c;
    cplx s;
};

RightSeries right_series(ShootingProblem p, cplx lam, cplx s, const ShootingOptions& o) {
    FrobeniusData<cplx> fd(local_equation(at_one(p), lam));
    return {fd.series(s, o.right_order).c, s};
}

State right_at(const Coeffs& co, const RightSeries& rs, double rho, const ShootingOptions& o) {
    const double x = 1.0 - rho;
    if (x <= o.right_seed_x) {
        State y = eval_series(rs.c, rs.s, x);
        return {y[0], -y[1]};
    }
    State y = eval_series(rs.c, rs.s, o.right_seed_x);
    return integrate(co, {y[0], -y[1]}, 1.0 - o.right_seed_x, rho, o);
}

}  // namespace

int left_index(ShootingProblem p) { return p == ShootingProblem::eigen ? 0 : 2; }

BranchValue left_branch(ShootingProblem p, cplx lam, double rho_end, const ShootingOptions& o) {
    if (rho_end < o.left_seed || rho_end >= 1.0) throw std::domain_error("left_branch: rho_end outside [seed, 1)");
    FrobeniusData<cplx> fd(equation(p, lam));
    const cplx s = static_cast<double>(left_index(p));
    auto ser = fd.series(s, o.left_order);
    State y = integrate(coeffs_in_rho(p, lam), eval_series(ser.c, s, o.left_seed), o.left_seed, rho_end, o);
    return {y[0], y[1]};
}

BranchValue right_branch(ShootingProblem p, cplx lam, cplx s, double rho_end, const ShootingOptions& o) {
    if (rho_end <= 0.0 || rho_end >= 1.0) throw std::domain_error("right_branch: rho_end outside (0, 1)");
    State y = right_at(coeffs_in_rho(p, lam), right_series(p, lam, s, o), rho_end, o);
    return {y[0], y[1]};
}

std::optional<Rational> resonance_log_obstruction(ShootingProblem p, long lam) {
    if (lam >= 4) return std::nullopt;
    const int m = static_cast<int>(4 - lam);
    FrobeniusData<Rational> fd(local_equation(at_one(p), Rational(lam)));
    auto ser = fd.series(Rational(0), m);
    if (!ser.resonance || *ser.resonance != m) throw std::logic_error("resonance_log_obstruction: unexpected index gap");
    return ser.log_obstruction;
}

Connection connection_determinant(ShootingProblem p, cplx lam, const ShootingOptions& o) {
    Connection out;
    out.right_index = 0.0;
    if (auto k = resonant_integer(lam)) {
        auto acc = resonance_log_obstruction(p, *k);
        if (acc && !acc->is_zero()) {
            out.right_index = static_cast<double>(4 - *k);
            out.note = "resonant: index-0 series has a logarithm, log-free branch used";
        } else {
            out.note = "resonant: log obstruction vanishes, both local solutions analytic";
        }
    }
    BranchValue l = left_branch(p, lam, o.match, o);
    BranchValue r = right_branch(p, lam, out.right_index, o.match, o);
    out.wronskian = l.u * r.du - l.du * r.u;
    out.normalized = std::abs(out.wronskian) / (vnorm({l.u, l.du}) * vnorm({r.u, r.du}));
    return out;
}

EigenfunctionValues eigenfunction(ShootingProblem p, cplx lam, const std::vector<double>& grid, bool normalize,
                                  cplx seed_scale, const ShootingOptions& o) {
    const cplx gap = 4.0 - lam;
    if (gap == 0.0) throw std::domain_error("eigenfunction: coinciding indices at rho = 1");
    if (auto k = resonant_integer(lam)) {
        auto acc = resonance_log_obstruction(p, *k);
        if (acc && !acc->is_zero()) throw std::domain_error("eigenfunction: index-0 solution at rho = 1 carries a logarithm");
    }
    for (double r : grid)
        if (r < 0.0 || r > 1.0) throw std::domain_error("eigenfunction: grid outside [0, 1]");

    const Coeffs co = coeffs_in_rho(p, lam);
    FrobeniusData<cplx> fd(equation(p, lam));
    const cplx s0 = static_cast<double>(left_index(p));
    const auto left = fd.series(s0, o.left_order).c;

    std::vector<std::size_t> order(grid.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return grid[a] < grid[b]; });

    EigenfunctionValues out;
    out.rho = grid;
    out.u.assign(grid.size(), 0.0);
    out.du.assign(grid.size(), 0.0);

    // left branch up to the match point
    State y = eval_series(left, s0, o.left_seed);
    double at = o.left_seed;
    for (std::size_t idx : order) {
        const double r = grid[idx];
        if (r > o.match) break;
        State v;
        if (r <= o.left_seed) {
            v = eval_series(left, s0, r);
            if (r == 0.0) v = {s0 == 0.0 ? left[0] : 0.0, left.size() > 1 && s0 == 0.0 ? left[1] : 0.0};
        } else {
            y = integrate(co, y, at, r, o);
            at = r;
            v = y;
        }
        out.u[idx] = v[0];
        out.du[idx] = v[1];
    }
    const State m = integrate(co, y, at, o.match, o);

    // continuation by the local basis at rho = 1, fitted at the match point
    const RightSeries ra = right_series(p, lam, 0.0, o);
    const RightSeries rb = right_series(p, lam, gap, o);
    const State a = right_at(co, ra, o.match, o);
    const State b = right_at(co, rb, o.match, o);
    const cplx det = a[0] * b[1] - a[1] * b[0];
    const cplx alpha = (m[0] * b[1] - m[1] * b[0]) / det;
    const cplx beta = (a[0] * m[1] - a[1] * m[0]) / det;
    for (std::size_t idx : order) {
        const double r = grid[idx];
        if (r <= o.match) continue;
        State va, vb;
        if (r == 1.0) {
            va = {ra.c[0], -(ra.c.size() > 1 ? ra.c[1] : 0.0)};
            vb = {std::real(gap) > 0.0 ? cplx(0.0) : cplx(NAN), 0.0};
            if (std::real(gap) < 1.0) vb[1] = NAN;
        } else {
            va = right_at(co, ra, r, o);
            vb = right_at(co, rb, r, o);
        }
        out.u[idx] = alpha * va[0] + beta * vb[0];
        out.du[idx] = alpha * va[1] + beta * vb[1];
    }

    cplx scale = seed_scale;
    if (normalize) scale /= m[0];
    for (auto& v : out.u) v *= scale;
    for (auto& v : out.du) v *= scale;
    return out;
}

}  // namespace blowup::spectral
