#include "blowup/spectral/eigensearch.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace blowup::spectral {

namespace {

constexpr double kTwoPi = 6.283185307179586;

std::vector<long> resonant_poles(ShootingProblem p, double lo, double hi) {
    std::vector<long> out;
    for (long k = static_cast<long>(std::floor(lo)); k <= static_cast<long>(std::ceil(hi)) && k < 4; ++k) {
        auto acc = resonance_log_obstruction(p, k);
        if (acc && !acc->is_zero()) out.push_back(k);
    }
    return out;
}

cplx raw_determinant(ShootingProblem p, cplx lam, const ShootingOptions& o) {
    // the index-0 series is only continuous in lambda away from the exact resonant values
    if (lam.imag() == 0.0 && lam.real() == std::floor(lam.real())) lam += cplx(0.0, 1e-12);
    BranchValue l = left_branch(p, lam, o.match, o);
    BranchValue r = right_branch(p, lam, 0.0, o.match, o);
    return l.u * r.du - l.du * r.u;
}

struct Contour {
    std::function<cplx(cplx)> F;
    int max_depth = 14;
    bool resolved = true;

    // change of arg F along [a, b]
    double segment(cplx a, cplx fa, cplx b, cplx fb, int depth) {
        const double d = std::arg(fb / fa);
        const double ratio = std::abs(std::log(std::abs(fb) / std::abs(fa)));
        if ((std::abs(d) < 0.4 && ratio < 2.0) || depth >= max_depth) {
            if (depth >= max_depth && std::abs(d) >= 0.4) resolved = false;
            return d;
        }
        const cplx m = 0.5 * (a + b);
        const cplx fm = F(m);
        return segment(a, fa, m, fm, depth + 1) + segment(m, fm, b, fb, depth + 1);
    }

    int winding(const Region& r) {
        const cplx z[4] = {{r.re_min, r.im_min}, {r.re_max, r.im_min}, {r.re_max, r.im_max}, {r.re_min, r.im_max}};
        cplx f[4];
        for (int k = 0; k < 4; ++k) f[k] = F(z[k]);
        double total = 0.0;
        for (int k = 0; k < 4; ++k) {
            const int n = 16;
            cplx a = z[k], fa = f[k];
            for (int j = 1; j <= n; ++j) {
                const cplx b = j == n ? z[(k + 1) % 4] : z[k] + (z[(k + 1) % 4] - z[k]) * (double(j) / n);
                const cplx fb = j == n ? f[(k + 1) % 4] : F(b);
                total += segment(a, fa, b, fb, 0);
                a = b;
                fa = fb;
            }
        }
        return static_cast<int>(std::lround(total / kTwoPi));
    }
};

bool inside(const Region& r, cplx z, double pad) {
    const double px = pad * (r.re_max - r.re_min), py = pad * (r.im_max - r.im_min);
    return z.real() >= r.re_min - px && z.real() <= r.re_max + px && z.imag() >= r.im_min - py &&
           z.imag() <= r.im_max + py;
}

struct Refined {
    cplx z;
    bool ok;
};

Refined secant(const std::function<cplx(cplx)>& F, cplx z0, cplx z1, double tol) {
    cplx f0 = F(z0), f1 = F(z1);
    for (int it = 0; it < 80; ++it) {
        if (f1 == f0) break;
        const cplx z2 = z1 - f1 * (z1 - z0) / (f1 - f0);
        if (!std::isfinite(z2.real()) || !std::isfinite(z2.imag())) break;
        z0 = z1;
        f0 = f1;
        z1 = z2;
        f1 = F(z1);
        if (std::abs(z1 - z0) <= tol * std::max(1.0, std::abs(z1))) return {z1, true};
    }
    return {z1, false};
}

}  // namespace

cplx compensated_determinant(ShootingProblem p, cplx lam, double lo, double hi, const ShootingOptions& o) {
    cplx f = raw_determinant(p, lam, o);
    for (long k : resonant_poles(p, lo, hi)) f *= lam - static_cast<double>(k);
    return f;
}

EigenSearchResult eigenvalue_search(const Region& region, int grid, double tol, ShootingProblem p,
                                    const ShootingOptions& o) {
    if (grid < 1) throw std::invalid_argument("eigenvalue_search: grid must be positive");
    if (!(region.re_max > region.re_min) || !(region.im_max > region.im_min))
        throw std::invalid_argument("eigenvalue_search: empty region");
    if (!(tol > 0.0)) throw std::invalid_argument("eigenvalue_search: tol must be positive");

    const auto poles = resonant_poles(p, region.re_min - 1.0, region.re_max + 1.0);
    auto F = [&](cplx lam) {
        cplx f = raw_determinant(p, lam, o);
        for (long k : poles) f *= lam - static_cast<double>(k);
        return f;
    };

    EigenSearchResult res;
    Contour contour{F};

    auto add_root = [&](cplx z, bool ok) {
        for (const auto& e : res.eigenvalues)
            if (std::abs(e - z) < 1e-6 * std::max(1.0, std::abs(z))) return;
        res.eigenvalues.push_back(z);
        res.residuals.push_back(connection_determinant(p, z, o).normalized);
        res.status.push_back(ok ? "converged" : "not converged");
    };

    std::function<void(const Region&, int, int)> process = [&](const Region& cell, int count, int depth) {
        if (count <= 0) return;
        const cplx c{0.5 * (cell.re_min + cell.re_max), 0.5 * (cell.im_min + cell.im_max)};
        const cplx h{0.05 * (cell.re_max - cell.re_min), 0.03 * (cell.im_max - cell.im_min)};
        if (count == 1) {
            Refined r = secant(F, c, c + h, tol);
            if (r.ok && inside(cell, r.z, 0.05)) {
                add_root(r.z, true);
                return;
            }
            if (depth >= 6) {
                add_root(r.z, false);
                return;
            }
        }
        if (depth >= 8) {
            Refined r = secant(F, c, c + h, tol);
            add_root(r.z, false);
            return;
        }
        // split off-centre so that symmetric roots do not land on the new edges
        const double sx = cell.re_min + 0.4937 * (cell.re_max - cell.re_min);
        const double sy = cell.im_min + 0.5129 * (cell.im_max - cell.im_min);
        const Region q[4] = {{cell.re_min, sx, cell.im_min, sy},
                             {sx, cell.re_max, cell.im_min, sy},
                             {cell.re_min, sx, sy, cell.im_max},
                             {sx, cell.re_max, sy, cell.im_max}};
        for (const auto& s : q) process(s, contour.winding(s), depth + 1);
    };

    const double wx = (region.re_max - region.re_min) / grid, wy = (region.im_max - region.im_min) / grid;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            // interior grid lines are nudged off the symmetry axis Im = 0
            auto line = [](double lo, double w, int k, int n) { return k == 0 || k == n ? lo + w * k : lo + w * (k + 0.0173); };
            const Region cell{line(region.re_min, wx, i, grid), line(region.re_min, wx, i + 1, grid),
                              line(region.im_min, wy, j, grid), line(region.im_min, wy, j + 1, grid)};
            const int n = contour.winding(cell);
            res.winding_total += n;
            process(cell, n, 0);
        }
    }

    for (long k = static_cast<long>(std::ceil(region.re_min)); k <= static_cast<long>(std::floor(region.re_max)); ++k) {
        if (region.im_min > 0.0 || region.im_max < 0.0) break;
        auto acc = resonance_log_obstruction(p, k);
        if (acc && acc->is_zero()) {
            res.eigenvalues.emplace_back(static_cast<double>(k), 0.0);
            res.residuals.push_back(0.0);
            res.status.push_back("exact");
        }
    }
    res.contour_resolved = contour.resolved;
    return res;
}

}  // namespace blowup::spectral
