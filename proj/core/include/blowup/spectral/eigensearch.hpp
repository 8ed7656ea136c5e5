#pragma once

#include "blowup/spectral/shooting.hpp"

#include <string>
#include <vector>

namespace blowup::spectral {

struct Region {
    double re_min, re_max, im_min, im_max;
};

struct EigenSearchResult {
    std::vector<cplx> eigenvalues;
    std::vector<double> residuals;
    std::vector<std::string> status;  // per root: "converged", "exact" or "not converged"
    std::string method = "connection-coefficient shooting";
    int winding_total = 0;            // zeros of the pole-compensated determinant in the region
    bool contour_resolved = true;
};

// Determinant with the index-0 branch at rho = 1 times (lambda - p) over resonant poles p
// in [lo, hi]; entire in lambda on that strip.
cplx compensated_determinant(ShootingProblem p, cplx lam, double lo, double hi, const ShootingOptions& o = {});

// Counts zeros by the argument principle on a grid x grid partition, refines each by secant.
// Resonant integers whose log obstruction vanishes exactly are reported with residual 0.
EigenSearchResult eigenvalue_search(const Region& region, int grid, double tol,
                                    ShootingProblem p = ShootingProblem::eigen, const ShootingOptions& o = {});

}  // namespace blowup::spectral
