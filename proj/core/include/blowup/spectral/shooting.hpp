#pragma once

#include "blowup/exactmath/rational.hpp"
#include "blowup/spectral/frobenius.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blowup::spectral {

enum class ShootingProblem { eigen, susy };

struct ShootingOptions {
    double left_seed = 1e-3;     // series evaluated at rho = left_seed
    int left_order = 10;
    double right_seed_x = 0.3;   // series evaluated at rho = 1 - right_seed_x
    int right_order = 120;
    double match = 0.5;
    double rtol = 1e-13;
    double atol = 1e-15;
};

struct BranchValue {
    cplx u;
    cplx du;  // d/drho
};

// Index of the analytic branch at rho = 0: 0 for the eigenvalue equation, 2 for its partner.
int left_index(ShootingProblem p);

// Series solution at rho = 0 with the analytic index, integrated to rho_end.
BranchValue left_branch(ShootingProblem p, cplx lam, double rho_end, const ShootingOptions& o = {});
// Series solution x^s (1 + ...) at rho = 1, x = 1 - rho, integrated to rho_end.
BranchValue right_branch(ShootingProblem p, cplx lam, cplx s, double rho_end, const ShootingOptions& o = {});

// For integer lambda = 4 - m with m >= 1 the indices at rho = 1 differ by m; returns the
// obstruction to a log-free index-0 series (zero iff every local solution is analytic).
// Empty when lambda is not of that form.
std::optional<exact::Rational> resonance_log_obstruction(ShootingProblem p, long lam);

struct Connection {
    cplx wronskian;       // W(left, right)(match), unnormalized
    double normalized;    // |W| / (|left| |right|) at the match point
    cplx right_index;     // index of the right branch used
    std::string note;
};
// Uses the index-0 branch at rho = 1, switching to the index 4 - lambda branch at resonant
// integers where the index-0 series carries a logarithm.
Connection connection_determinant(ShootingProblem p, cplx lam, const ShootingOptions& o = {});

struct EigenfunctionValues {
    std::vector<double> rho;
    std::vector<cplx> u;
    std::vector<cplx> du;
};
// Branch analytic at rho = 0 on the given grid in [0, 1]; continued past the match point by the
// local basis at rho = 1. Normalized by its value at the match point when normalize is set.
EigenfunctionValues eigenfunction(ShootingProblem p, cplx lam, const std::vector<double>& grid,
                                  bool normalize = true, cplx seed_scale = 1.0, const ShootingOptions& o = {});

}  // namespace blowup::spectral
