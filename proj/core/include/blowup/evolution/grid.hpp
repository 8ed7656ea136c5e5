#pragma once

#include <Eigen/Dense>

#include <vector>

namespace blowup::evolution {

constexpr int kMaxNormOrder = 6;

// Chebyshev collocation for functions even in rho, sampled on the n nodes of the
// 2n-1 point Gauss-Lobatto grid on [-1, 1] that lie in [0, 1].
struct Grid {
    int n = 0;
    std::vector<double> nodes;  // ascending, nodes.front() = 0, nodes.back() = 1
    Eigen::MatrixXd D1, D2;     // d/drho and d^2/drho^2 of the even interpolant
    Eigen::MatrixXd to_coeffs;  // nodal values -> coefficients of T_0, T_2, ..., T_{2n-2}
    Eigen::MatrixXd filter;     // exponential damping of the even Chebyshev coefficients
    // Gauss-Legendre rule on [0, 1] exact for the weighted squared derivatives
    Eigen::VectorXd quad_nodes, quad_weights;
    std::vector<Eigen::MatrixXd> deriv_at_quad;  // j-th derivative at quad_nodes, j = 0..6

    template <class F>
    Eigen::VectorXd sample(F&& f) const {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = f(nodes[static_cast<std::size_t>(i)]);
        return v;
    }
};

// sigma_k = exp(-strength (k/(n-1))^order) on the coefficient of T_{2k}
Grid make_grid(int n, double filter_strength = 36.0, int filter_order = 8);

// sum_{j<=k} int_0^1 |d^j u|^2 rho^10 drho
double sobolev_surrogate(const Grid& g, const Eigen::VectorXd& u, int k);
// int_0^1 u v rho^10 drho
double weighted_inner(const Grid& g, const Eigen::VectorXd& u, const Eigen::VectorXd& v);

}  // namespace blowup::evolution
