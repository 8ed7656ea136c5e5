#include "blowup/evolution/grid.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace blowup::evolution {

namespace {

constexpr double kPi = 3.141592653589793;

// Differentiation matrix on x_j = cos(pi j / N), j = 0..N.
Eigen::MatrixXd cheb_matrix(int N, Eigen::VectorXd& x) {
    x.resize(N + 1);
    for (int j = 0; j <= N; ++j) x[j] = std::cos(kPi * j / N);
    Eigen::VectorXd c(N + 1);
    for (int j = 0; j <= N; ++j) c[j] = ((j == 0 || j == N) ? 2.0 : 1.0) * ((j % 2) ? -1.0 : 1.0);
    Eigen::MatrixXd D(N + 1, N + 1);
    for (int i = 0; i <= N; ++i) {
        double row = 0.0;
        for (int j = 0; j <= N; ++j) {
            if (i == j) continue;
            D(i, j) = c[i] / c[j] / (x[i] - x[j]);
            row += D(i, j);
        }
        D(i, i) = -row;
    }
    return D;
}

// Restricts a full-grid operator to even functions on the half grid, reordered to ascending rho.
Eigen::MatrixXd fold(const Eigen::MatrixXd& M, int n) {
    const int N = 2 * n - 2;
    Eigen::MatrixXd A = M.topLeftCorner(n, n);
    for (int j = 0; j < n - 1; ++j) A.col(j) += M.block(0, N - j, n, 1);
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = A(n - 1 - i, n - 1 - j);
    return out;
}

// Coefficients of the derivative of a Chebyshev series.
Eigen::VectorXd cheb_derivative(const Eigen::VectorXd& a) {
    const int N = static_cast<int>(a.size()) - 1;
    Eigen::VectorXd d = Eigen::VectorXd::Zero(a.size());
    if (N < 1) return d;
    for (int k = N; k >= 1; --k) d[k - 1] = (k + 1 <= N ? d[k + 1] : 0.0) + 2.0 * k * a[k];
    d[0] *= 0.5;
    return d;
}

double clenshaw(const Eigen::VectorXd& a, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) {
        const double t = 2.0 * x * b1 - b2 + a[k];
        b2 = b1;
        b1 = t;
    }
    return x * b1 - b2 + a[0];
}

void gauss_legendre(int m, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
    for (int k = 1; k < m; ++k) {
        const double beta = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = J(k - 1, k) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    nodes.resize(m);
    weights.resize(m);
    for (int k = 0; k < m; ++k) {
        nodes[k] = 0.5 * (es.eigenvalues()[k] + 1.0);
        const double v = es.eigenvectors()(0, k);
        weights[k] = v * v;  // 2 v^2 on [-1, 1], halved on [0, 1]
    }
}

}  // namespace

Grid make_grid(int n, double filter_strength, int filter_order) {
    if (n < 4) throw std::invalid_argument("make_grid: need at least 4 nodes");
    const int N = 2 * n - 2;
    Grid g;
    g.n = n;
    Eigen::VectorXd x;
    const Eigen::MatrixXd D = cheb_matrix(N, x);
    g.D1 = fold(D, n);
    g.D2 = fold(D * D, n);
    g.nodes.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g.nodes[static_cast<std::size_t>(i)] = i == 0 ? 0.0 : x[n - 1 - i];
    g.nodes.back() = 1.0;

    // T_{2k}(rho_i) = cos(2k theta_i)
    Eigen::MatrixXd Tm(n, n);
    for (int i = 0; i < n; ++i) {
        const double theta = kPi * (n - 1 - i) / N;
        for (int k = 0; k < n; ++k) Tm(i, k) = std::cos(2.0 * k * theta);
    }
    g.to_coeffs = Tm.inverse();
    Eigen::VectorXd sigma(n);
    for (int k = 0; k < n; ++k) sigma[k] = std::exp(-filter_strength * std::pow(double(k) / (n - 1), filter_order));
    g.filter = Tm * sigma.asDiagonal() * g.to_coeffs;

    gauss_legendre(N + 8, g.quad_nodes, g.quad_weights);
    const int m = static_cast<int>(g.quad_nodes.size());
    g.deriv_at_quad.assign(kMaxNormOrder + 1, Eigen::MatrixXd(m, n));
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(N + 1);
        a[2 * k] = 1.0;
        for (int j = 0; j <= kMaxNormOrder; ++j) {
            for (int q = 0; q < m; ++q) g.deriv_at_quad[static_cast<std::size_t>(j)](q, k) = clenshaw(a, g.quad_nodes[q]);
            a = cheb_derivative(a);
        }
    }
    for (auto& B : g.deriv_at_quad) B = B * g.to_coeffs;
    return g;
}

double sobolev_surrogate(const Grid& g, const Eigen::VectorXd& u, int k) {
    if (k < 0 || k > kMaxNormOrder) throw std::invalid_argument("sobolev_surrogate: order outside 0..6");
    if (u.size() != g.n) throw std::invalid_argument("sobolev_surrogate: size mismatch");
    const Eigen::ArrayXd w = g.quad_weights.array() * g.quad_nodes.array().pow(10);
    double s = 0.0;
    for (int j = 0; j <= k; ++j) {
        const Eigen::ArrayXd v = (g.deriv_at_quad[static_cast<std::size_t>(j)] * u).array();
        s += (w * v * v).sum();
    }
    return s;
}

double weighted_inner(const Grid& g, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    const Eigen::ArrayXd w = g.quad_weights.array() * g.quad_nodes.array().pow(10);
    const Eigen::ArrayXd a = (g.deriv_at_quad[0] * u).array(), b = (g.deriv_at_quad[0] * v).array();
    return (w * a * b).sum();
}

}  // namespace blowup::evolution
