#include "fbh/gauss.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "fbh/core_math.hpp"

namespace fbh {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric Jacobi matrix built
// from the monic three-term recurrence (diag a_k, off-diag sqrt(b_k)); the
// weight of node j is mu0 times the squared first component of eigenvector j.
GaussRule golub_welsch(const std::vector<double>& a, const std::vector<double>& b,
                       double mu0) {
    const int n = static_cast<int>(a.size());
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        jacobi(i, i) = a[i];
        if (i + 1 < n) {
            const double off = std::sqrt(b[i + 1]);
            jacobi(i, i + 1) = off;
            jacobi(i + 1, i) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int j = 0; j < n; ++j) {
        rule.nodes[j] = solver.eigenvalues()(j);
        const double v0 = solver.eigenvectors()(0, j);
        rule.weights[j] = mu0 * v0 * v0;
    }
    return rule;
}

}  // namespace

GaussRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    std::vector<double> diag(n, 0.0), off(n, 0.0);
    for (int k = 1; k < n; ++k) {
        const double dk = static_cast<double>(k);
        off[k] = dk * dk / (4.0 * dk * dk - 1.0);
    }
    GaussRule rule = golub_welsch(diag, off, 2.0);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (std::size_t j = 0; j < rule.size(); ++j) {
        rule.nodes[j] = mid + half * rule.nodes[j];
        rule.weights[j] *= half;
    }
    return rule;
}

GaussRule gauss_laguerre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
    std::vector<double> diag(n), off(n, 0.0);
    for (int k = 0; k < n; ++k) {
        diag[k] = 2.0 * k + 1.0;
        if (k >= 1) off[k] = static_cast<double>(k) * k;
    }
    return golub_welsch(diag, off, 1.0);
}

GaussRule gauss_jacobi01(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi01: n must be >= 1");
    if (!(alpha > -1.0)) throw std::domain_error("gauss_jacobi01: alpha must be > -1");
    // Jacobi weight (1-x)^alpha (1+x)^0 on [-1,1], monic recurrence.
    const double a = alpha, b = 0.0;
    std::vector<double> diag(n), off(n, 0.0);
    for (int k = 0; k < n; ++k) {
        const double dk = static_cast<double>(k);
        if (k == 0)
            diag[k] = (b - a) / (a + b + 2.0);
        else
            diag[k] = (b * b - a * a) /
                      ((2.0 * dk + a + b) * (2.0 * dk + a + b + 2.0));
        if (k == 1)
            off[k] = 4.0 * (a + 1.0) * (b + 1.0) /
                     ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
        else if (k >= 2)
            off[k] = 4.0 * dk * (dk + a) * (dk + b) * (dk + a + b) /
                     ((2.0 * dk + a + b) * (2.0 * dk + a + b) *
                      (2.0 * dk + a + b + 1.0) * (2.0 * dk + a + b - 1.0));
    }
    const double mu0 = std::exp((a + 1.0) * std::log(2.0)) / (a + 1.0);
    GaussRule rule = golub_welsch(diag, off, mu0);
    // map [-1,1] with weight (1-x)^a to [0,1] with weight (1-u)^a
    const double scale = std::exp(-(a + 1.0) * std::log(2.0));
    for (std::size_t j = 0; j < rule.size(); ++j) {
        rule.nodes[j] = 0.5 * (1.0 + rule.nodes[j]);
        rule.weights[j] *= scale;
    }
    return rule;
}

}  // namespace fbh
