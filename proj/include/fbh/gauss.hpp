#ifndef FBH_GAUSS_HPP
#define FBH_GAUSS_HPP

#include <vector>

namespace fbh {

/// Nodes and weights of a one-dimensional Gaussian quadrature rule.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [a, b].
GaussRule gauss_legendre(int n, double a, double b);

/// n-point Gauss-Laguerre rule: integrates f(s) e^{-s} over [0, inf).
GaussRule gauss_laguerre(int n);

/// n-point Gauss-Jacobi rule on [0, 1] with weight (1-x)^alpha, alpha > -1.
GaussRule gauss_jacobi01(int n, double alpha);

}  // namespace fbh

#endif
