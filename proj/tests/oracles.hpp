#ifndef FBH_TESTS_ORACLES_HPP
#define FBH_TESTS_ORACLES_HPP

// Test-only quadrature oracles, independent of the library's integration
// code paths.

#include <cmath>
#include <functional>

namespace fbh::test {

inline double simpson(const std::function<double(double)>& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                                   double b, double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = simpson(f, a, mid);
    const double right = simpson(f, mid, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, mid, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, mid, b, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson quadrature on [a, b].
inline double integrate_1d(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-12) {
    return adaptive_simpson_rec(f, a, b, simpson(f, a, b), tol, 40);
}

}  // namespace fbh::test

#endif
