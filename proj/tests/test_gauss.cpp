#include <doctest.h>

#include <cmath>

#include "fbh/core_math.hpp"
#include <functional>

#include "fbh/gauss.hpp"

using namespace fbh;

namespace {
double apply(const GaussRule& rule, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}
}  // namespace

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    const GaussRule rule = gauss_legendre(5, 0.0, 1.0);
    for (int j = 0; j <= 9; ++j) {
        const double got = apply(rule, [j](double x) { return std::pow(x, j); });
        CHECK(got == doctest::Approx(1.0 / (j + 1.0)).epsilon(1e-13));
    }
}

TEST_CASE("Gauss-Laguerre integrates monomials against e^{-s}") {
    const GaussRule rule = gauss_laguerre(12);
    for (int j = 0; j <= 23; ++j) {
        const double got = apply(rule, [j](double s) { return std::pow(s, j); });
        const double expected = std::exp(log_gamma(j + 1.0));
        CHECK(got == doctest::Approx(expected).epsilon(1e-11));
    }
}

TEST_CASE("Gauss-Jacobi on [0,1] integrates x^q against (1-x)^alpha") {
    for (double alpha : {-0.5, 0.0, 1.0, 2.5}) {
        const GaussRule rule = gauss_jacobi01(10, alpha);
        for (int q = 0; q <= 19; ++q) {
            const double got = apply(rule, [q](double x) { return std::pow(x, q); });
            const double expected = beta_function(q + 1.0, alpha + 1.0);
            CHECK(got == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("rule construction rejects bad arguments") {
    CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_jacobi01(4, -1.0), std::domain_error);
}
