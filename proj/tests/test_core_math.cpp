#include <doctest.h>

#include <cmath>
#include <random>

#include "fbh/core_math.hpp"
#include "oracles.hpp"

using namespace fbh;

TEST_CASE("log_gamma at small integers") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
    CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
}

TEST_CASE("log_gamma matches libm across [1e-3, 1e6]") {
    for (double x = 1e-3; x < 1e6; x *= 1.07) {
        const double ref = std::lgamma(x);
        const double got = log_gamma(x);
        CHECK(std::abs(got - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("log_gamma recurrence over [0.5, 1e4]") {
    for (double x = 0.5; x < 1e4; x *= 1.13) {
        const double resid = log_gamma(x + 1.0) - log_gamma(x) - std::log(x);
        CHECK(std::abs(resid) <= 1e-12 * std::max(1.0, std::abs(log_gamma(x + 1.0))));
    }
}

TEST_CASE("log_gamma rejects nonpositive arguments") {
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("beta_function closed values") {
    CHECK(beta_function(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta_function(1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    // oracle: direct quadrature of x (1-x)^2 on [0,1]
    const double oracle = test::integrate_1d(
        [](double x) { return x * (1.0 - x) * (1.0 - x); }, 0.0, 1.0);
    CHECK(beta_function(2.0, 3.0) == doctest::Approx(oracle).epsilon(1e-10));
    CHECK_THROWS_AS(beta_function(-1.0, 2.0), std::domain_error);
}

TEST_CASE("beta_function is symmetric bit-for-bit") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> dist(0.05, 50.0);
    for (int i = 0; i < 100; ++i) {
        const double a = dist(gen), b = dist(gen);
        CHECK(beta_function(a, b) == beta_function(b, a));
    }
}

TEST_CASE("complex_pairing examples") {
    const cvec e1{complex{1, 0}, complex{0, 0}};
    CHECK(complex_pairing(e1, e1) == complex{1, 0});
    const cvec iv{complex{0, 1}};
    CHECK(complex_pairing(iv, iv) == complex{1, 0});
    const cvec a{complex{1, 1}}, b{complex{2, 0}};
    CHECK(complex_pairing(a, b) == complex{2, 2});
    CHECK_THROWS_AS(complex_pairing(e1, iv), std::invalid_argument);
}

TEST_CASE("complex_pairing conjugate symmetry and diagonal positivity") {
    std::mt19937_64 gen(11);
    std::normal_distribution<double> dist;
    for (int trial = 0; trial < 50; ++trial) {
        cvec x(3), y(3);
        for (int i = 0; i < 3; ++i) {
            x[i] = complex{dist(gen), dist(gen)};
            y[i] = complex{dist(gen), dist(gen)};
        }
        const complex xy = complex_pairing(x, y);
        const complex yx = complex_pairing(y, x);
        CHECK(std::abs(xy - std::conj(yx)) <= 1e-14 * (1.0 + std::abs(xy)));
        const complex xx = complex_pairing(x, x);
        CHECK(xx.imag() == 0.0);
        CHECK(xx.real() >= 0.0);
    }
}

TEST_CASE("MultiIndex order and validation") {
    const MultiIndex p{1, 2, 0};
    CHECK(p.order() == 3);
    CHECK(p.size() == 3);
    CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
}
