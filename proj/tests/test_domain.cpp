#include <doctest.h>

#include <cmath>
#include <random>

#include "fbh/domain.hpp"
#include "fbh/gauss.hpp"
#include "oracles.hpp"

using namespace fbh;

namespace {
PointPair make_point(complex z, complex w) { return PointPair{{z}, {w}}; }
}  // namespace

TEST_CASE("rho examples") {
    const DomainParams params{1, 1, 1.0, 0.0};
    CHECK(rho(make_point({0, 0}, {0, 0}), params) == doctest::Approx(-1.0));
    CHECK(rho(make_point({0, 0}, {1, 0}), params) == doctest::Approx(0.0));
    CHECK(rho(make_point({std::sqrt(std::log(2.0)), 0}, {0, 0}), params) ==
          doctest::Approx(-0.5));
    CHECK_THROWS_AS(rho(PointPair{{}, {complex{0, 0}}}, params), std::invalid_argument);
}

TEST_CASE("fiber_radius examples") {
    const DomainParams unit{1, 1, 1.0, 0.0};
    CHECK(fiber_radius(cvec{complex{0, 0}}, unit) == doctest::Approx(1.0));
    CHECK(fiber_radius(cvec{complex{1, 0}}, unit) == doctest::Approx(std::exp(-0.5)));
    const DomainParams half{1, 1, 0.5, 0.0};
    CHECK(fiber_radius(cvec{complex{1, 1}}, half) == doctest::Approx(std::exp(-0.5)));
}

TEST_CASE("fiber_weight_integral closed values") {
    CHECK(fiber_weight_integral(1, 0.0) == doctest::Approx(kPi).epsilon(1e-13));
    // oracle: 2 pi * integral of r (1-r^2) dr over [0,1]
    const double oracle1 = 2.0 * kPi *
        test::integrate_1d([](double r) { return r * (1.0 - r * r); }, 0.0, 1.0);
    CHECK(fiber_weight_integral(1, 1.0) == doctest::Approx(oracle1).epsilon(1e-11));
    CHECK(fiber_weight_integral(2, 0.0) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-13));
    CHECK_THROWS_AS(fiber_weight_integral(1, -1.0), std::domain_error);
}

TEST_CASE("base slice lies inside the domain") {
    const DomainParams params{2, 1, 0.7, 0.5};
    std::mt19937_64 gen(3);
    std::normal_distribution<double> dist(0.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        PointPair pt{cvec(2), cvec(1, complex{0, 0})};
        for (auto& z : pt.z) z = complex{dist(gen), dist(gen)};
        CHECK(rho(pt, params) < 0.0);
        CHECK(strictly_inside(pt, params));
    }
}

TEST_CASE("fiber_weight_integral gamma-ratio normalization") {
    for (int m : {1, 2, 3}) {
        for (double alpha : {-0.5, 0.0, 1.0, 2.5}) {
            const double v = fiber_weight_integral(m, alpha) *
                             std::exp(log_gamma(alpha + m + 1.0) - m * std::log(kPi) -
                                      log_gamma(alpha + 1.0));
            CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("fiber integral of (-rho)^alpha by Gauss-Jacobi matches closed form") {
    // n = m = 1: integral over {|w| < R} of (R^2 - |w|^2)^alpha equals
    // C_fiber(1, alpha) exp(-mu (alpha+1) |z|^2)
    std::mt19937_64 gen(5);
    std::normal_distribution<double> dist;
    for (double alpha : {0.0, 0.5, 2.0}) {
        const DomainParams params{1, 1, 1.3, alpha};
        const GaussRule rule = gauss_jacobi01(48, alpha);
        for (int trial = 0; trial < 10; ++trial) {
            const cvec z{complex{dist(gen), dist(gen)}};
            const double r2 = fiber_radius(z, params);  // radius
            // substitute |w|^2 = R^2 x: integral = pi R^{2(alpha+1)} * sum w_k
            double quad = 0.0;
            for (std::size_t k = 0; k < rule.size(); ++k) quad += rule.weights[k];
            quad *= kPi * std::pow(r2 * r2, alpha + 1.0);
            const double closed = fiber_weight_integral(1, alpha) *
                                  std::exp(-params.mu * (alpha + 1.0) * norm_sq(z));
            CHECK(quad == doctest::Approx(closed).epsilon(1e-8));
        }
    }
}

TEST_CASE("DomainParams validation") {
    CHECK_THROWS_AS((DomainParams{0, 1, 1.0, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DomainParams{1, 0, 1.0, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DomainParams{1, 1, 0.0, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DomainParams{1, 1, 1.0, -1.0}.validate()), std::invalid_argument);
    CHECK_NOTHROW((DomainParams{1, 1, 1.0, -0.5}.validate()));
}
