#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fbh/quadrature.hpp"

using namespace fbh;

namespace {

QuadratureSpec tensor_spec() {
    QuadratureSpec spec;
    spec.engine = Engine::TensorGauss;
    return spec;
}

QuadratureSpec mc_spec(std::size_t samples, std::uint64_t seed = 42) {
    QuadratureSpec spec;
    spec.engine = Engine::MonteCarlo;
    spec.mc_samples = samples;
    spec.seed = seed;
    return spec;
}

}  // namespace

TEST_CASE("integrate_fock tensor: Gaussian mass and second moment") {
    const FockWeight unit{1.0};
    const auto one = [](const cvec&) { return complex{1.0, 0.0}; };
    CHECK(integrate_fock(one, 1, unit, tensor_spec()).value.real() ==
          doctest::Approx(kPi).epsilon(1e-13));
    const auto zsq = [](const cvec& z) { return complex{std::norm(z[0]), 0.0}; };
    CHECK(integrate_fock(zsq, 1, unit, tensor_spec()).value.real() ==
          doctest::Approx(kPi).epsilon(1e-13));
}

TEST_CASE("integrate_fock tensor exact-degree property") {
    // k radial nodes integrate |z|^{2j}, j <= 2k-1, exactly
    QuadratureSpec spec = tensor_spec();
    spec.radial_nodes = 8;
    const FockWeight weight{0.7};
    for (int j = 0; j <= 15; ++j) {
        const auto f = [j](const cvec& z) {
            return complex{std::pow(std::norm(z[0]), j), 0.0};
        };
        // integral of |z|^{2j} e^{-b|z|^2} = pi j! / b^{j+1}
        const double expected =
            kPi * std::exp(log_gamma(j + 1.0)) / std::pow(weight.beta, j + 1.0);
        CHECK(integrate_fock(f, 1, weight, spec).value.real() ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("integrate_fock Monte-Carlo") {
    const FockWeight weight{1.0};
    SUBCASE("constant integrand has zero variance") {
        const auto one = [](const cvec&) { return complex{1.0, 0.0}; };
        const McEstimate est = integrate_fock(one, 2, weight, mc_spec(20000));
        CHECK(est.value.real() == doctest::Approx(kPi * kPi).epsilon(1e-12));
        CHECK(est.std_error == doctest::Approx(0.0).scale(1e-12));
    }
    SUBCASE("odd integrand vanishes within 3 standard errors") {
        const auto f = [](const cvec& z) { return z[0]; };
        const McEstimate est = integrate_fock(f, 1, weight, mc_spec(200000));
        CHECK(std::abs(est.value) <= 3.0 * est.std_error + 1e-12);
    }
    SUBCASE("second moment within 3 standard errors") {
        const auto f = [](const cvec& z) { return complex{std::norm(z[0]), 0.0}; };
        const McEstimate est = integrate_fock(f, 1, weight, mc_spec(400000));
        CHECK(std::abs(est.value.real() - kPi) <= 3.0 * est.std_error);
    }
    SUBCASE("shifted sampler is unbiased") {
        const auto f = [](const cvec& z) { return complex{std::norm(z[0]), 0.0}; };
        const cvec center{complex{1.5, -0.5}};
        const McEstimate est = integrate_fock(f, 1, weight, mc_spec(400000), center);
        CHECK(std::abs(est.value.real() - kPi) <= 3.0 * est.std_error);
    }
}

TEST_CASE("sample_fbh_weighted stays inside the domain") {
    const DomainParams params{2, 2, 0.8, 0.5};
    Xoshiro256pp rng(99);
    for (int i = 0; i < 2000; ++i) {
        const PointPair pt = sample_fbh_weighted(params, rng);
        CHECK(rho(pt, params) < 0.0);
    }
}

TEST_CASE("integrate_fbh Monte-Carlo matches monomial closed forms") {
    const DomainParams params{1, 1, 1.0, 0.0};
    SUBCASE("weighted volume has zero variance") {
        const auto one = [](const PointPair&) { return complex{1.0, 0.0}; };
        const McEstimate est = integrate_fbh(one, params, mc_spec(10000));
        CHECK(est.value.real() == doctest::Approx(kPi * kPi).epsilon(1e-12));
        CHECK(est.std_error == doctest::Approx(0.0).scale(1e-12));
    }
    SUBCASE("|w|^2 moment") {
        const auto f = [](const PointPair& pt) {
            return complex{std::norm(pt.w[0]), 0.0};
        };
        const McEstimate est = integrate_fbh(f, params, mc_spec(400000));
        const double expected =
            monomial_norm_sq(MultiIndex{0}, MultiIndex{1}, params);
        CHECK(std::abs(est.value.real() - expected) <= 3.0 * est.std_error);
    }
    SUBCASE("phase-odd integrand vanishes") {
        const auto f = [](const PointPair& pt) { return pt.z[0] * pt.w[0]; };
        const McEstimate est = integrate_fbh(f, params, mc_spec(200000));
        CHECK(std::abs(est.value) <= 3.0 * est.std_error + 1e-12);
    }
}

TEST_CASE("integrate_fbh tensor engine") {
    const auto one = [](const PointPair&) { return complex{1.0, 0.0}; };
    const DomainParams params{1, 1, 1.0, 0.0};
    CHECK(integrate_fbh(one, params, tensor_spec()).value.real() ==
          doctest::Approx(kPi * kPi).epsilon(1e-11));
    const auto zsq = [](const PointPair& pt) {
        return complex{std::norm(pt.z[0]), 0.0};
    };
    CHECK(integrate_fbh(zsq, params, tensor_spec()).value.real() ==
          doctest::Approx(kPi * kPi).epsilon(1e-11));
    CHECK_THROWS_AS(integrate_fbh(one, DomainParams{2, 1, 1.0, 0.0}, tensor_spec()),
                    std::invalid_argument);
}

TEST_CASE("monomial battery, tensor engine, n=m=1") {
    for (double mu : {0.5, 1.0}) {
        for (double alpha : {0.0, 2.5}) {
            const DomainParams params{1, 1, mu, alpha};
            for (int p = 0; p <= 3; ++p) {
                for (int q = 0; q <= 3; ++q) {
                    const auto f = [p, q](const PointPair& pt) {
                        return complex{std::pow(std::norm(pt.z[0]), p) *
                                           std::pow(std::norm(pt.w[0]), q),
                                       0.0};
                    };
                    const double expected =
                        monomial_norm_sq(MultiIndex{p}, MultiIndex{q}, params);
                    const double got =
                        integrate_fbh(f, params, tensor_spec()).value.real();
                    CHECK(got == doctest::Approx(expected).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("fiber radial law matches Beta(m, alpha+1) (Kolmogorov-Smirnov)") {
    // m = 1: the CDF of ||w||^2/R^2 is 1 - (1-x)^{alpha+1}
    const double alpha = 0.5;
    const DomainParams params{1, 1, 1.0, alpha};
    const std::size_t n = 100000;
    std::vector<double> xs;
    xs.reserve(n);
    Xoshiro256pp rng(1234);
    for (std::size_t i = 0; i < n; ++i) {
        const PointPair pt = sample_fbh_weighted(params, rng);
        const double r = fiber_radius(pt.z, params);
        xs.push_back(norm_sq(pt.w) / (r * r));
    }
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cdf = 1.0 - std::pow(1.0 - xs[i], alpha + 1.0);
        ks = std::max(ks, std::abs(cdf - (i + 1.0) / n));
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
    }
    const double critical_1pct = 1.628 / std::sqrt(static_cast<double>(n));
    CHECK(ks < critical_1pct);
}

TEST_CASE("Monte-Carlo results are independent of the thread count") {
    const DomainParams params{1, 2, 0.7, 1.0};
    const auto f = [](const PointPair& pt) {
        return std::exp(-norm_sq(pt.z)) * pt.w[0];
    };
    QuadratureSpec one_thread = mc_spec(50000, 7);
    QuadratureSpec four_threads = one_thread;
    four_threads.threads = 4;
    const McEstimate a = integrate_fbh(f, params, one_thread);
    const McEstimate b = integrate_fbh(f, params, four_threads);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
    CHECK(a.std_error == b.std_error);

    const auto g = [](const cvec& z) { return z[0] * std::exp(-std::norm(z[0])); };
    const McEstimate c = integrate_fock(g, 1, FockWeight{1.0}, one_thread);
    const McEstimate d = integrate_fock(g, 1, FockWeight{1.0}, four_threads);
    CHECK(c.value.real() == d.value.real());
    CHECK(c.value.imag() == d.value.imag());
}

TEST_CASE("QuadratureSpec validation") {
    QuadratureSpec spec;
    spec.mc_samples = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = QuadratureSpec{};
    spec.radial_nodes = 1;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = QuadratureSpec{};
    const auto one = [](const cvec&) { return complex{1.0, 0.0}; };
    spec.engine = Engine::TensorGauss;
    CHECK_THROWS_AS(integrate_fock(one, 2, FockWeight{1.0}, spec),
                    std::invalid_argument);
}
