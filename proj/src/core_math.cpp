#include "fbh/core_math.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fbh {

MultiIndex::MultiIndex(std::vector<int> e) : entries(std::move(e)) {
    for (int v : entries)
        if (v < 0) throw std::invalid_argument("MultiIndex: negative entry");
}

MultiIndex::MultiIndex(std::initializer_list<int> e) : MultiIndex(std::vector<int>(e)) {}

int MultiIndex::order() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

namespace {

// Lanczos coefficients, g = 7 (Godfrey).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    if (x < 0.5) {
        // reflection, valid for x in (0, 0.5)
        return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

double beta_function(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("beta_function: arguments must be positive");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

complex complex_pairing(std::span<const complex> x, std::span<const complex> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("complex_pairing: length mismatch");
    complex acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
    return acc;
}

double norm_sq(std::span<const complex> x) {
    double acc = 0.0;
    for (const complex& v : x) acc += std::norm(v);
    return acc;
}

}  // namespace fbh
