#include "fbh/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace fbh {

void DomainParams::validate() const {
    if (n < 1) throw std::invalid_argument("DomainParams: n must be >= 1");
    if (m < 1) throw std::invalid_argument("DomainParams: m must be >= 1");
    if (!(mu > 0.0)) throw std::invalid_argument("DomainParams: mu must be > 0");
    if (!(alpha > -1.0)) throw std::invalid_argument("DomainParams: alpha must be > -1");
}

double rho(const PointPair& point, const DomainParams& params) {
    if (static_cast<int>(point.z.size()) != params.n ||
        static_cast<int>(point.w.size()) != params.m)
        throw std::invalid_argument("rho: dimension mismatch");
    return norm_sq(point.w) - std::exp(-params.mu * norm_sq(point.z));
}

double fiber_radius(std::span<const complex> z, const DomainParams& params) {
    return std::exp(-0.5 * params.mu * norm_sq(z));
}

double fiber_weight_integral(int m, double alpha) {
    if (m < 1) throw std::invalid_argument("fiber_weight_integral: m must be >= 1");
    if (!(alpha > -1.0))
        throw std::domain_error("fiber_weight_integral: alpha must be > -1");
    return std::exp(m * std::log(kPi) + log_gamma(alpha + 1.0) - log_gamma(alpha + m + 1.0));
}

bool strictly_inside(const PointPair& point, const DomainParams& params) {
    // tolerance relative to the fiber radius: the fiber shrinks like
    // exp(-mu ||z||^2), so an absolute margin would reject far base points
    const double r = rho(point, params);
    const double cap = std::exp(-params.mu * norm_sq(point.z));
    return r < -1e-12 * cap;
}

}  // namespace fbh
