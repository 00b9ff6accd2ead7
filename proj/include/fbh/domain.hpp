#ifndef FBH_DOMAIN_HPP
#define FBH_DOMAIN_HPP

#include "fbh/core_math.hpp"

namespace fbh {

/// Parameters of the Fock-Bargmann-Hartogs domain
///   D_{n,m}(mu) = { (z,w) in C^n x C^m : ||w||^2 < exp(-mu ||z||^2) }
/// together with the weight power alpha of the weight (-rho)^alpha.
struct DomainParams {
    int n = 1;           // base dimension
    int m = 1;           // fiber dimension
    double mu = 1.0;     // Hartogs exponent, > 0
    double alpha = 0.0;  // weight power, > -1

    void validate() const;
};

/// A point (z, w) in C^n x C^m.
struct PointPair {
    cvec z;
    cvec w;
};

/// Defining function rho(z,w) = ||w||^2 - exp(-mu ||z||^2); negative inside D.
double rho(const PointPair& point, const DomainParams& params);

/// Radius of the fiber ball over z: exp(-mu ||z||^2 / 2).
double fiber_radius(std::span<const complex> z, const DomainParams& params);

/// C_fiber(m, alpha) = pi^m Gamma(alpha+1)/Gamma(alpha+m+1), the integral of
/// (1 - ||tau||^2)^alpha over the unit ball of C^m. The full fiber integral of
/// (-rho)^alpha at base point z is C_fiber * exp(-mu (alpha+m) ||z||^2).
double fiber_weight_integral(int m, double alpha);

/// Strict interior membership; points within 1e-14*(1+||w||^2) of the boundary
/// count as boundary and are rejected.
bool strictly_inside(const PointPair& point, const DomainParams& params);

}  // namespace fbh

#endif
