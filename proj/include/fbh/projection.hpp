#ifndef FBH_PROJECTION_HPP
#define FBH_PROJECTION_HPP

#include "fbh/quadrature.hpp"

namespace fbh {

/// Lazily evaluated projection: each call runs one quadrature.
struct ProjectedFockFunction {
    ComplexFn eval;
};

struct ProjectedDomainFunction {
    DomainFn eval;
};

/// Weighted Fock projection P_{C^n, eta_beta} f(x) =
///   integral of f(y) K_{C^n,eta_beta}(x,y) eta_beta(y) dV(y).
ProjectedFockFunction fock_project(ComplexFn f, int n, const FockWeight& weight,
                                   const QuadratureSpec& spec);

/// Weighted Bergman projection on D_{n,m}(mu) with weight (-rho)^alpha.
ProjectedDomainFunction fbh_project(DomainFn f, const DomainParams& params,
                                    const QuadratureSpec& spec,
                                    const SeriesControl& ctl = {});

struct NormIdentityCheck {
    double lhs = 0;       // ||F||_p^p over D, F(z,w) = f(z)
    double rhs = 0;       // C_fiber(m,alpha) ||f||_p^p under eta_{mu(alpha+m)}
    double rel_diff = 0;  // |lhs - rhs| / rhs
    double lhs_err = 0;   // quadrature standard errors
    double rhs_err = 0;
};

/// ||F||_{p,(-rho)^alpha}^p = C_fiber(m,alpha) ||f||_{p,eta_{mu(alpha+m)}}^p
/// for a cylinder function F(z,w) = f(z).
NormIdentityCheck cylinder_norm_identity(const ComplexFn& f, double p,
                                         const DomainParams& params,
                                         const QuadratureSpec& spec);

struct CylinderProjectionCheck {
    std::vector<complex> lhs;  // P_D F at (x_i, 0)
    std::vector<complex> rhs;  // P_{C^n, eta_{mu(alpha+m)}} f at x_i
    double c_eff = 0;          // least-squares scalar with lhs ~ c_eff * rhs
};

/// P_D F(x, 0) = c_eff * P_{C^n, eta_{mu(alpha+m)}} f(x) for cylinder F;
/// c_eff is measured across the query points (expected value: 1).
CylinderProjectionCheck cylinder_projection_identity(const ComplexFn& f,
                                                     const DomainParams& params,
                                                     const QuadratureSpec& spec,
                                                     const std::vector<cvec>& queries);

struct SubmeanCheck {
    double full_norm_p = 0;    // ||P_D F||_p^p over D
    double slice_bound_p = 0;  // C_fiber * integral of |P_D F(z,0)|^p e^{-mu(a+m)|z|^2}
    double full_err = 0;
    double slice_err = 0;
    bool ok = false;
};

/// Sub-mean-value lower bound: the full-domain L^p norm of the projected
/// cylinder function dominates the base-slice bound. `inner` drives the
/// projection quadrature, `outer` the norm quadratures.
SubmeanCheck submean_lower_bound_check(const ComplexFn& f, double p,
                                       const DomainParams& params,
                                       const QuadratureSpec& inner,
                                       const QuadratureSpec& outer);

}  // namespace fbh

#endif
