#ifndef FBH_KERNELS_HPP
#define FBH_KERNELS_HPP

#include <stdexcept>

#include "fbh/core_math.hpp"
#include "fbh/domain.hpp"

namespace fbh {

/// Gaussian weight eta_beta(z) = exp(-beta ||z||^2) on C^n.
struct FockWeight {
    double beta = 1.0;
    void validate() const {
        if (!(beta > 0.0)) throw std::invalid_argument("FockWeight: beta must be > 0");
    }
};

/// Truncation control for the kernel series.
struct SeriesControl {
    double rel_tol = 1e-12;
    int max_terms = 100000;
    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0))
            throw std::invalid_argument("SeriesControl: rel_tol must be in (0,1)");
        if (max_terms < 1)
            throw std::invalid_argument("SeriesControl: max_terms must be >= 1");
    }
};

struct KernelValue {
    complex value;
    int terms = 0;          // number of series terms summed
    double tail_bound = 0;  // certified bound on the truncated tail
};

class SeriesNonConvergence : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dirichlet integral over the unit simplex in R^m (m = q.size()):
///   integral of (1 - sum x_i)^alpha prod x_i^{q_i}  =
///   prod Gamma(q_i+1) Gamma(alpha+1) / Gamma(alpha + |q| + m + 1).
/// Exponents q_i may be real, each > -1.
double dirichlet_simplex_integral(const std::vector<double>& q, double alpha);

/// Squared weighted L^2 norm of the monomial z^p w^q on D_{n,m}(mu):
///   pi^{n+m} prod Gamma(p_i+1) prod Gamma(q_i+1) Gamma(alpha+1)
///   / ( Gamma(alpha+m+1+|q|) [mu(alpha+m+|q|)]^{|p|+n} ).
double monomial_norm_sq(const MultiIndex& p, const MultiIndex& q,
                        const DomainParams& params);

/// Fock kernel (beta/pi)^n exp(beta <x,y>).
complex fock_kernel(std::span<const complex> x, std::span<const complex> y,
                    const FockWeight& weight);

/// Weighted Bergman kernel of D_{n,m}(mu) by adaptive summation of
///   (mu^n/pi^{n+m}) sum_k [Gamma(a+m+k+1)(a+m+k)^n / (Gamma(a+1) k!)]
///                       e^{mu(a+m+k)<x,s>} <y,t>^k,
/// factorized as e^{mu(a+m)<x,s>} sum_k c_k u^k with u = e^{mu<x,s>}<y,t>.
/// Both arguments must lie strictly inside D.
KernelValue fbh_kernel_series(const PointPair& a, const PointPair& b,
                              const DomainParams& params, const SeriesControl& ctl);

/// Fast exact evaluator: the series summed in closed form,
///   sum_j d_j Gamma(a+j+1)/Gamma(alpha+1) (1-u)^{-(a+j+1)},  a = alpha+m,
/// where the d_j expand (a+k)^n over the rising factorials (a+k+1)...(a+k+j).
/// Used by the projection quadratures, where per-node series summation is too
/// slow near the fiber edge; cross-validated against fbh_kernel_series.
complex fbh_kernel_closed(const PointPair& a, const PointPair& b,
                          const DomainParams& params);

/// Closed-form kernel with the coefficient table precomputed once, for inner
/// quadrature loops. eval() skips the per-call domain checks; the caller must
/// supply points strictly inside D.
class KernelClosedForm {
  public:
    explicit KernelClosedForm(const DomainParams& params);
    complex eval(const PointPair& a, const PointPair& b) const;

    /// K(a,b) = base_factor(<x,s>) * fiber_sum(e^{mu <x,s>} <y,t>); the split
    /// lets quadrature loops hoist the base-dependent exponentials out of the
    /// fiber-phase loop.
    complex base_factor(const complex& zs) const {
        return scale_ * std::exp(mu_ * am_ * zs);
    }
    complex fiber_sum(const complex& u) const;
    double mu() const { return mu_; }

  private:
    double mu_;
    double am_;     // alpha + m
    double scale_;  // mu^n / pi^{n+m}
    std::vector<double> coeff_;  // d_j Gamma(am+1+j) / Gamma(alpha+1)
};

/// Independent oracle: the orthonormal-basis double sum
///   sum_{|p|<=cap, |q|<=cap} x^p y^q conj(s^p t^q) / ||z^p w^q||^2.
/// Shares only monomial_norm_sq with the series path.
complex fbh_kernel_basis_oracle(const PointPair& a, const PointPair& b,
                                const DomainParams& params, int degree_cap);

struct RestrictionCheck {
    complex lhs;      // series kernel at ((x,0),(s,0))
    complex rhs;      // Gamma(a+m+1)/(pi^m Gamma(a+1)) * Fock kernel, beta = mu(a+m)
    double rel_diff;  // |lhs - rhs| / |rhs|
};

/// Base-slice restriction identity:
///   K_D((x,0),(s,0)) = [Gamma(a+m+1)/(pi^m Gamma(a+1))] K_{C^n, eta_{mu(a+m)}}(x,s).
RestrictionCheck restriction_identity_check(std::span<const complex> x,
                                            std::span<const complex> s,
                                            const DomainParams& params,
                                            const SeriesControl& ctl);

}  // namespace fbh

#endif
