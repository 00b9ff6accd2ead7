#ifndef FBH_LP_LAB_HPP
#define FBH_LP_LAB_HPP

#include <optional>

#include "fbh/projection.hpp"

namespace fbh {

/// Witness family member f(y) = exp(-gamma ||y - center||^2).
struct GaussianBump {
    double gamma = 1.0;
    cvec center;

    int dim() const { return static_cast<int>(center.size()); }
    ComplexFn as_function() const;
    void validate() const;
};

/// A exp(sum_i lambda_i x_i + kappa): the closed-form image of a Gaussian
/// bump under the Fock projection.
struct ExpLinearForm {
    double amplitude = 1.0;
    cvec lambda;
    double kappa = 0.0;

    int dim() const { return static_cast<int>(lambda.size()); }
    complex eval(const cvec& x) const;
    ComplexFn as_function() const;
};

/// Closed form of P_{C^n, eta_beta} applied to a bump:
///   A = (beta/(gamma+beta))^n, lambda_i = beta gamma conj(a_i)/(gamma+beta),
///   kappa = -beta gamma ||a||^2 / (gamma+beta).
ExpLinearForm gaussian_calculus_project(const GaussianBump& bump,
                                        const FockWeight& weight);

/// ||A e^{lambda x + kappa}||_{p,eta_beta}^p =
///   A^p e^{p kappa} (pi/beta)^n e^{p^2 ||lambda||^2/(4 beta)}.
double lp_norm_pow(const ExpLinearForm& form, double p, const FockWeight& weight);

/// ||e^{-gamma||y-a||^2}||_{p,eta_beta}^p =
///   (pi/(p gamma + beta))^n e^{-p gamma beta ||a||^2/(p gamma + beta)}.
double lp_norm_pow(const GaussianBump& bump, double p, const FockWeight& weight);

/// Quadrature versions of the two norms, importance-shifted to where the
/// integrand is concentrated.
McEstimate lp_norm_pow_quadrature(const ExpLinearForm& form, double p,
                                  const FockWeight& weight, const QuadratureSpec& spec);
McEstimate lp_norm_pow_quadrature(const GaussianBump& bump, double p,
                                  const FockWeight& weight, const QuadratureSpec& spec);

/// d(log ratio^p)/d||a||^2 for the bump family at width gamma:
///   beta [p^2 g^2/(4(g+b)^2) - p g/(g+b)] + p g b/(p g + b).
double witness_exponent_rate(double p, double gamma, double beta);

struct RatioReport {
    double p = 0;
    double gamma = 0;
    double center_norm = 0;  // ||a||
    double ratio_analytic = 0;
    double exponent_rate = 0;
    // cross-check block, evaluated at the quadrature-friendly width
    // gamma_quad = min(gamma, cap): closed form, Monte-Carlo estimate, and
    // the D-side ratio ||P_D F||_p / ||F||_p for the lifted cylinder function
    double gamma_quad = 0;
    std::optional<double> ratio_analytic_quad;
    std::optional<double> ratio_quadrature;
    std::optional<double> std_error;
    std::optional<double> dside_ratio;
    std::optional<double> dside_std_error;
};

/// Closed-form ratio ||P f||_p / ||f||_p for one bump.
RatioReport lp_ratio(const GaussianBump& bump, double p, const FockWeight& weight);

struct WitnessTuning {
    double gamma_star = 0;
    double rate = 0;
    bool positive = false;  // a positive growth rate was found on the grid
};

/// Maximize the exponent rate over gamma in [1e-3, 1e4] (log grid plus
/// golden-section refinement). For p != 2 this finds a blowup witness; for
/// p = 2 it certifies that no positive rate exists on the grid.
WitnessTuning tune_witness(double p, const FockWeight& weight);

struct LpExperimentOptions {
    double quadrature_center_cap = 4.0;  // quadrature cross-checks for ||a|| <= cap
    double quadrature_gamma_cap = 4.0;   // cross-check width: min(gamma*, cap)
    double dside_center_cap = 2.0;       // D-side ratios for ||a|| <= cap
    bool with_dside = false;
    QuadratureSpec dside_inner;  // projection quadrature
    QuadratureSpec dside_outer;  // norm quadrature
};

/// Lifts tuned bumps to cylinder functions on D and tabulates analytic and
/// quadrature L^p ratios over the center schedule.
std::vector<RatioReport> fbh_lp_experiment(double p, const DomainParams& params,
                                           const QuadratureSpec& spec,
                                           const std::vector<double>& centers,
                                           const LpExperimentOptions& options = {});

}  // namespace fbh

#endif
