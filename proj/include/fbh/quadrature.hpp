#ifndef FBH_QUADRATURE_HPP
#define FBH_QUADRATURE_HPP

#include <cstdint>
#include <functional>

#include "fbh/domain.hpp"
#include "fbh/kernels.hpp"
#include "fbh/rng.hpp"

namespace fbh {

enum class Engine { TensorGauss, MonteCarlo };

/// Engine selection and resolution for the integrators. TensorGauss is only
/// supported for n = 1 (Fock side) and n = m = 1 (domain side).
struct QuadratureSpec {
    Engine engine = Engine::MonteCarlo;
    std::size_t mc_samples = 100000;
    std::uint64_t seed = 20240915u;
    int radial_nodes = 64;
    int angular_nodes = 32;
    int jacobi_nodes = 48;
    int fiber_angular_nodes = 0;  // 0: follow angular_nodes
    int threads = 1;
    void validate() const;
};

struct McEstimate {
    complex value{0.0, 0.0};
    double std_error = 0.0;  // zero for tensor rules
    std::size_t samples = 0;
};

using ComplexFn = std::function<complex(const cvec&)>;
using DomainFn = std::function<complex(const PointPair&)>;

/// integral of f(z) e^{-beta ||z||^2} dV over C^n.
/// Monte-Carlo draws z from the complex Gaussian with parameter beta (shifted
/// to `center` when given, with the importance-weight correction), so the
/// weight is absorbed by the sampler. Tensor (n = 1): Gauss-Laguerre in the
/// radial direction (s = beta r^2), equally spaced angular nodes.
McEstimate integrate_fock(const ComplexFn& f, int n, const FockWeight& weight,
                          const QuadratureSpec& spec, const cvec& center = {});

/// One exact draw from the probability measure proportional to
/// (-rho)^alpha dV on D: z complex Gaussian with parameter mu(alpha+m),
/// fiber radius via ||w||^2 = R^2 X with X ~ Beta(m, alpha+1), direction
/// uniform on the unit sphere of C^m.
PointPair sample_fbh_weighted(const DomainParams& params, Xoshiro256pp& rng);

/// Total mass of (-rho)^alpha dV over D:
/// (pi/(mu(alpha+m)))^n * C_fiber(m, alpha). Averages of f over
/// sample_fbh_weighted draws times this constant estimate the integral below.
double fbh_mc_normalization(const DomainParams& params);

/// integral of f(z,w) (-rho(z,w))^alpha dV over D_{n,m}(mu).
/// Tensor (n = m = 1): Gauss-Legendre in t = |z|^2 on a truncated interval,
/// Gauss-Jacobi with weight (1-x)^alpha in the normalized fiber radius
/// x = e^{mu|z|^2} |w|^2, equally spaced nodes in both phases.
McEstimate integrate_fbh(const DomainFn& f, const DomainParams& params,
                         const QuadratureSpec& spec);

namespace detail {

inline constexpr std::size_t kMcChunk = 8192;

struct ChunkAccum {
    double sum_re = 0.0;
    double sum_im = 0.0;
    double sum_sq = 0.0;  // sum of |v|^2
};

/// Deterministic chunked Monte-Carlo mean: partial sums are a pure function
/// of (seed, chunk index); reduction is ordered, so the result does not
/// depend on the thread count.
McEstimate mc_mean(std::size_t samples, std::uint64_t seed, int threads,
                   const std::function<complex(Xoshiro256pp&)>& draw);

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace detail

}  // namespace fbh

#endif
