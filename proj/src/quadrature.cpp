#include "fbh/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fbh/gauss.hpp"

namespace fbh {

void QuadratureSpec::validate() const {
    if (mc_samples < 1)
        throw std::invalid_argument("QuadratureSpec: mc_samples must be >= 1");
    if (radial_nodes < 2 || angular_nodes < 2 || jacobi_nodes < 2)
        throw std::invalid_argument("QuadratureSpec: node counts must be >= 2");
    if (fiber_angular_nodes < 0)
        throw std::invalid_argument("QuadratureSpec: fiber_angular_nodes must be >= 0");
    if (threads < 1) throw std::invalid_argument("QuadratureSpec: threads must be >= 1");
}

namespace detail {

namespace {

struct KahanD {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const int nthreads = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(threads), count));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < count;
                 i += static_cast<std::size_t>(nthreads))
                body(i);
        });
    }
    for (auto& th : pool) th.join();
}

McEstimate mc_mean(std::size_t samples, std::uint64_t seed, int threads,
                   const std::function<complex(Xoshiro256pp&)>& draw) {
    const std::size_t nchunks = (samples + kMcChunk - 1) / kMcChunk;
    std::vector<ChunkAccum> parts(nchunks);
    parallel_for(nchunks, threads, [&](std::size_t c) {
        Xoshiro256pp rng = make_chunk_rng(seed, c);
        const std::size_t begin = c * kMcChunk;
        const std::size_t count = std::min(kMcChunk, samples - begin);
        KahanD sr, si, s2;
        for (std::size_t i = 0; i < count; ++i) {
            const complex v = draw(rng);
            sr.add(v.real());
            si.add(v.imag());
            s2.add(std::norm(v));
        }
        parts[c] = ChunkAccum{sr.sum, si.sum, s2.sum};
    });
    KahanD sr, si, s2;
    for (const ChunkAccum& p : parts) {
        sr.add(p.sum_re);
        si.add(p.sum_im);
        s2.add(p.sum_sq);
    }
    const double invn = 1.0 / static_cast<double>(samples);
    const complex mean{sr.sum * invn, si.sum * invn};
    const double var = std::max(0.0, s2.sum * invn - std::norm(mean));
    return McEstimate{mean, std::sqrt(var * invn), samples};
}

}  // namespace detail

namespace {

cvec draw_complex_gaussian(int n, double beta, Xoshiro256pp& rng) {
    cvec z(n);
    const double scale = 1.0 / std::sqrt(2.0 * beta);
    for (int i = 0; i < n; ++i)
        z[i] = complex{scale * rng.normal(), scale * rng.normal()};
    return z;
}

McEstimate integrate_fock_mc(const ComplexFn& f, int n, const FockWeight& weight,
                             const QuadratureSpec& spec, const cvec& center) {
    const double beta = weight.beta;
    const bool shifted = !center.empty();
    const double center_sq = shifted ? norm_sq(center) : 0.0;
    McEstimate est = detail::mc_mean(
        spec.mc_samples, spec.seed, spec.threads, [&](Xoshiro256pp& rng) -> complex {
            cvec y = draw_complex_gaussian(n, beta, rng);
            double corr = 1.0;
            if (shifted) {
                for (std::size_t i = 0; i < y.size(); ++i) y[i] += center[i];
                const double cross =
                    2.0 * complex_pairing(y, center).real() - center_sq;
                corr = std::exp(-beta * cross);
            }
            return f(y) * corr;
        });
    const double scale = std::pow(kPi / beta, n);
    est.value *= scale;
    est.std_error *= scale;
    return est;
}

McEstimate integrate_fock_tensor(const ComplexFn& f, const FockWeight& weight,
                                 const QuadratureSpec& spec) {
    const double beta = weight.beta;
    const GaussRule radial = gauss_laguerre(spec.radial_nodes);
    const int ntheta = spec.angular_nodes;
    const double dtheta = 2.0 * kPi / ntheta;

    std::vector<complex> partial(radial.size());
    detail::parallel_for(radial.size(), spec.threads, [&](std::size_t i) {
        const double r = std::sqrt(radial.nodes[i] / beta);
        complex row = 0.0;
        cvec y(1);
        for (int j = 0; j < ntheta; ++j) {
            const double theta = dtheta * j;
            y[0] = complex{r * std::cos(theta), r * std::sin(theta)};
            row += f(y);
        }
        partial[i] = radial.weights[i] * dtheta * row;
    });
    complex total = 0.0;
    for (const complex& v : partial) total += v;
    total /= 2.0 * beta;
    return McEstimate{total, 0.0, radial.size() * static_cast<std::size_t>(ntheta)};
}

McEstimate integrate_fbh_tensor(const DomainFn& f, const DomainParams& params,
                                const QuadratureSpec& spec) {
    const double mu = params.mu;
    const double alpha = params.alpha;
    // truncate the base where the residual Gaussian mass is negligible
    const double t_max = 50.0 / (mu * (alpha + 1.0));
    const GaussRule base_radial = gauss_legendre(spec.radial_nodes, 0.0, t_max);
    const GaussRule fiber_radial = gauss_jacobi01(spec.jacobi_nodes, alpha);
    const int ntheta = spec.angular_nodes;
    const int nphi =
        spec.fiber_angular_nodes > 0 ? spec.fiber_angular_nodes : spec.angular_nodes;
    const double dtheta = 2.0 * kPi / ntheta;
    const double dphi = 2.0 * kPi / nphi;

    std::vector<complex> partial(base_radial.size());
    detail::parallel_for(base_radial.size(), spec.threads, [&](std::size_t i) {
        const double t = base_radial.nodes[i];
        const double rz = std::sqrt(t);
        const double fiber_sq = std::exp(-mu * t);  // squared fiber radius
        complex row = 0.0;
        PointPair pt{cvec(1), cvec(1)};
        for (int j = 0; j < ntheta; ++j) {
            const double theta = dtheta * j;
            pt.z[0] = complex{rz * std::cos(theta), rz * std::sin(theta)};
            for (std::size_t k = 0; k < fiber_radial.size(); ++k) {
                const double rw = std::sqrt(fiber_sq * fiber_radial.nodes[k]);
                complex phase_sum = 0.0;
                for (int l = 0; l < nphi; ++l) {
                    const double phi = dphi * l;
                    pt.w[0] = complex{rw * std::cos(phi), rw * std::sin(phi)};
                    phase_sum += f(pt);
                }
                row += fiber_radial.weights[k] * phase_sum;
            }
        }
        partial[i] = base_radial.weights[i] * std::exp(-mu * (alpha + 1.0) * t) * row;
    });
    complex total = 0.0;
    for (const complex& v : partial) total += v;
    total *= 0.25 * dtheta * dphi;
    const std::size_t nodes = base_radial.size() * ntheta * fiber_radial.size() * nphi;
    return McEstimate{total, 0.0, nodes};
}

}  // namespace

McEstimate integrate_fock(const ComplexFn& f, int n, const FockWeight& weight,
                          const QuadratureSpec& spec, const cvec& center) {
    weight.validate();
    spec.validate();
    if (n < 1) throw std::invalid_argument("integrate_fock: n must be >= 1");
    if (!center.empty() && static_cast<int>(center.size()) != n)
        throw std::invalid_argument("integrate_fock: center dimension mismatch");
    if (spec.engine == Engine::TensorGauss) {
        if (n != 1)
            throw std::invalid_argument("integrate_fock: tensor engine requires n = 1");
        return integrate_fock_tensor(f, weight, spec);
    }
    return integrate_fock_mc(f, n, weight, spec, center);
}

PointPair sample_fbh_weighted(const DomainParams& params, Xoshiro256pp& rng) {
    const double beta0 = params.mu * (params.alpha + params.m);
    PointPair pt;
    pt.z = draw_complex_gaussian(params.n, beta0, rng);
    const double radius = fiber_radius(pt.z, params);
    const double x = rng.beta(static_cast<double>(params.m), params.alpha + 1.0);
    const double rw = radius * std::sqrt(x);
    // uniform direction on the unit sphere of C^m
    cvec dir(params.m);
    double dir_sq = 0.0;
    do {
        for (int i = 0; i < params.m; ++i)
            dir[i] = complex{rng.normal(), rng.normal()};
        dir_sq = norm_sq(dir);
    } while (dir_sq == 0.0);
    const double inv = rw / std::sqrt(dir_sq);
    pt.w.resize(params.m);
    for (int i = 0; i < params.m; ++i) pt.w[i] = dir[i] * inv;
    return pt;
}

double fbh_mc_normalization(const DomainParams& params) {
    const double beta0 = params.mu * (params.alpha + params.m);
    return std::pow(kPi / beta0, params.n) *
           fiber_weight_integral(params.m, params.alpha);
}

McEstimate integrate_fbh(const DomainFn& f, const DomainParams& params,
                         const QuadratureSpec& spec) {
    params.validate();
    spec.validate();
    if (spec.engine == Engine::TensorGauss) {
        if (params.n != 1 || params.m != 1)
            throw std::invalid_argument(
                "integrate_fbh: tensor engine requires n = m = 1");
        return integrate_fbh_tensor(f, params, spec);
    }
    const double scale = fbh_mc_normalization(params);
    McEstimate est = detail::mc_mean(
        spec.mc_samples, spec.seed, spec.threads,
        [&](Xoshiro256pp& rng) -> complex { return f(sample_fbh_weighted(params, rng)); });
    est.value *= scale;
    est.std_error *= scale;
    return est;
}

}  // namespace fbh
