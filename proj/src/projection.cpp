#include "fbh/projection.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fbh/gauss.hpp"

namespace fbh {

namespace {

// Tensor-rule evaluation of (P_D f)(query) for n = m = 1. The N-point
// fiber-phase rule aliases the kernel modes u^k with N | k, and at the nodes
// |u| <= r = sqrt(X_q x_k) e^{-mu (|z_q| - |z_s|)^2 / 2} with X the normalized
// squared fiber coordinate ||w||^2 e^{mu ||z||^2}. The aliased mass is
// ~ r^N (1-r)^{-g}, so the phase count is chosen per (base, fiber) node pair;
// only nodes close to a near-edge query need a fine phase grid.
complex fbh_project_tensor_eval(const PointPair& query, const DomainFn& f,
                                const DomainParams& params,
                                const QuadratureSpec& spec) {
    const double mu = params.mu;
    const double alpha = params.alpha;
    const double t_max = 50.0 / (mu * (alpha + 1.0));
    const GaussRule base_radial = gauss_legendre(spec.radial_nodes, 0.0, t_max);
    const GaussRule fiber_radial = gauss_jacobi01(spec.jacobi_nodes, alpha);
    // base-phase modes scale with mu (alpha + m) |z|^2
    const int ntheta =
        spec.angular_nodes +
        static_cast<int>(std::ceil(mu * (alpha + params.m) * norm_sq(query.z))) + 8;
    const int nphi_base =
        spec.fiber_angular_nodes > 0 ? spec.fiber_angular_nodes : spec.angular_nodes;
    const double dtheta = 2.0 * kPi / ntheta;

    const double x_q =
        std::min(norm_sq(query.w) * std::exp(mu * norm_sq(query.z)), 1.0);
    const double rz_q = std::sqrt(norm_sq(query.z));
    const double g = alpha + params.m + params.n + 1.0;
    const double log_tol = std::log(1e-9);
    const auto phase_count = [&](double t, double x_node) {
        const double rz = std::sqrt(t);
        const double gap = rz_q - rz;
        const double r = std::min(std::sqrt(x_q * x_node) *
                                      std::exp(-0.5 * mu * gap * gap),
                                  0.99995);
        if (r <= 0.0) return nphi_base;
        const double need =
            (log_tol + g * std::log1p(-r)) / std::log(r);
        int nphi = nphi_base;
        while (nphi < 8192 && nphi < need) nphi *= 2;
        return nphi;
    };

    const KernelClosedForm kernel(params);
    // unit roots e^{i phi_l} for every reachable phase count (filled before
    // the parallel loop, so lookups are read-only)
    std::map<int, std::vector<complex>> roots;
    for (int n = nphi_base;; n *= 2) {
        std::vector<complex> tab(n);
        for (int l = 0; l < n; ++l) tab[l] = std::polar(1.0, 2.0 * kPi * l / n);
        roots.emplace(n, std::move(tab));
        if (n >= 8192) break;
    }
    const auto root_table = [&](int n) -> const std::vector<complex>& {
        return roots.at(n);
    };

    std::vector<complex> partial(base_radial.size());
    detail::parallel_for(base_radial.size(), spec.threads, [&](std::size_t i) {
        const double t = base_radial.nodes[i];
        const double rz = std::sqrt(t);
        const double fiber_sq = std::exp(-mu * t);  // squared fiber radius
        std::vector<int> nphi(fiber_radial.size());
        for (std::size_t k = 0; k < fiber_radial.size(); ++k)
            nphi[k] = phase_count(t, fiber_radial.nodes[k]);
        complex row = 0.0;
        PointPair pt{cvec(1), cvec(1)};
        for (int j = 0; j < ntheta; ++j) {
            const double theta = dtheta * j;
            pt.z[0] = complex{rz * std::cos(theta), rz * std::sin(theta)};
            const complex zs = complex_pairing(query.z, pt.z);
            const complex pref = kernel.base_factor(zs);
            const complex e_zs = std::exp(mu * zs);
            for (std::size_t k = 0; k < fiber_radial.size(); ++k) {
                const double rw = std::sqrt(fiber_sq * fiber_radial.nodes[k]);
                const std::vector<complex>& tab = root_table(nphi[k]);
                // u = e^{mu <x,s>} y conj(w_s) with w_s = rw e^{i phi}
                const complex c = e_zs * query.w[0] * rw;
                complex phase_sum = 0.0;
                for (int l = 0; l < nphi[k]; ++l) {
                    pt.w[0] = rw * tab[l];
                    phase_sum += kernel.fiber_sum(c * std::conj(tab[l])) * f(pt);
                }
                row += fiber_radial.weights[k] * (2.0 * kPi / nphi[k]) * pref *
                       phase_sum;
            }
        }
        partial[i] = base_radial.weights[i] * std::exp(-mu * (alpha + 1.0) * t) * row;
    });
    complex total = 0.0;
    for (const complex& v : partial) total += v;
    return total * 0.25 * dtheta;
}

}  // namespace

ProjectedFockFunction fock_project(ComplexFn f, int n, const FockWeight& weight,
                                   const QuadratureSpec& spec) {
    weight.validate();
    spec.validate();
    return ProjectedFockFunction{[f = std::move(f), n, weight, spec](const cvec& x) {
        return integrate_fock(
                   [&](const cvec& y) { return fock_kernel(x, y, weight) * f(y); }, n,
                   weight, spec)
            .value;
    }};
}

ProjectedDomainFunction fbh_project(DomainFn f, const DomainParams& params,
                                    const QuadratureSpec& spec,
                                    const SeriesControl& ctl) {
    params.validate();
    spec.validate();
    ctl.validate();
    return ProjectedDomainFunction{
        [f = std::move(f), params, spec](const PointPair& query) {
            if (spec.engine == Engine::TensorGauss)
                return fbh_project_tensor_eval(query, f, params, spec);
            const KernelClosedForm kernel(params);
            return integrate_fbh(
                       [&](const PointPair& sample) {
                           return kernel.eval(query, sample) * f(sample);
                       },
                       params, spec)
                .value;
        }};
}

NormIdentityCheck cylinder_norm_identity(const ComplexFn& f, double p,
                                         const DomainParams& params,
                                         const QuadratureSpec& spec) {
    if (!(p >= 1.0)) throw std::invalid_argument("cylinder_norm_identity: p must be >= 1");
    const McEstimate lhs = integrate_fbh(
        [&](const PointPair& pt) { return complex{std::pow(std::abs(f(pt.z)), p), 0.0}; },
        params, spec);
    FockWeight reduced{params.mu * (params.alpha + params.m)};
    const McEstimate base = integrate_fock(
        [&](const cvec& z) { return complex{std::pow(std::abs(f(z)), p), 0.0}; },
        params.n, reduced, spec);
    const double c_fiber = fiber_weight_integral(params.m, params.alpha);
    const double rhs = c_fiber * base.value.real();
    return NormIdentityCheck{lhs.value.real(), rhs,
                             std::abs(lhs.value.real() - rhs) / std::abs(rhs),
                             lhs.std_error, c_fiber * base.std_error};
}

CylinderProjectionCheck cylinder_projection_identity(const ComplexFn& f,
                                                     const DomainParams& params,
                                                     const QuadratureSpec& spec,
                                                     const std::vector<cvec>& queries) {
    const ProjectedDomainFunction proj_d =
        fbh_project([f](const PointPair& pt) { return f(pt.z); }, params, spec);
    FockWeight reduced{params.mu * (params.alpha + params.m)};
    const ProjectedFockFunction proj_fock = fock_project(f, params.n, reduced, spec);

    CylinderProjectionCheck out;
    out.lhs.reserve(queries.size());
    out.rhs.reserve(queries.size());
    for (const cvec& x : queries) {
        out.lhs.push_back(proj_d.eval(PointPair{x, cvec(params.m, complex{0.0, 0.0})}));
        out.rhs.push_back(proj_fock.eval(x));
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < queries.size(); ++i) {
        num += (std::conj(out.rhs[i]) * out.lhs[i]).real();
        den += std::norm(out.rhs[i]);
    }
    out.c_eff = den > 0.0 ? num / den : 0.0;
    return out;
}

SubmeanCheck submean_lower_bound_check(const ComplexFn& f, double p,
                                       const DomainParams& params,
                                       const QuadratureSpec& inner,
                                       const QuadratureSpec& outer) {
    if (!(p >= 1.0))
        throw std::invalid_argument("submean_lower_bound_check: p must be >= 1");
    const ProjectedDomainFunction proj =
        fbh_project([f](const PointPair& pt) { return f(pt.z); }, params, inner);

    const McEstimate full = integrate_fbh(
        [&](const PointPair& pt) {
            return complex{std::pow(std::abs(proj.eval(pt)), p), 0.0};
        },
        params, outer);

    FockWeight reduced{params.mu * (params.alpha + params.m)};
    const McEstimate slice = integrate_fock(
        [&](const cvec& z) {
            const complex v = proj.eval(PointPair{z, cvec(params.m, complex{0.0, 0.0})});
            return complex{std::pow(std::abs(v), p), 0.0};
        },
        params.n, reduced, outer);
    const double c_fiber = fiber_weight_integral(params.m, params.alpha);

    SubmeanCheck out;
    out.full_norm_p = full.value.real();
    out.slice_bound_p = c_fiber * slice.value.real();
    out.full_err = full.std_error;
    out.slice_err = c_fiber * slice.std_error;
    // 1e-4 covers the deterministic bias of the inner projection rule
    const double rel_err =
        (out.full_err + out.slice_err) / std::abs(out.slice_bound_p) + 1e-4;
    out.ok = out.full_norm_p >= out.slice_bound_p * (1.0 - 3.0 * rel_err);
    return out;
}

}  // namespace fbh
