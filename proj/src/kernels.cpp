#include "fbh/kernels.hpp"

#include <cmath>
#include <functional>

namespace fbh {

namespace {

// Kahan-compensated complex accumulator.
struct CompensatedSum {
    complex sum{0.0, 0.0};
    complex comp{0.0, 0.0};
    void add(const complex& v) {
        const complex y = v - comp;
        const complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

void for_each_multi_index(int dim, int cap,
                          const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur(dim, 0);
    std::function<void(int, int)> rec = [&](int pos, int budget) {
        if (pos == dim) {
            visit(cur);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            cur[pos] = v;
            rec(pos + 1, budget - v);
        }
        cur[pos] = 0;
    };
    rec(0, cap);
}

}  // namespace

double dirichlet_simplex_integral(const std::vector<double>& q, double alpha) {
    if (q.empty()) throw std::invalid_argument("dirichlet_simplex_integral: empty q");
    if (!(alpha > -1.0))
        throw std::domain_error("dirichlet_simplex_integral: alpha must be > -1");
    double log_num = log_gamma(alpha + 1.0);
    double order = 0.0;
    for (double qi : q) {
        if (!(qi > -1.0))
            throw std::domain_error("dirichlet_simplex_integral: q_i must be > -1");
        log_num += log_gamma(qi + 1.0);
        order += qi;
    }
    const double m = static_cast<double>(q.size());
    return std::exp(log_num - log_gamma(alpha + order + m + 1.0));
}

double monomial_norm_sq(const MultiIndex& p, const MultiIndex& q,
                        const DomainParams& params) {
    params.validate();
    if (static_cast<int>(p.size()) != params.n || static_cast<int>(q.size()) != params.m)
        throw std::invalid_argument("monomial_norm_sq: multi-index dimension mismatch");
    double log_val = (params.n + params.m) * std::log(kPi);
    for (int pi : p.entries) log_val += log_gamma(pi + 1.0);
    for (int qi : q.entries) log_val += log_gamma(qi + 1.0);
    log_val += log_gamma(params.alpha + 1.0);
    log_val -= log_gamma(params.alpha + params.m + 1.0 + q.order());
    log_val -= (p.order() + params.n) *
               std::log(params.mu * (params.alpha + params.m + q.order()));
    return std::exp(log_val);
}

complex fock_kernel(std::span<const complex> x, std::span<const complex> y,
                    const FockWeight& weight) {
    weight.validate();
    if (x.size() != y.size()) throw std::invalid_argument("fock_kernel: length mismatch");
    const double n = static_cast<double>(x.size());
    return std::pow(weight.beta / kPi, n) *
           std::exp(weight.beta * complex_pairing(x, y));
}

KernelValue fbh_kernel_series(const PointPair& a, const PointPair& b,
                              const DomainParams& params, const SeriesControl& ctl) {
    params.validate();
    ctl.validate();
    if (!strictly_inside(a, params) || !strictly_inside(b, params))
        throw std::domain_error("fbh_kernel_series: arguments must lie strictly inside D");

    const double am = params.alpha + params.m;
    const int n = params.n;
    const complex zs = complex_pairing(a.z, b.z);
    const complex yt = complex_pairing(a.w, b.w);
    const complex u = std::exp(params.mu * zs) * yt;
    const double abs_u = std::abs(u);

    // c_0 = Gamma(a+m+1)(a+m)^n / Gamma(a+1); later coefficients by recurrence.
    complex term = std::exp(log_gamma(am + 1.0) - log_gamma(params.alpha + 1.0)) *
                   std::pow(am, n);
    CompensatedSum acc;
    int terms = 0;
    double tail = 0.0;
    bool converged = false;
    for (int k = 0; k < ctl.max_terms; ++k) {
        acc.add(term);
        terms = k + 1;
        // |term_{k+1}| / |term_k| = r_k, decreasing in k, so a geometric
        // majorant of the tail once r_k < 1.
        const double ratio = (am + k + 1.0) / (k + 1.0) *
                             std::pow((am + k + 1.0) / (am + k), n);
        const double r = abs_u * ratio;
        if (r < 1.0) {
            tail = std::abs(term) * r / (1.0 - r);
            if (tail <= ctl.rel_tol * std::abs(acc.sum)) {
                converged = true;
                break;
            }
        }
        term *= ratio * u;
    }
    if (!converged)
        throw SeriesNonConvergence("fbh_kernel_series: no convergence within max_terms");

    const complex prefactor = std::pow(params.mu, n) /
                              std::pow(kPi, params.n + params.m) *
                              std::exp(params.mu * am * zs);
    return KernelValue{prefactor * acc.sum, terms, std::abs(prefactor) * tail};
}

KernelClosedForm::KernelClosedForm(const DomainParams& params) {
    params.validate();
    mu_ = params.mu;
    am_ = params.alpha + params.m;
    const int n = params.n;
    scale_ = std::pow(params.mu, n) / std::pow(kPi, params.n + params.m);

    // Expand y^n over the basis P_j(y) = (y+1)...(y+j) by peeling leading
    // coefficients; with y = a+m+k this turns Gamma(y+1) P_j(y) into
    // Gamma(y+j+1) and each k-sum into a binomial series.
    std::vector<double> poly(n + 1, 0.0);
    poly[n] = 1.0;
    std::vector<double> d(n + 1, 0.0);
    for (int j = n; j >= 0; --j) {
        d[j] = poly[j];
        if (j == 0 || d[j] == 0.0) continue;
        std::vector<double> pj{1.0};  // coefficients of P_j, ascending
        for (int i = 1; i <= j; ++i) {
            pj.push_back(0.0);
            for (int c = static_cast<int>(pj.size()) - 1; c >= 1; --c)
                pj[c] = pj[c] * i + pj[c - 1];
            pj[0] *= i;
        }
        for (int c = 0; c <= j; ++c) poly[c] -= d[j] * pj[c];
    }
    coeff_.resize(n + 1);
    for (int j = 0; j <= n; ++j)
        coeff_[j] = d[j] == 0.0
                        ? 0.0
                        : d[j] * std::exp(log_gamma(am_ + 1.0 + j) -
                                          log_gamma(params.alpha + 1.0));
}

complex KernelClosedForm::fiber_sum(const complex& u) const {
    // Re(1 - u) > 0 strictly inside D, so the principal branch is safe.
    const complex w = complex{1.0, 0.0} - u;
    const complex invw = 1.0 / w;
    complex horner{coeff_.back(), 0.0};
    for (int j = static_cast<int>(coeff_.size()) - 2; j >= 0; --j)
        horner = horner * invw + coeff_[j];
    return std::exp(-(am_ + 1.0) * std::log(w)) * horner;
}

complex KernelClosedForm::eval(const PointPair& a, const PointPair& b) const {
    const complex zs = complex_pairing(a.z, b.z);
    const complex u = std::exp(mu_ * zs) * complex_pairing(a.w, b.w);
    return base_factor(zs) * fiber_sum(u);
}

complex fbh_kernel_closed(const PointPair& a, const PointPair& b,
                          const DomainParams& params) {
    params.validate();
    if (!strictly_inside(a, params) || !strictly_inside(b, params))
        throw std::domain_error("fbh_kernel_closed: arguments must lie strictly inside D");
    return KernelClosedForm(params).eval(a, b);
}

complex fbh_kernel_basis_oracle(const PointPair& a, const PointPair& b,
                                const DomainParams& params, int degree_cap) {
    params.validate();
    if (degree_cap < 0)
        throw std::invalid_argument("fbh_kernel_basis_oracle: degree_cap must be >= 0");
    if (!strictly_inside(a, params) || !strictly_inside(b, params))
        throw std::domain_error("fbh_kernel_basis_oracle: arguments must lie inside D");

    cvec base(params.n), fiber(params.m);
    for (int i = 0; i < params.n; ++i) base[i] = a.z[i] * std::conj(b.z[i]);
    for (int i = 0; i < params.m; ++i) fiber[i] = a.w[i] * std::conj(b.w[i]);

    CompensatedSum acc;
    for_each_multi_index(params.n, degree_cap, [&](const std::vector<int>& p) {
        complex zp = 1.0;
        for (int i = 0; i < params.n; ++i)
            for (int j = 0; j < p[i]; ++j) zp *= base[i];
        const MultiIndex pi{std::vector<int>(p)};
        for_each_multi_index(params.m, degree_cap, [&](const std::vector<int>& q) {
            complex wq = 1.0;
            for (int i = 0; i < params.m; ++i)
                for (int j = 0; j < q[i]; ++j) wq *= fiber[i];
            const MultiIndex qi{std::vector<int>(q)};
            acc.add(zp * wq / monomial_norm_sq(pi, qi, params));
        });
    });
    return acc.sum;
}

RestrictionCheck restriction_identity_check(std::span<const complex> x,
                                            std::span<const complex> s,
                                            const DomainParams& params,
                                            const SeriesControl& ctl) {
    PointPair a{cvec(x.begin(), x.end()), cvec(params.m, complex{0.0, 0.0})};
    PointPair b{cvec(s.begin(), s.end()), cvec(params.m, complex{0.0, 0.0})};
    const complex lhs = fbh_kernel_series(a, b, params, ctl).value;

    const double factor = std::exp(log_gamma(params.alpha + params.m + 1.0) -
                                   params.m * std::log(kPi) -
                                   log_gamma(params.alpha + 1.0));
    FockWeight reduced{params.mu * (params.alpha + params.m)};
    const complex rhs = factor * fock_kernel(x, s, reduced);
    return RestrictionCheck{lhs, rhs, std::abs(lhs - rhs) / std::abs(rhs)};
}

}  // namespace fbh
