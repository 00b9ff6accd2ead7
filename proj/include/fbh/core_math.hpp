#ifndef FBH_CORE_MATH_HPP
#define FBH_CORE_MATH_HPP

#include <complex>
#include <span>
#include <vector>

namespace fbh {

using complex = std::complex<double>;
using cvec = std::vector<complex>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Nonnegative integer multi-index p, indexing a monomial z^p = prod z_i^{p_i}.
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e);
    MultiIndex(std::initializer_list<int> e);

    int order() const;  // |p| = sum of entries
    std::size_t size() const { return entries.size(); }
    int operator[](std::size_t i) const { return entries[i]; }
};

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
/// Relative error below 1e-13 across [1e-3, 1e6].
double log_gamma(double x);

/// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), assembled in log space.
double beta_function(double a, double b);

/// Hermitian pairing <x,y> = sum_i x_i * conj(y_i)  (second slot conjugated).
complex complex_pairing(std::span<const complex> x, std::span<const complex> y);

/// ||x||^2 = <x,x>, guaranteed real nonnegative.
double norm_sq(std::span<const complex> x);

}  // namespace fbh

#endif
