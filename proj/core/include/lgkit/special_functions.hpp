#pragma once

#include <complex>

namespace lgkit::specialfn {

using Complex = std::complex<double>;

/// Default relative tolerance for polynomial identities at the index ranges
/// this library works with (degrees up to ~20 in double precision).
inline constexpr double kPolyIdentityRelTol = 1e-10;

/// Degree/order pair for an associated Laguerre polynomial L_degree^order.
/// Both must be non-negative here; negative superscripts never arise because
/// the bivariate-Hermite link is always applied with the smaller index first.
struct PolyIndex {
    int degree = 0;
    int order = 0;

    bool valid() const { return degree >= 0 && order >= 0; }
};

/// ln(k!), accurate to >= 12 significant digits for k <= 200.
double log_factorial(int k);

/// k! through the log-space route. Exact for k <= 20, overflow-safe to ~170.
double factorial(int k);

/// Associated Laguerre polynomial L_n^k(x) by the forward three-term
/// recurrence in the degree.
double laguerre(int n, int k, double x);
double laguerre(const PolyIndex& idx, double x);

/// Physicists' Hermite polynomial H_m(x), recurrence H_{m+1} = 2x H_m - 2m H_{m-1}.
double hermite(int m, double x);

/// Two-variable Hermite polynomial H_{m,n}(x,y), evaluated by its explicit
/// closed expansion
///   H_{m,n}(x,y) = sum_{k=0}^{min(m,n)} (-1)^k m! n! x^{m-k} y^{n-k} / (k!(m-k)!(n-k)!).
/// Factorial ratios are carried in log space.
Complex hermite2v(int m, int n, Complex x, Complex y);

}  // namespace lgkit::specialfn
