#include "lgkit/special_functions.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lgkit::specialfn {

double log_factorial(int k) {
    if (k < 0) throw std::invalid_argument("log_factorial: negative argument");
    return std::lgamma(static_cast<double>(k) + 1.0);
}

double factorial(int k) {
    return std::exp(log_factorial(k));
}

double laguerre(int n, int k, double x) {
    if (n < 0 || k < 0) throw std::invalid_argument("laguerre: negative index");
    if (n == 0) return 1.0;
    double lm1 = 1.0;            // L_0^k
    double l = 1.0 + k - x;      // L_1^k
    for (int j = 1; j < n; ++j) {
        const double lp1 = ((2.0 * j + k + 1.0 - x) * l - (j + k) * lm1) / (j + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

double laguerre(const PolyIndex& idx, double x) {
    return laguerre(idx.degree, idx.order, x);
}

double hermite(int m, double x) {
    if (m < 0) throw std::invalid_argument("hermite: negative degree");
    if (m == 0) return 1.0;
    double hm1 = 1.0;       // H_0
    double h = 2.0 * x;     // H_1
    for (int j = 1; j < m; ++j) {
        const double hp1 = 2.0 * x * h - 2.0 * j * hm1;
        hm1 = h;
        h = hp1;
    }
    return h;
}

Complex hermite2v(int m, int n, Complex x, Complex y) {
    if (m < 0 || n < 0) throw std::invalid_argument("hermite2v: negative degree");
    const int kmax = std::min(m, n);

    std::vector<Complex> xpow(m + 1), ypow(n + 1);
    xpow[0] = 1.0;
    for (int j = 1; j <= m; ++j) xpow[j] = xpow[j - 1] * x;
    ypow[0] = 1.0;
    for (int j = 1; j <= n; ++j) ypow[j] = ypow[j - 1] * y;

    const double lf_m = log_factorial(m);
    const double lf_n = log_factorial(n);
    Complex sum = 0.0;
    for (int k = 0; k <= kmax; ++k) {
        const double coeff = std::exp(lf_m + lf_n - log_factorial(k) -
                                      log_factorial(m - k) - log_factorial(n - k));
        const double sign = (k & 1) ? -1.0 : 1.0;
        sum += sign * coeff * xpow[m - k] * ypow[n - k];
    }
    return sum;
}

}  // namespace lgkit::specialfn
