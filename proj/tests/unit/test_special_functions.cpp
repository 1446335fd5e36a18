#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgkit/special_functions.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

using namespace lgkit::specialfn;
using Complex = std::complex<double>;

namespace {

// Independent oracle: ln(k!) as a running sum of logs.
double log_factorial_oracle(int k) {
    double sum = 0.0;
    for (int j = 2; j <= k; ++j) sum += std::log(static_cast<double>(j));
    return sum;
}

double binomial(int n, int k) {
    return std::exp(log_factorial_oracle(n) - log_factorial_oracle(k) -
                    log_factorial_oracle(n - k));
}

// Independent oracle: the explicit finite series
// L_n^k(x) = sum_j (-1)^j C(n+k, n-j) x^j / j!. Also reports the magnitude
// scale sum |term_j|, the denominator a relative comparison is meaningful
// against (near roots the value itself carries full cancellation).
double laguerre_series_oracle(int n, int k, double x, double* scale = nullptr) {
    double sum = 0.0, mag = 0.0;
    double xpow = 1.0;
    for (int j = 0; j <= n; ++j) {
        const double sign = (j & 1) ? -1.0 : 1.0;
        const double term = binomial(n + k, n - j) * xpow / std::exp(log_factorial_oracle(j));
        sum += sign * term;
        mag += std::abs(term);
        xpow *= x;
    }
    if (scale) *scale = mag;
    return sum;
}

// Independent oracle: H_m(x) = m! sum_j (-1)^j (2x)^{m-2j} / (j! (m-2j)!).
double hermite_series_oracle(int m, double x, double* scale = nullptr) {
    double sum = 0.0, mag = 0.0;
    for (int j = 0; 2 * j <= m; ++j) {
        const double sign = (j & 1) ? -1.0 : 1.0;
        const double term = std::pow(2.0 * std::abs(x), m - 2 * j) /
                            std::exp(log_factorial_oracle(j) + log_factorial_oracle(m - 2 * j));
        sum += sign * std::pow(2.0 * x, m - 2 * j) /
               std::exp(log_factorial_oracle(j) + log_factorial_oracle(m - 2 * j));
        mag += term;
    }
    const double mfact = std::exp(log_factorial_oracle(m));
    if (scale) *scale = mag * mfact;
    return sum * mfact;
}

// Magnitude scale of the bivariate Hermite expansion at |x|, |y|.
double hermite2v_scale(int m, int n, double ax, double ay) {
    double mag = 0.0;
    for (int k = 0; k <= std::min(m, n); ++k)
        mag += std::exp(log_factorial_oracle(m) + log_factorial_oracle(n) -
                        log_factorial_oracle(k) - log_factorial_oracle(m - k) -
                        log_factorial_oracle(n - k)) *
               std::pow(ax, m - k) * std::pow(ay, n - k);
    return mag;
}

}  // namespace

TEST_CASE("log_factorial matches the direct product oracle") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(4.787491742782046).epsilon(1e-12));
    for (int k = 0; k <= 200; ++k)
        CHECK(log_factorial(k) ==
              doctest::Approx(log_factorial_oracle(k)).epsilon(1e-12));
    CHECK_THROWS(log_factorial(-1));
}

TEST_CASE("laguerre recurrence agrees with the explicit series") {
    CHECK(laguerre(0, 3, 3.7) == 1.0);
    CHECK(laguerre(0, 0, -1.2) == 1.0);
    CHECK(laguerre(1, 0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(laguerre(1, 1, 0.5) == doctest::Approx(1.5).epsilon(1e-14));

    const std::vector<double> xs = {-10.0, -3.3, -0.7, 0.0, 0.4, 1.0, 2.5, 6.0, 10.0};
    for (int n = 0; n <= 15; ++n)
        for (int k = 0; k <= 6; ++k)
            for (const double x : xs) {
                double scale = 0.0;
                const double expected = laguerre_series_oracle(n, k, x, &scale);
                CHECK(std::abs(laguerre(n, k, x) - expected) < 1e-11 * std::max(1.0, scale));
            }
}

TEST_CASE("laguerre special value at the origin is the binomial coefficient") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= 8; ++k)
            CHECK(laguerre(n, k, 0.0) ==
                  doctest::Approx(binomial(n + k, n)).epsilon(1e-12));
}

TEST_CASE("hermite recurrence agrees with the explicit series") {
    CHECK(hermite(0, 1.234) == 1.0);
    CHECK(hermite(1, 0.3) == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(hermite(2, 1.0) == doctest::Approx(2.0).epsilon(1e-14));

    const std::vector<double> xs = {-10.0, -2.2, -0.5, 0.0, 0.9, 3.1, 10.0};
    for (int m = 0; m <= 15; ++m)
        for (const double x : xs) {
            double scale = 0.0;
            const double expected = hermite_series_oracle(m, x, &scale);
            CHECK(std::abs(hermite(m, x) - expected) < 1e-11 * std::max(1.0, scale));
        }
}

TEST_CASE("odd hermite polynomials vanish at the origin") {
    for (int m = 1; m <= 15; m += 2) CHECK(hermite(m, 0.0) == 0.0);
}

TEST_CASE("hermite2v frozen values from the expansion oracle") {
    CHECK(hermite2v(0, 0, {2.0, 1.0}, {-3.0, 0.5}) == Complex(1.0, 0.0));
    // H_{1,1}(x,y) = xy - 1
    CHECK(hermite2v(1, 1, 2.0, 3.0) == Complex(5.0, 0.0));
    // H_{1,2}(x,y) = x y^2 - 2y, cross-checked against the Laguerre link with m=1, n=2
    CHECK(hermite2v(1, 2, 1.0, 1.0) == Complex(-1.0, 0.0));
    const Complex via_laguerre =
        1.0 * (-1.0) * Complex(1.0, 0.0) * laguerre(1, 1, 1.0);
    CHECK(std::abs(hermite2v(1, 2, 1.0, 1.0) - via_laguerre) < 1e-14);
}

TEST_CASE("hermite2v is symmetric under (m,x) <-> (n,y)") {
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int m = 0; m <= 10; ++m)
        for (int n = 0; n <= 10; ++n) {
            const Complex x(u(rng), u(rng));
            const Complex y(u(rng), u(rng));
            const Complex a = hermite2v(m, n, x, y);
            const Complex b = hermite2v(n, m, y, x);
            CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
        }
}

TEST_CASE("two-variable Hermite links to associated Laguerre for m < n") {
    std::mt19937 rng(98765);
    std::uniform_real_distribution<double> radius(0.05, 3.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int m = 0; m < 10; ++m) {
        for (int n = m + 1; n <= 10; ++n) {
            for (int s = 0; s < 20; ++s) {
                const Complex eta = std::polar(radius(rng), angle(rng));
                const Complex lhs = hermite2v(m, n, eta, std::conj(eta));
                const double sign = (m & 1) ? -1.0 : 1.0;
                const Complex rhs = std::exp(log_factorial(m)) * sign *
                                    std::pow(std::conj(eta), n - m) *
                                    laguerre(m, n - m, std::norm(eta));
                const double scale =
                    std::max(1.0, hermite2v_scale(m, n, std::abs(eta), std::abs(eta)));
                CHECK(std::abs(lhs - rhs) <= kPolyIdentityRelTol * scale);
            }
        }
    }
}

TEST_CASE("PolyIndex validity") {
    CHECK(PolyIndex{2, 3}.valid());
    CHECK(PolyIndex{0, 0}.valid());
    CHECK_FALSE(PolyIndex{-1, 0}.valid());
    CHECK_FALSE(PolyIndex{1, -2}.valid());
    CHECK(laguerre(PolyIndex{1, 1}, 0.5) == doctest::Approx(1.5));
}
