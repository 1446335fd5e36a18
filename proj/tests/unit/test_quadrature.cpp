#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgkit/quadrature.hpp"

#include <cmath>
#include <numeric>

using namespace lgkit;

namespace {
constexpr double kPi = 3.14159265358979323846;

double integrate(const Rule1D& rule, double (*f)(double)) {
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        total += rule.weights[i] * f(rule.nodes[i]);
    return total;
}
}  // namespace

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const Rule1D rule = gauss_legendre(12, -1.0, 1.0);
    // degree 23 is the exactness limit for 12 nodes
    double moment = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        moment += rule.weights[i] * std::pow(rule.nodes[i], 22);
    CHECK(moment == doctest::Approx(2.0 / 23.0).epsilon(1e-13));
    CHECK(integrate(rule, [](double) { return 1.0; }) == doctest::Approx(2.0));
}

TEST_CASE("gauss-legendre handles shifted intervals and large node counts") {
    const Rule1D rule = gauss_legendre(96, 0.0, 2.0);
    CHECK(integrate(rule, [](double x) { return std::exp(-x); }) ==
          doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));
    const Rule1D big = gauss_legendre(256, -6.0, 6.0);
    CHECK(integrate(big, [](double x) { return std::exp(-x * x); }) ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
}

TEST_CASE("midpoint rule reaches spectral accuracy on Gaussian-decay integrands") {
    const Rule1D rule = midpoint(48, -6.0, 6.0);
    CHECK(integrate(rule, [](double x) { return x * x * std::exp(-x * x); }) ==
          doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("gauss-hermite integrates Hermite-weighted moments") {
    const Rule1D rule = gauss_hermite(64);
    CHECK(integrate(rule, [](double) { return 1.0; }) ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    CHECK(integrate(rule, [](double x) { return x * x; }) ==
          doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-13));
    CHECK(std::abs(integrate(rule, [](double x) { return x; })) < 1e-14);
    // Gaussian damping beyond the weight: integral of e^{-x^2} e^{-x^2/2}
    CHECK(integrate(rule, [](double x) { return std::exp(-0.5 * x * x); }) ==
          doctest::Approx(std::sqrt(2.0 * kPi / 3.0)).epsilon(1e-12));
}

TEST_CASE("gauss-hermite at 200 nodes stays finite and normalized") {
    const Rule1D rule = gauss_hermite(200);
    const double total = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
    CHECK(total == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
    for (const double w : rule.weights) CHECK(w > 0.0);
}

TEST_CASE("polar rule integrates Gaussian-damped polynomials over the plane") {
    const PolarRule rule = make_polar_rule(7.0, 96, 64);
    double total = 0.0;
    double angular = 0.0;
    for (std::size_t i = 0; i < rule.r.size(); ++i) {
        for (std::size_t j = 0; j < rule.phi.size(); ++j) {
            const double w = rule.weight[i * rule.phi.size() + j];
            const double r = rule.r[i];
            total += w * r * r * std::exp(-r * r);
            angular += w * std::exp(-r * r) * std::cos(3.0 * rule.phi[j]);
        }
    }
    CHECK(total == doctest::Approx(kPi).epsilon(1e-12));  // integral of r^2 e^{-r^2}
    CHECK(std::abs(angular) < 1e-13);
}

TEST_CASE("QuadratureSpec validation") {
    CHECK_THROWS(QuadratureSpec{-1.0, 32, QuadratureRule::GaussLegendre}.validate());
    CHECK_THROWS(QuadratureSpec{3.0, 4, QuadratureRule::GaussLegendre}.validate());
    CHECK_NOTHROW(QuadratureSpec{3.0, 8, QuadratureRule::Midpoint}.validate());
}
