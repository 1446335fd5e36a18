#include "lgkit/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lgkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Legendre P_n and P_n' at x via the recurrence.
void legendre_pair(int n, double x, double& p, double& dp) {
    double pm1 = 1.0, pc = x;
    for (int k = 1; k < n; ++k) {
        const double pp1 = ((2.0 * k + 1.0) * x * pc - k * pm1) / (k + 1.0);
        pm1 = pc;
        pc = pp1;
    }
    p = pc;
    dp = n * (x * pc - pm1) / (x * x - 1.0);
}

Rule1D gauss_legendre_unit(int n) {
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess, then Newton.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            legendre_pair(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre_pair(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

Rule1D gauss_hermite_uncached(int n) {
    // Golub-Welsch: symmetric tridiagonal Jacobi matrix with off-diagonal
    // sqrt(k/2); eigenvalues are the nodes, weights sqrt(pi) * v0^2.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(0.5 * k);
        jacobi(k - 1, k) = b;
        jacobi(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_hermite: eigensolver failed");
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double sqrt_pi = std::sqrt(kPi);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = sqrt_pi * v0 * v0;
    }
    return rule;
}

std::mutex g_cache_mutex;
std::map<int, Rule1D> g_gl_unit_cache;
std::map<int, Rule1D> g_gh_cache;

const Rule1D& gauss_legendre_unit_cached(int n) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_gl_unit_cache.find(n);
    if (it == g_gl_unit_cache.end())
        it = g_gl_unit_cache.emplace(n, gauss_legendre_unit(n)).first;
    return it->second;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(half_width > 0.0)) throw std::invalid_argument("QuadratureSpec: half_width must be positive");
    if (nodes_per_axis < 8) throw std::invalid_argument("QuadratureSpec: nodes_per_axis must be >= 8");
}

Rule1D gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    const Rule1D& unit = gauss_legendre_unit_cached(n);
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid + hw * unit.nodes[i];
        rule.weights[i] = hw * unit.weights[i];
    }
    return rule;
}

Rule1D midpoint(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("midpoint: need at least one cell");
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double h = (b - a) / n;
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = a + (i + 0.5) * h;
        rule.weights[i] = h;
    }
    return rule;
}

Rule1D gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: need at least one node");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_gh_cache.find(n);
    if (it == g_gh_cache.end()) it = g_gh_cache.emplace(n, gauss_hermite_uncached(n)).first;
    return it->second;
}

Rule1D make_rule(const QuadratureSpec& spec) {
    spec.validate();
    switch (spec.rule) {
        case QuadratureRule::GaussLegendre:
            return gauss_legendre(spec.nodes_per_axis, -spec.half_width, spec.half_width);
        case QuadratureRule::Midpoint:
            return midpoint(spec.nodes_per_axis, -spec.half_width, spec.half_width);
    }
    throw std::logic_error("make_rule: unknown rule");
}

PolarRule make_polar_rule(double r_max, int n_r, int n_phi) {
    if (!(r_max > 0.0) || n_r < 1 || n_phi < 1)
        throw std::invalid_argument("make_polar_rule: bad parameters");
    const Rule1D radial = gauss_legendre(n_r, 0.0, r_max);
    PolarRule rule;
    rule.r.resize(n_r);
    rule.phi.resize(n_phi);
    rule.weight.resize(static_cast<std::size_t>(n_r) * n_phi);
    const double dphi = 2.0 * kPi / n_phi;
    for (int j = 0; j < n_phi; ++j) rule.phi[j] = j * dphi;
    for (int i = 0; i < n_r; ++i) {
        rule.r[i] = radial.nodes[i];
        const double wr = radial.weights[i] * radial.nodes[i];  // r dr Jacobian
        for (int j = 0; j < n_phi; ++j)
            rule.weight[static_cast<std::size_t>(i) * n_phi + j] = wr * dphi;
    }
    return rule;
}

}  // namespace lgkit
