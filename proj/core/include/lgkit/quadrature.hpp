#pragma once

#include <vector>

namespace lgkit {

enum class QuadratureRule { GaussLegendre, Midpoint };

/// Integration scheme descriptor shared by all numerical integrals:
/// a square box [-half_width, half_width] per axis with nodes_per_axis nodes.
struct QuadratureSpec {
    double half_width = 6.0;
    int nodes_per_axis = 96;
    QuadratureRule rule = QuadratureRule::GaussLegendre;

    void validate() const;
};

/// Nodes and weights of a one-dimensional rule.
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n nodes on [a, b].
Rule1D gauss_legendre(int n, double a, double b);

/// Composite midpoint rule with n cells on [a, b].
Rule1D midpoint(int n, double a, double b);

/// Gauss-Hermite rule with n nodes, weight exp(-x^2) on the real line
/// (Golub-Welsch on the Jacobi matrix).
Rule1D gauss_hermite(int n);

/// Rule on [-half_width, half_width] as described by the spec.
Rule1D make_rule(const QuadratureSpec& spec);

/// Product rule in polar coordinates for plane integrals of
/// Gaussian-damped polynomials: Gauss-Legendre in r on [0, r_max],
/// trapezoid (= uniform) in phi with n_phi nodes. Weights include the r
/// Jacobian, so sum_i w_i f(r_i, phi_i) approximates the plain area integral.
struct PolarRule {
    std::vector<double> r;
    std::vector<double> phi;
    std::vector<double> weight;  // flattened, phi fastest
};
PolarRule make_polar_rule(double r_max, int n_r, int n_phi);

}  // namespace lgkit
