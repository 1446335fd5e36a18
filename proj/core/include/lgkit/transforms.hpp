#pragma once

#include "lgkit/errors.hpp"
#include "lgkit/mode_index.hpp"
#include "lgkit/quadrature.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <map>
#include <mutex>

namespace lgkit::transforms {

using Complex = std::complex<double>;

/// Orders with |sin alpha| below this band are rejected: the kernel prefactor
/// 1/(2 sin alpha) diverges and the alpha -> 0 limit is a delta identity that
/// fixed quadrature cannot represent.
inline constexpr double kMinAbsSin = 0.05;

/// Fractional order alpha (radians, taken mod 2pi), restricted to the band
/// where the kernel is numerically meaningful.
class FrftOrder {
public:
    explicit FrftOrder(double alpha);

    double alpha() const { return alpha_; }
    double sin() const { return sin_; }
    /// cos(alpha)/(2 sin(alpha)), the quadratic-phase coefficient; finite on
    /// the admitted band and zero at alpha = pi/2.
    double half_cot() const { return cos_ / (2.0 * sin_); }

private:
    double alpha_;
    double sin_;
    double cos_;
};

/// Complex field f(tau') over the tau' plane together with its integration
/// box. The field must be Gaussian-damped: construction samples the box edge
/// and rejects fields whose edge magnitude exceeds 1e-6 of the peak.
/// Grid evaluations are cached per node count and shared read-only.
class SampledField {
public:
    struct Grid {
        std::vector<double> nodes;
        std::vector<double> weights;
        Eigen::MatrixXcd values;  // values(i, j) = f(nodes[i] + i nodes[j])
    };

    SampledField(std::function<Complex(Complex)> f, QuadratureSpec spec);

    const QuadratureSpec& spec() const { return spec_; }
    Complex operator()(Complex tau_prime) const { return f_(tau_prime); }
    const Grid& grid(int nodes_per_axis) const;

private:
    std::function<Complex(Complex)> f_;
    QuadratureSpec spec_;
    mutable std::mutex cache_mutex_;
    mutable std::map<int, Grid> grid_cache_;
};

/// Precomputed kernel factors of the fractional Fourier transform
///   F_alpha[f](tau) = (e^{i(alpha - pi/2)} / (2 sin alpha)) *
///     integral (d^2tau'/pi) exp[i(|tau'|^2 + |tau|^2) cos(alpha)/(2 sin alpha)
///                              - i (tau^* tau' + tau'^* tau)/(2 sin alpha)] f(tau')
/// at one order and node count. The tau'-dependent kernel factors are folded
/// into a matrix once; each output point then costs one bilinear form.
class FrftEvaluator {
public:
    FrftEvaluator(const SampledField& field, FrftOrder order, int nodes_per_axis = 0);

    Complex operator()(Complex tau) const;

private:
    FrftOrder order_;
    std::vector<double> nodes_;
    Eigen::MatrixXcd weighted_kernel_;  // w_i w_j f_ij exp(i t |tau'|^2) / pi
    Complex prefactor_;
};

/// Node-doubling slack of the transform quadratures: doubling the rule may
/// move a value by at most this much.
inline constexpr double kTransformSelfCheckSlack = 1e-5;

/// One-shot FrFT with the mandatory node-doubling self-check
/// (QuadratureUnderResolved if the base and doubled rules disagree).
Complex frft(const SampledField& field, FrftOrder order, Complex tau);

/// Max residual |F_alpha[<.|n,l>](tau) - e^{-i alpha n} <tau|n,l>| over a
/// 5x5 tau sample in [-1,1]^2. Only l >= 0 (the closed overlap expansion).
double frft_eigen_residual(const ModeIndex& idx, FrftOrder order);

/// Generalized Wigner transform of two Hermite-Gaussian modes,
///   W_g[h_f, h_v](x, p) = (1/2pi) integral du e^{-iup} h_f(x - u/2) h_v(x + u/2),
/// evaluated by Gauss-Hermite quadrature after factoring the joint Gaussian.
/// Reduces to the ordinary Wigner function for f_mode == v_mode.
Complex gwt(int f_mode, int v_mode, double x, double p);

/// Residual of the closed-form identity tying the Laguerre-Gaussian overlap
/// to the GWT of two Hermite-Gaussian modes (0 <= m <= n):
///   sqrt(m!/n!) tau^*^{n-m} L_m^{n-m}(|tau|^2) e^{-|tau|^2/2}
///     = (-1)^m pi W_g[h_m, h_n](tau1/sqrt2, tau2/sqrt2).
double gwt_lg_identity_residual(int m, int n, Complex tau);

/// Residual of <m,n|tau> = pi <m| Delta(tau1/sqrt2, tau2/sqrt2) (-1)^N |n>,
/// i.e. |conj(<tau|m,n>) - pi (-1)^n W_g[h_m, h_n](tau1/sqrt2, tau2/sqrt2)|.
/// The Fock overlap is stated as <tau|m,n>, hence the explicit conjugation.
double schmidt_overlap_check(int m, int n, Complex tau);

}  // namespace lgkit::transforms
