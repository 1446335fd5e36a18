#pragma once

#include "lgkit/fock_space.hpp"
#include "lgkit/mode_index.hpp"
#include "lgkit/quadrature.hpp"

#include <complex>
#include <map>
#include <mutex>

namespace lgkit::phasespace {

using Complex = std::complex<double>;

/// Point (x1, p1, x2, p2) of two-mode phase space, with the rotation-invariant
/// combinations Q0 = x1^2 + p1^2 + x2^2 + p2^2 and Q2 = 2 p2 x1 - 2 p1 x2.
/// |Q2| <= Q0 always holds for finite coordinates; construction verifies it to
/// 1e-12 to catch coordinate-transform bugs (and NaNs) early.
struct PhasePoint4 {
    double x1 = 0.0, p1 = 0.0, x2 = 0.0, p2 = 0.0;

    PhasePoint4() = default;
    PhasePoint4(double x1_, double p1_, double x2_, double p2_);

    double q0() const { return x1 * x1 + p1 * p1 + x2 * x2 + p2 * p2; }
    double q2() const { return 2.0 * p2 * x1 - 2.0 * p1 * x2; }
};

/// Entangled coordinates sigma = alpha - beta^*, gamma = alpha + beta^* with
/// alpha = (x1 + i p1)/sqrt2, beta = (x2 + i p2)/sqrt2. The map preserves the
/// phase-space volume element and |sigma|^2 + |gamma|^2 = Q0.
struct SigmaGamma {
    Complex sigma;
    Complex gamma;
};

SigmaGamma to_sigma_gamma(const PhasePoint4& pt);
PhasePoint4 from_sigma_gamma(const SigmaGamma& sg);

/// Wigner function of the number state |m>:
/// ((-1)^m / pi) e^{-(x^2+p^2)} L_m[2(x^2+p^2)]. Bounded by 1/pi.
double wigner_number_state(int m, double x, double p);

/// Closed-form Wigner function of |n,l>:
/// ((-1)^n / pi^2) e^{-Q0} L_{m_rho}(Q0+Q2) L_{n_rho}(Q0-Q2). Bounded by 1/pi^2.
double wigner_lg(const ModeIndex& idx, const PhasePoint4& pt);

/// Brute-force displaced-parity Wigner evaluation for an arbitrary truncated
/// state: W = <state| D1 P1 D1^dag (x) D2 P2 D2^dag |state> / pi^2 with
/// D(alpha) = exp(alpha a^dag - alpha^* a) computed as a dense single-mode
/// matrix exponential. Displacement leaks excitation, so evaluation requires
/// state support + ceil(8 max|alpha|) <= nmax (CutoffTooSmall otherwise).
/// Displacement kernels are cached per alpha and shared read-only afterwards.
class WignerOracle {
public:
    explicit WignerOracle(fock::TwoModeState state);

    double operator()(const PhasePoint4& pt) const;

    int support() const { return support_; }

private:
    const fock::Matrix& parity_kernel(Complex alpha) const;

    fock::BasisSpec basis_;
    fock::Matrix coeff_grid_;  // (k1, k2) layout of the state coefficients
    int support_;
    fock::Matrix mode_annihilation_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<double, double>, fock::Matrix> kernel_cache_;
};

/// One-shot convenience wrapper around WignerOracle.
double wigner_bruteforce(const fock::TwoModeState& state, const PhasePoint4& pt);

/// Marginal distribution over the sigma plane, closed form (only derived for
/// l >= 0): (e^{-|sigma|^2} / pi) 2^{m_rho - n_rho} (m_rho!/n_rho!) |S|^2 with
/// S the double sum of weighted two-variable Hermite polynomials.
double marginal_sigma_analytic(const ModeIndex& idx, Complex sigma);

/// Same quantity through the overlap route, (1/pi) |<tau = sigma|n,l>|^2.
double marginal_sigma_via_overlap(const ModeIndex& idx, Complex sigma);

/// Default node-doubling slack of quadrature-backed results: doubling the
/// nodes may move the value by at most 10x the claimed tolerance of 1e-5.
inline constexpr double kMarginalSelfCheckTol = 1e-5;

/// Marginal by direct integration of wigner_lg over the gamma plane at fixed
/// sigma, with the plain measure dRe(gamma) dIm(gamma); the (sigma, gamma)
/// map is volume-preserving, so no extra Jacobian factor appears (calibrated
/// against the vacuum marginal). Requires half_width >= 5 + sqrt(n). Runs the
/// rule at the requested and doubled node counts and fails with
/// QuadratureUnderResolved if they disagree by more than 10x the tolerance.
double marginal_sigma_quadrature(const ModeIndex& idx, Complex sigma,
                                 const QuadratureSpec& spec,
                                 double tolerance = kMarginalSelfCheckTol);

}  // namespace lgkit::phasespace
