#include "lgkit/verify.hpp"

#include "lgkit/fock_space.hpp"
#include "lgkit/modes.hpp"
#include "lgkit/phase_space.hpp"
#include "lgkit/quadrature.hpp"
#include "lgkit/special_functions.hpp"
#include "lgkit/transforms.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

namespace lgkit::verify {

namespace {

using Complex = std::complex<double>;
using fock::BasisSpec;
using fock::OperatorMatrix;
using fock::TwoModeState;

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

class Runner {
public:
    explicit Runner(Report& report) : report_(report) {}

    template <typename Fn>
    void check(const std::string& id, const std::string& anchor, double tol, Fn&& fn) {
        CheckRecord rec;
        rec.id = id;
        rec.anchor = anchor;
        rec.tol = tol;
        const auto start = std::chrono::steady_clock::now();
        try {
            rec.residual = fn();
            rec.pass = std::isfinite(rec.residual) && rec.residual < tol;
        } catch (const std::exception&) {
            rec.residual = std::numeric_limits<double>::infinity();
            rec.pass = false;
        }
        rec.ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
        report_.checks.push_back(std::move(rec));
    }

private:
    Report& report_;
};

const std::vector<Complex>& unit_disc_samples() {
    static const std::vector<Complex> samples = {
        {0.20, 0.00},  {0.00, 0.35},  {-0.45, 0.10}, {0.30, -0.40}, {0.55, 0.25},
        {-0.60, -0.35}, {0.70, 0.10}, {-0.15, 0.75}, {0.85, -0.30}, {-0.50, 0.62}};
    return samples;
}

// <bra|ket> over a shared basis.
Complex overlap(const TwoModeState& bra, const TwoModeState& ket) {
    return bra.coeffs.dot(ket.coeffs);
}

// Largest pointwise deviation after fitting one shared constant at the first
// usable sample: checks proportionality of two complex-valued sample sets.
double fitted_proportionality_residual(const std::vector<Complex>& measured,
                                       const std::vector<Complex>& reference) {
    double scale = 0.0;
    for (const Complex& m : measured) scale = std::max(scale, std::abs(m));
    if (!(scale > 0.0)) return std::numeric_limits<double>::infinity();
    Complex c(0.0, 0.0);
    for (std::size_t i = 0; i < measured.size(); ++i) {
        if (std::abs(reference[i]) > 1e-3 * scale) {
            c = measured[i] / reference[i];
            break;
        }
    }
    if (c == Complex(0.0, 0.0)) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < measured.size(); ++i)
        worst = std::max(worst, std::abs(measured[i] - c * reference[i]));
    return worst / scale;
}

// ---------------------------------------------------------------------------
// fock suite
// ---------------------------------------------------------------------------

void fock_suite(Runner& r, const Options& opts) {
    const BasisSpec basis(opts.nmax);
    const auto modes6 = all_modes_up_to(6);

    r.check("fock.number-eigen",
            "total photon number eigenvalue equation on the angular-momentum eigenstates",
            1e-10, [&] {
                const OperatorMatrix num = fock::number_operator(basis);
                double worst = 0.0;
                for (const ModeIndex& idx : modes6) {
                    const TwoModeState st = fock::lg_state_ladder(idx, basis);
                    worst = std::max(worst, (num.entries * st.coeffs -
                                             static_cast<double>(idx.n) * st.coeffs)
                                                .norm());
                }
                return worst;
            });

    r.check("fock.oam-eigen",
            "orbital angular momentum eigenvalue equation on the same states", 1e-10, [&] {
                const OperatorMatrix oam = fock::angular_momentum_operator(basis);
                double worst = 0.0;
                for (const ModeIndex& idx : modes6) {
                    const TwoModeState st = fock::lg_state_ladder(idx, basis);
                    worst = std::max(worst, (oam.entries * st.coeffs -
                                             static_cast<double>(idx.l) * st.coeffs)
                                                .norm());
                }
                return worst;
            });

    const OperatorMatrix ap = fock::circular_annihilation(fock::Circular::Plus, basis);
    const OperatorMatrix am = fock::circular_annihilation(fock::Circular::Minus, basis);

    r.check("fock.circular-commutators",
            "canonical commutation relations of the circular mode pair", 1e-12, [&] {
                const int guard_total = basis.nmax() - 2;
                const fock::Matrix eye =
                    fock::Matrix::Identity(basis.dimension(), basis.dimension());
                const fock::Matrix c1 =
                    (ap * ap.adjoint() - ap.adjoint() * ap).entries - eye;
                const fock::Matrix c2 =
                    (am * am.adjoint() - am.adjoint() * am).entries - eye;
                const fock::Matrix c3 = (ap * am.adjoint() - am.adjoint() * ap).entries;
                double worst = fock::guarded_max_abs(c1, guard_total);
                worst = std::max(worst, fock::guarded_max_abs(c2, guard_total));
                worst = std::max(worst, fock::guarded_max_abs(c3, guard_total));
                return worst;
            });

    r.check("fock.number-oam-recombination",
            "circular-mode number operators recombine into total number and angular momentum",
            1e-12, [&] {
                const int guard_total = basis.nmax() - 2;
                const OperatorMatrix np = ap.adjoint() * ap;
                const OperatorMatrix nm = am.adjoint() * am;
                const fock::Matrix num_diff =
                    (np + nm).entries - fock::number_operator(basis).entries;
                const fock::Matrix oam_diff =
                    (np - nm).entries - fock::angular_momentum_operator(basis).entries;
                return std::max(fock::guarded_max_abs(num_diff, guard_total),
                                fock::guarded_max_abs(oam_diff, guard_total));
            });

    r.check("fock.ladder-vs-beamsplitter",
            "ladder and beam-splitter constructions of |n,l> agree including phase", 1e-10,
            [&] {
                double worst = 0.0;
                for (const ModeIndex& idx : modes6) {
                    const TwoModeState a = fock::lg_state_ladder(idx, basis);
                    const TwoModeState b = fock::lg_state_beamsplitter(idx, basis);
                    worst = std::max(worst, (a.coeffs - b.coeffs).cwiseAbs().maxCoeff());
                }
                return worst;
            });

    r.check("fock.block-support",
            "|n,l> lives on the n-excitation block: at most n+1 nonzero coefficients",
            1e-10, [&] {
                double worst = 0.0;
                for (const ModeIndex& idx : modes6) {
                    const TwoModeState st = fock::lg_state_beamsplitter(idx, basis);
                    const int off = BasisSpec::block_offset(idx.n);
                    const int sz = BasisSpec::block_size(idx.n);
                    int nnz = 0;
                    for (int i = 0; i < st.coeffs.size(); ++i) {
                        const double mag = std::abs(st.coeffs[i]);
                        if (i >= off && i < off + sz) {
                            if (mag > 1e-12) ++nnz;
                        } else {
                            worst = std::max(worst, mag);
                        }
                    }
                    if (nnz > idx.n + 1) worst = std::max(worst, 1.0);
                }
                return worst;
            });

    r.check("fock.beamsplitter-equals-jx",
            "the symmetric beam splitter with quarter-wave phase equals the mode-exchange rotation",
            1e-10, [&] {
                const fock::Matrix diff =
                    fock::beam_splitter(0.5 * kPi, 0.5 * kPi, basis).entries -
                    fock::jx_rotation(basis).entries;
                return diff.cwiseAbs().maxCoeff();
            });

    r.check("fock.beamsplitter-unitarity",
            "beam-splitter matrices are unitary on every excitation block", 1e-10, [&] {
                const OperatorMatrix b = fock::beam_splitter(0.7, 0.3, basis);
                const fock::Matrix diff =
                    (b.adjoint() * b).entries -
                    fock::Matrix::Identity(basis.dimension(), basis.dimension());
                return fock::guarded_max_abs(diff, basis.nmax() - 2);
            });

    r.check("fock.jx-decomposition",
            "three-factor Gaussian decomposition of the mode-exchange rotation", 1e-9,
            [&] {
                return std::max(fock::jx_decomposition_check(BasisSpec(4)),
                                fock::jx_decomposition_check(BasisSpec(8)));
            });

    r.check("fock.quadrature-covariance",
            "conjugation of the quadratures by the mode-exchange rotation", 1e-10, [&] {
                return std::max(fock::quadrature_covariance_check(BasisSpec(8)),
                                fock::quadrature_covariance_check(BasisSpec(10)));
            });

    // Entangled-state eigen-residuals, guarded against the truncation boundary.
    const BasisSpec esr(opts.esr_nmax);
    const OperatorMatrix x1 = fock::position_quadrature(1, esr);
    const OperatorMatrix p1 = fock::momentum_quadrature(1, esr);
    const OperatorMatrix x2 = fock::position_quadrature(2, esr);
    const OperatorMatrix p2 = fock::momentum_quadrature(2, esr);

    r.check("fock.eta-eigen-residual",
            "joint eigenvector equations of the eta entangled state", 1e-6, [&] {
                const OperatorMatrix op1 = x1 - x2 - p1 + p2;
                const OperatorMatrix op2 = p1 + p2 - x1 - x2;
                double worst = 0.0;
                for (const Complex& eta : unit_disc_samples()) {
                    const TwoModeState st = fock::build_eta_state(eta, esr);
                    worst = std::max(worst, fock::eigen_residual_guarded(
                                                op1, st, 2.0 * eta.real()));
                    worst = std::max(worst, fock::eigen_residual_guarded(
                                                op2, st, 2.0 * eta.imag()));
                }
                return worst;
            });

    r.check("fock.tau-eigen-residual",
            "joint eigenvector equations of the tau entangled state", 1e-6, [&] {
                const OperatorMatrix op1 = x1 - x2;
                const OperatorMatrix op2 = p1 + p2;
                const double sqrt2 = std::sqrt(2.0);
                double worst = 0.0;
                for (const Complex& tau : unit_disc_samples()) {
                    const TwoModeState st = fock::build_tau_state(tau, esr);
                    worst = std::max(worst, fock::eigen_residual_guarded(
                                                op1, st, sqrt2 * tau.real()));
                    worst = std::max(worst, fock::eigen_residual_guarded(
                                                op2, st, sqrt2 * tau.imag()));
                }
                return worst;
            });

    r.check("fock.eta-overlap-vs-wavefunction",
            "overlaps of |n,l> with the eta state reproduce the closed-form wavefunction",
            1e-5, [&] {
                const std::vector<ModeIndex> targets = {
                    ModeIndex(0, 0), ModeIndex(1, 1), ModeIndex(1, -1), ModeIndex(2, 0)};
                std::vector<TwoModeState> eta_states;
                for (const Complex& eta : unit_disc_samples())
                    eta_states.push_back(fock::build_eta_state(eta, esr));
                double worst = 0.0;
                for (const ModeIndex& idx : targets) {
                    const TwoModeState lg = fock::lg_state_beamsplitter(idx, esr);
                    std::vector<Complex> measured, reference;
                    for (std::size_t i = 0; i < eta_states.size(); ++i) {
                        measured.push_back(overlap(lg, eta_states[i]));
                        reference.push_back(std::conj(
                            modes::lg_wavefunction_eta(idx, unit_disc_samples()[i])));
                    }
                    worst = std::max(worst,
                                     fitted_proportionality_residual(measured, reference));
                }
                return worst;
            });

    r.check("fock.tau-overlap-fock",
            "Fock overlaps of the tau state match the bivariate-Hermite closed form", 1e-5,
            [&] {
                double worst = 0.0;
                for (const Complex& tau : unit_disc_samples()) {
                    const TwoModeState st = fock::build_tau_state(tau, esr);
                    for (int m = 0; m <= 4; ++m) {
                        for (int n = 0; n <= 4; ++n) {
                            const Complex from_state =
                                std::conj(st.coeffs[esr.index_of(m, n)]);
                            const Complex analytic = modes::tau_overlap_fock(m, n, tau);
                            worst = std::max(worst, std::abs(from_state - analytic));
                        }
                    }
                }
                return worst;
            });

    r.check("fock.tau-overlap-lg",
            "double-sum expansion of <tau|n,l> matches the truncated-Fock inner product",
            1e-5, [&] {
                const std::vector<ModeIndex> targets = {
                    ModeIndex(0, 0), ModeIndex(1, 1), ModeIndex(2, 0), ModeIndex(2, 2)};
                std::vector<TwoModeState> tau_states;
                for (const Complex& tau : unit_disc_samples())
                    tau_states.push_back(fock::build_tau_state(tau, esr));
                double worst = 0.0;
                for (const ModeIndex& idx : targets) {
                    const TwoModeState lg = fock::lg_state_beamsplitter(idx, esr);
                    std::vector<Complex> measured, reference;
                    for (std::size_t i = 0; i < tau_states.size(); ++i) {
                        measured.push_back(overlap(tau_states[i], lg));
                        reference.push_back(
                            modes::tau_overlap_lg(idx, unit_disc_samples()[i]));
                    }
                    worst = std::max(worst,
                                     fitted_proportionality_residual(measured, reference));
                }
                return worst;
            });
}

// ---------------------------------------------------------------------------
// modes suite
// ---------------------------------------------------------------------------

// Plane integral of conj(psi_a) psi_b over d^2eta / pi by the polar rule.
Complex mode_plane_integral(const ModeIndex& a, const ModeIndex& b) {
    const int n = std::max(a.n, b.n);
    const PolarRule rule =
        make_polar_rule(6.0 + std::sqrt(static_cast<double>(n)), 96, 64);
    Complex total = 0.0;
    for (std::size_t i = 0; i < rule.r.size(); ++i) {
        for (std::size_t j = 0; j < rule.phi.size(); ++j) {
            const Complex eta = std::polar(rule.r[i], rule.phi[j]);
            total += rule.weight[i * rule.phi.size() + j] *
                     std::conj(modes::lg_wavefunction_eta(a, eta)) *
                     modes::lg_wavefunction_eta(b, eta);
        }
    }
    return total / kPi;
}

void modes_suite(Runner& r, const Options&) {
    r.check("modes.angular-dependence",
            "the wavefunction carries the pure angular phase factor of its l value", 1e-12,
            [&] {
                double worst = 0.0;
                for (const ModeIndex& idx : all_modes_up_to(5)) {
                    for (const double radius : {0.6, 1.3}) {
                        const Complex ref =
                            modes::lg_wavefunction_eta(idx, Complex(radius, 0.0)) ;
                        for (int k = 1; k < 16; ++k) {
                            const double phi = 2.0 * kPi * k / 16.0;
                            const Complex v =
                                modes::lg_wavefunction_eta(idx, std::polar(radius, phi)) *
                                std::exp(kI * static_cast<double>(idx.l) * phi);
                            worst = std::max(worst, std::abs(v - ref));
                        }
                    }
                }
                return worst;
            });

    struct OdeCase {
        ModeIndex idx;
        double r;
        double tol;
    };
    const std::vector<OdeCase> ode_cases = {{ModeIndex(0, 0), 1.0, 1e-5},
                                            {ModeIndex(2, 0), 1.5, 1e-4},
                                            {ModeIndex(3, 1), 0.8, 1e-4}};

    r.check("modes.ode-residual-magnitude",
            "finite-difference residual of the radial eigenvalue equation, h = 1e-3", 1.0,
            [&] {
                double worst = 0.0;
                for (const OdeCase& c : ode_cases)
                    worst = std::max(
                        worst, modes::radial_equation_residual(c.idx, c.r, 1e-3) / c.tol);
                return worst;
            });

    r.check("modes.ode-residual-convergence",
            "the radial-equation residual converges at second order in the step", 0.5, [&] {
                double worst = 0.0;
                for (const OdeCase& c : ode_cases) {
                    const double coarse = modes::radial_equation_residual(c.idx, c.r, 1e-3);
                    const double fine = modes::radial_equation_residual(c.idx, c.r, 5e-4);
                    worst = std::max(worst, std::abs(coarse / fine - 4.0));
                }
                return worst;
            });

    r.check("modes.normalization",
            "plane integral of the squared wavefunction equals one", 1e-6, [&] {
                double worst = 0.0;
                for (const ModeIndex& idx : {ModeIndex(1, 1), ModeIndex(2, 0),
                                             ModeIndex(3, 1), ModeIndex(3, -1)})
                    worst = std::max(worst,
                                     std::abs(mode_plane_integral(idx, idx) - 1.0));
                return worst;
            });

    r.check("modes.orthogonality",
            "wavefunctions of distinct quantum numbers are orthogonal under the plane measure",
            1e-6, [&] {
                const auto family = all_modes_up_to(3);
                double worst = 0.0;
                for (std::size_t i = 0; i < family.size(); ++i) {
                    for (std::size_t j = i; j < family.size(); ++j) {
                        const double expected = (i == j) ? 1.0 : 0.0;
                        worst = std::max(worst, std::abs(mode_plane_integral(
                                                    family[i], family[j]) -
                                                    expected));
                    }
                }
                return worst;
            });

    r.check("modes.hg-orthonormality",
            "Hermite-Gaussian family is orthonormal under Gauss-Hermite quadrature", 1e-8,
            [&] {
                const Rule1D rule = gauss_hermite(64);
                double worst = 0.0;
                for (int m = 0; m <= 6; ++m) {
                    for (int n = m; n <= 6; ++n) {
                        double quad = 0.0;
                        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                            const double x = rule.nodes[k];
                            // weight already carries e^{-x^2}; peel the Gaussians off h_m h_n
                            quad += rule.weights[k] *
                                    (modes::hg_wavefunction(m, x) * std::exp(0.5 * x * x)) *
                                    (modes::hg_wavefunction(n, x) * std::exp(0.5 * x * x));
                        }
                        const double expected = (m == n) ? 1.0 : 0.0;
                        worst = std::max(worst, std::abs(quad - expected));
                    }
                }
                return worst;
            });

    r.check("modes.hg-values", "Hermite-Gaussian special values at the origin", 1e-12, [&] {
        const double v0 = modes::hg_wavefunction(0, 0.0) - std::pow(kPi, -0.25);
        const double v1 = modes::hg_wavefunction(1, 0.0);
        return std::max(std::abs(v0), std::abs(v1));
    });
}

// ---------------------------------------------------------------------------
// wigner suite
// ---------------------------------------------------------------------------

void wigner_suite(Runner& r, const Options& opts) {
    const BasisSpec basis(opts.nmax);

    r.check("wigner.oracle-equivalence",
            "closed-form Wigner function matches the displaced-parity oracle on a grid",
            1e-8, [&] {
                const std::vector<double> axis = {-1.2, -0.6, 0.0, 0.6, 1.2};
                double worst = 0.0;
                for (const ModeIndex& idx : all_modes_up_to(4)) {
                    const phasespace::WignerOracle oracle(
                        fock::lg_state_beamsplitter(idx, basis));
                    for (double x1 : axis)
                        for (double q1 : axis)
                            for (double x2 : axis)
                                for (double q2 : axis) {
                                    const phasespace::PhasePoint4 pt(x1, q1, x2, q2);
                                    worst = std::max(
                                        worst, std::abs(phasespace::wigner_lg(idx, pt) -
                                                        oracle(pt)));
                                }
                }
                return worst;
            });

    r.check("wigner.normalization",
            "the Wigner function integrates to one over phase space", 1e-5, [&] {
                double worst = 0.0;
                for (const ModeIndex& idx : all_modes_up_to(3)) {
                    const double half =
                        5.0 + std::sqrt(static_cast<double>(idx.n));
                    const Rule1D rule = midpoint(48, -half, half);
                    double total = 0.0;
                    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
                            for (std::size_t k = 0; k < rule.nodes.size(); ++k)
                                for (std::size_t l = 0; l < rule.nodes.size(); ++l) {
                                    const double w = rule.weights[i] * rule.weights[j] *
                                                     rule.weights[k] * rule.weights[l];
                                    total += w * phasespace::wigner_lg(
                                                     idx, {rule.nodes[i], rule.nodes[j],
                                                           rule.nodes[k], rule.nodes[l]});
                                }
                    worst = std::max(worst, std::abs(total - 1.0));
                }
                return worst;
            });

    r.check("wigner.boundedness",
            "the Wigner function never exceeds the pure-state bound", 1e-12, [&] {
                std::mt19937 rng(20240915);
                std::uniform_real_distribution<double> coord(-2.5, 2.5);
                double excess = 0.0;
                for (const ModeIndex& idx : all_modes_up_to(4)) {
                    for (int s = 0; s < 200; ++s) {
                        const phasespace::PhasePoint4 pt(coord(rng), coord(rng),
                                                         coord(rng), coord(rng));
                        excess = std::max(excess,
                                          std::abs(phasespace::wigner_lg(idx, pt)) -
                                              1.0 / (kPi * kPi));
                    }
                }
                return std::max(excess, 0.0);
            });

    r.check("wigner.rotational-structure",
            "the Wigner function depends on phase space only through its two invariants",
            1e-12, [&] {
                std::mt19937 rng(77001);
                std::uniform_real_distribution<double> coord(-1.5, 1.5);
                std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
                double worst = 0.0;
                for (const ModeIndex& idx : all_modes_up_to(4)) {
                    for (int s = 0; s < 50; ++s) {
                        const double x1 = coord(rng), q1 = coord(rng), x2 = coord(rng),
                                     q2 = coord(rng);
                        const double th = angle(rng);
                        const double c = std::cos(th), sn = std::sin(th);
                        // simultaneous phase rotation of both modes keeps (Q0, Q2)
                        const phasespace::PhasePoint4 a(x1, q1, x2, q2);
                        const phasespace::PhasePoint4 b(
                            c * x1 + sn * q1, -sn * x1 + c * q1, c * x2 + sn * q2,
                            -sn * x2 + c * q2);
                        worst = std::max(worst, std::abs(phasespace::wigner_lg(idx, a) -
                                                         phasespace::wigner_lg(idx, b)));
                    }
                }
                return worst;
            });

    r.check("wigner.marginal-dual-path",
            "closed-form marginal equals the squared overlap route pointwise", 1e-10, [&] {
                double worst = 0.0;
                for (const ModeIndex& idx : all_modes_up_to(3)) {
                    if (idx.l < 0) continue;
                    for (const Complex& sigma : unit_disc_samples()) {
                        worst = std::max(
                            worst,
                            std::abs(phasespace::marginal_sigma_analytic(idx, sigma) -
                                     phasespace::marginal_sigma_via_overlap(idx, sigma)));
                    }
                }
                return worst;
            });

    r.check("wigner.marginal-vs-quadrature",
            "closed-form marginal equals the gamma-plane integral of the Wigner function",
            1e-5, [&] {
                double worst = 0.0;
                for (const ModeIndex& idx : all_modes_up_to(3)) {
                    if (idx.l < 0) continue;
                    const QuadratureSpec spec{
                        6.0 + std::sqrt(static_cast<double>(idx.n)), 96,
                        QuadratureRule::GaussLegendre};
                    for (const Complex& sigma :
                         {Complex(0.0, 0.0), Complex(0.5, 0.0), Complex(0.7, 0.1),
                          Complex(-0.3, 0.6)}) {
                        worst = std::max(
                            worst,
                            std::abs(phasespace::marginal_sigma_quadrature(idx, sigma,
                                                                           spec) -
                                     phasespace::marginal_sigma_analytic(idx, sigma)));
                    }
                }
                return worst;
            });

    r.check("wigner.exchange-symmetry",
            "flipping the sign of l mirrors the Wigner function under momentum reflection",
            1e-8, [&] {
                std::mt19937 rng(5150);
                std::uniform_real_distribution<double> coord(-1.0, 1.0);
                double worst = 0.0;
                for (const ModeIndex& idx :
                     {ModeIndex(1, 1), ModeIndex(2, 2), ModeIndex(3, 1), ModeIndex(3, 3)}) {
                    const phasespace::WignerOracle plus(
                        fock::lg_state_beamsplitter(idx, basis));
                    const phasespace::WignerOracle minus(fock::lg_state_beamsplitter(
                        ModeIndex(idx.n, -idx.l), basis));
                    for (int s = 0; s < 10; ++s) {
                        const double x1 = coord(rng), q1 = coord(rng), x2 = coord(rng),
                                     q2 = coord(rng);
                        worst = std::max(
                            worst, std::abs(plus({x1, q1, x2, q2}) -
                                            minus({x1, -q1, x2, -q2})));
                    }
                }
                return worst;
            });

    r.check("wigner.sigma-gamma-roundtrip",
            "the entangled-coordinate map is a volume-preserving bijection", 1e-12, [&] {
                std::mt19937 rng(99123);
                std::uniform_real_distribution<double> coord(-2.0, 2.0);
                double worst = 0.0;
                for (int s = 0; s < 100; ++s) {
                    const phasespace::PhasePoint4 pt(coord(rng), coord(rng), coord(rng),
                                                     coord(rng));
                    const phasespace::SigmaGamma sg = phasespace::to_sigma_gamma(pt);
                    const phasespace::PhasePoint4 back = phasespace::from_sigma_gamma(sg);
                    worst = std::max({worst, std::abs(back.x1 - pt.x1),
                                      std::abs(back.p1 - pt.p1), std::abs(back.x2 - pt.x2),
                                      std::abs(back.p2 - pt.p2)});
                    worst = std::max(worst, std::abs(std::norm(sg.sigma) +
                                                     std::norm(sg.gamma) - pt.q0()));
                }
                return worst;
            });
}

// ---------------------------------------------------------------------------
// transforms suite
// ---------------------------------------------------------------------------

transforms::SampledField overlap_field(const ModeIndex& idx) {
    return transforms::SampledField(
        [idx](Complex z) { return modes::tau_overlap_lg(idx, z); },
        QuadratureSpec{6.0, 128, QuadratureRule::GaussLegendre});
}

void transforms_suite(Runner& r, const Options&) {
    r.check("transforms.frft-eigenrelation",
            "the tau-plane wavefunctions are eigenfunctions of the fractional Fourier transform",
            1e-5, [&] {
                double worst = 0.0;
                for (const ModeIndex& idx : {ModeIndex(0, 0), ModeIndex(1, 1),
                                             ModeIndex(2, 0), ModeIndex(2, 2)}) {
                    for (const double alpha : {0.7, 0.25 * kPi, 0.5 * kPi}) {
                        worst = std::max(worst, transforms::frft_eigen_residual(
                                                    idx, transforms::FrftOrder(alpha)));
                    }
                }
                return worst;
            });

    r.check("transforms.frft-additivity",
            "composing two fractional orders multiplies the eigenvalues", 2e-5, [&] {
                const double alpha = 0.7, beta = 0.9;
                double worst = 0.0;
                for (const ModeIndex& idx : {ModeIndex(1, 1), ModeIndex(2, 0)}) {
                    const transforms::SampledField field = overlap_field(idx);
                    const transforms::FrftEvaluator inner(field,
                                                          transforms::FrftOrder(alpha));
                    const transforms::SampledField mid(
                        [&inner](Complex z) { return inner(z); }, field.spec());
                    const transforms::FrftEvaluator outer(mid,
                                                          transforms::FrftOrder(beta));
                    const Complex eig =
                        std::exp(-kI * (alpha + beta) * static_cast<double>(idx.n));
                    for (const Complex& tau :
                         {Complex(0.0, 0.0), Complex(0.5, 0.0), Complex(-0.3, 0.4),
                          Complex(0.8, -0.6), Complex(-0.7, -0.2)}) {
                        worst = std::max(
                            worst, std::abs(outer(tau) -
                                            eig * modes::tau_overlap_lg(idx, tau)));
                    }
                }
                return worst;
            });

    r.check("transforms.frft-unitary-invariance",
            "number-conserving unitaries keep the tau wavefunction an eigenfunction", 1e-5,
            [&] {
                const int m_in = 1, n_in = 1;  // total excitation 2
                const BasisSpec small(4);
                const TwoModeState psi = [&] {
                    fock::Vector v = fock::Vector::Zero(small.dimension());
                    v[small.index_of(m_in, n_in)] = 1.0;
                    const OperatorMatrix b = fock::beam_splitter(kPi / 3.0, kPi / 5.0, small);
                    return TwoModeState(small, b.entries * v);
                }();
                const auto field_fn = [&](Complex z) {
                    Complex total = 0.0;
                    for (int i = 0; i < psi.coeffs.size(); ++i) {
                        if (std::abs(psi.coeffs[i]) < 1e-15) continue;
                        const auto [k1, k2] = small.ket_at(i);
                        total += psi.coeffs[i] * modes::tau_overlap_fock(k1, k2, z);
                    }
                    return total;
                };
                const transforms::SampledField field(
                    field_fn, QuadratureSpec{6.0, 128, QuadratureRule::GaussLegendre});
                const double alpha = 0.8;
                const Complex eig = std::exp(-kI * alpha * static_cast<double>(m_in + n_in));
                double worst = 0.0;
                for (const Complex& tau : {Complex(0.0, 0.0), Complex(0.4, 0.3),
                                           Complex(-0.6, 0.5), Complex(0.9, -0.2)}) {
                    worst = std::max(
                        worst, std::abs(transforms::frft(field, transforms::FrftOrder(alpha),
                                                         tau) -
                                        eig * field_fn(tau)));
                }
                return worst;
            });

    r.check("transforms.frft-quarter-gaussian",
            "the quarter-order transform of a shifted Gaussian matches its closed form",
            1e-5, [&] {
                const Complex c(0.8, -0.3);
                const transforms::SampledField field(
                    [c](Complex z) { return std::exp(-0.5 * std::norm(z - c)); },
                    QuadratureSpec{7.0, 128, QuadratureRule::GaussLegendre});
                double worst = 0.0;
                for (const Complex& tau : {Complex(0.3, 0.2), Complex(-0.5, 0.7),
                                           Complex(1.0, 0.0), Complex(-0.2, -0.9)}) {
                    const Complex expected =
                        std::exp(-0.5 * std::norm(tau) -
                                 kI * 0.5 * (std::conj(c) * tau + c * std::conj(tau)));
                    worst = std::max(
                        worst,
                        std::abs(transforms::frft(field, transforms::FrftOrder(0.5 * kPi),
                                                  tau) -
                                 expected));
                }
                return worst;
            });

    r.check("transforms.gwt-diagonal-values",
            "the diagonal generalized Wigner transform reduces to the number-state Wigner function",
            1e-8, [&] {
                double worst = std::abs(transforms::gwt(0, 0, 0.0, 0.0) - 1.0 / kPi);
                worst = std::max(worst,
                                 std::abs(transforms::gwt(1, 1, 0.0, 0.0) + 1.0 / kPi));
                worst = std::max(worst, std::abs(transforms::gwt(0, 1, 0.0, 0.0)));
                worst = std::max(
                    worst, std::abs(transforms::gwt(0, 0, 0.7, -0.4) -
                                    std::exp(-0.7 * 0.7 - 0.4 * 0.4) / kPi));
                return worst;
            });

    r.check("transforms.gwt-conjugate-symmetry",
            "swapping the two modes conjugates the generalized Wigner transform", 1e-10,
            [&] {
                double worst = 0.0;
                for (const auto& [m, n] : std::vector<std::pair<int, int>>{
                         {0, 1}, {1, 2}, {2, 3}, {0, 3}}) {
                    for (const auto& [x, p] : std::vector<std::pair<double, double>>{
                             {0.0, 0.0}, {0.5, 0.3}, {-0.8, 0.6}}) {
                        worst = std::max(
                            worst, std::abs(transforms::gwt(m, n, x, p) -
                                            std::conj(transforms::gwt(n, m, x, p))));
                    }
                }
                return worst;
            });

    r.check("transforms.gwt-marginal",
            "the diagonal generalized Wigner transform integrates to one", 1e-6, [&] {
                const Rule1D rule = gauss_legendre(64, -6.0, 6.0);
                double worst = 0.0;
                for (int m = 0; m <= 2; ++m) {
                    Complex total = 0.0;
                    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
                            total += rule.weights[i] * rule.weights[j] *
                                     transforms::gwt(m, m, rule.nodes[i], rule.nodes[j]);
                    worst = std::max(worst, std::abs(total - 1.0));
                }
                return worst;
            });

    r.check("transforms.gwt-lg-identity",
            "the LG overlap equals the generalized Wigner transform of two HG modes", 1e-6,
            [&] {
                double worst = 0.0;
                for (const auto& [m, n] : std::vector<std::pair<int, int>>{
                         {0, 0}, {0, 2}, {1, 1}, {1, 3}}) {
                    for (const Complex& tau :
                         {Complex(0.0, 0.0), Complex(0.6, 0.4), Complex(-0.5, 0.9),
                          Complex(1.0, -0.8)}) {
                        worst = std::max(worst,
                                         transforms::gwt_lg_identity_residual(m, n, tau));
                    }
                }
                return worst;
            });

    r.check("transforms.schmidt-overlap",
            "the Schmidt route expresses the Fock overlap as a parity-twisted transform",
            1e-6, [&] {
                double worst = transforms::schmidt_overlap_check(0, 0, Complex(1.0, 0.0));
                worst = std::max(worst,
                                 transforms::schmidt_overlap_check(1, 2, Complex(0.0, 0.5)));
                worst = std::max(worst,
                                 transforms::schmidt_overlap_check(2, 2, Complex(0.3, 0.3)));
                return worst;
            });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"fock", "modes", "wigner", "transforms",
                                                   "all"};
    return names;
}

Report run_suite(const std::string& suite, const Options& opts) {
    Report report;
    report.suite = suite;
    Runner runner(report);
    if (suite == "fock") {
        fock_suite(runner, opts);
    } else if (suite == "modes") {
        modes_suite(runner, opts);
    } else if (suite == "wigner") {
        wigner_suite(runner, opts);
    } else if (suite == "transforms") {
        transforms_suite(runner, opts);
    } else if (suite == "all") {
        fock_suite(runner, opts);
        modes_suite(runner, opts);
        wigner_suite(runner, opts);
        transforms_suite(runner, opts);
    } else {
        throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    }
    report.pass = true;
    for (const CheckRecord& rec : report.checks) report.pass = report.pass && rec.pass;
    return report;
}

}  // namespace lgkit::verify
