#pragma once

#include "lgkit/errors.hpp"
#include "lgkit/mode_index.hpp"

#include <Eigen/Dense>

#include <complex>
#include <utility>

namespace lgkit::fock {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Truncated two-mode Fock basis: all |k1,k2> with k1 + k2 <= nmax,
/// enumerated by ascending total excitation, then ascending k2. States of one
/// total excitation therefore occupy a contiguous index block, which keeps
/// number-conserving operators block-diagonal.
class BasisSpec {
public:
    explicit BasisSpec(int max_total_excitation);

    int nmax() const { return nmax_; }
    int dimension() const { return (nmax_ + 1) * (nmax_ + 2) / 2; }

    int index_of(int k1, int k2) const;
    std::pair<int, int> ket_at(int index) const;

    /// Index of the first state with the given total excitation.
    static int block_offset(int total) { return total * (total + 1) / 2; }
    static int block_size(int total) { return total + 1; }

    /// Dimension of the sub-basis with total excitation <= total.
    static int guarded_dimension(int total) { return block_offset(total + 1); }

    bool operator==(const BasisSpec& other) const { return nmax_ == other.nmax_; }

private:
    int nmax_;
};

/// Dense complex coefficient vector over a truncated two-mode Fock basis.
struct TwoModeState {
    BasisSpec basis;
    Vector coeffs;

    TwoModeState(const BasisSpec& b, Vector c);

    double norm() const { return coeffs.norm(); }
    TwoModeState normalized() const;

    /// Highest total excitation carrying a coefficient above the threshold.
    int support_max_total(double threshold = 1e-12) const;
};

/// Dense complex matrix over a truncated two-mode Fock basis.
struct OperatorMatrix {
    BasisSpec basis;
    Matrix entries;

    OperatorMatrix(const BasisSpec& b, Matrix m);

    OperatorMatrix adjoint() const { return {basis, entries.adjoint()}; }
    Vector apply(const Vector& v) const { return entries * v; }
};

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(Complex scalar, const OperatorMatrix& a);

/// Circular (left/right rotating) combinations of the two Cartesian modes;
/// Plus carries +1 unit of orbital angular momentum per photon, Minus -1.
enum class Circular { Plus, Minus };

// --- elementary operators -------------------------------------------------

OperatorMatrix annihilation(int mode, const BasisSpec& basis);  // mode is 1 or 2
OperatorMatrix creation(int mode, const BasisSpec& basis);
OperatorMatrix number_operator(const BasisSpec& basis);
OperatorMatrix angular_momentum_operator(const BasisSpec& basis);
OperatorMatrix position_quadrature(int mode, const BasisSpec& basis);  // X_i
OperatorMatrix momentum_quadrature(int mode, const BasisSpec& basis);  // P_i
OperatorMatrix circular_annihilation(Circular which, const BasisSpec& basis);
OperatorMatrix circular_creation(Circular which, const BasisSpec& basis);

// --- matrix exponentials ---------------------------------------------------

/// Documented accuracy target of the dense matrix exponential.
inline constexpr double kExpmTol = 1e-13;

/// Scaling-and-squaring with a tolerance-bounded Taylor core.
Matrix expm_dense(const Matrix& a, double tol = kExpmTol);

/// Exponential of a number-conserving generator, computed block-by-block
/// over total-excitation blocks (exact per block, no truncation leakage).
OperatorMatrix expm_blockwise(const OperatorMatrix& generator);

/// exp(i (pi/2) Jx) with Jx = (a1^dag a2 + a2^dag a1)/2: maps the Cartesian
/// Fock basis onto the circular one, the 50:50 beam-splitter rotation.
OperatorMatrix jx_rotation(const BasisSpec& basis);

/// Beam-splitter unitary B(theta, phi) =
/// exp[(theta/2)(a1^dag a2 e^{i phi} - a1 a2^dag e^{-i phi})].
OperatorMatrix beam_splitter(double theta, double phi, const BasisSpec& basis);

// --- state construction -----------------------------------------------------

/// |n,l> by repeated application of the circular creation operators to the
/// vacuum, scaled by 1/sqrt(m_rho! n_rho!).
TwoModeState lg_state_ladder(const ModeIndex& idx, const BasisSpec& basis);

/// |n,l> as the Jx rotation applied to the Fock ket |m_rho, n_rho>; equals
/// lg_state_ladder identically (the two routes agree including phase).
TwoModeState lg_state_beamsplitter(const ModeIndex& idx, const BasisSpec& basis);

/// Series term cap and tail tolerance of the entangled-state builders.
inline constexpr int kEsrSeriesCap = 500;
inline constexpr double kEsrSeriesTol = 1e-14;

/// Unnormalized truncation of the entangled state
///   |eta> = exp(-|eta|^2/2) exp(eta A+^dag - eta^* A-^dag + A+^dag A-^dag) |00>,
/// built by a tolerance-controlled operator-exponential series on the vacuum
/// vector. Coefficients inside the basis are exact (the generator only raises
/// excitation); the state as a whole is the projection of a delta-normalized
/// ket, so identities involving it must be read on a guarded sub-basis.
/// Documented accuracy envelope: |eta| <= sqrt(nmax)/3.
TwoModeState build_eta_state(Complex eta, const BasisSpec& basis);

/// Same construction for |tau> with generator
/// tau a1^dag - tau^* a2^dag + a1^dag a2^dag.
TwoModeState build_tau_state(Complex tau, const BasisSpec& basis);

// --- verification-style operations ------------------------------------------

/// Max entrywise deviation of the three-factor product
/// e^{i a1^dag a2} exp[(a1^dag a1 - a2^dag a2) ln2 / 2] e^{i a2^dag a1}
/// from jx_rotation. Block-diagonal on both sides, so checked everywhere.
double jx_decomposition_check(const BasisSpec& basis);

/// Max deviation of the four quadrature conjugation identities
///   U^dag X1 U = (X1 - P2)/sqrt2,  U^dag P1 U = (P1 + X2)/sqrt2,
///   U^dag X2 U = (X2 - P1)/sqrt2,  U^dag P2 U = (P2 + X1)/sqrt2,
/// U = jx_rotation, measured on the sub-basis with total excitation
/// <= nmax - 2 (quadratures couple adjacent blocks).
double quadrature_covariance_check(const BasisSpec& basis);

/// Relative residual ||P(op v - lambda v)|| / ||P v|| with P the projector
/// onto total excitation <= nmax - guard. Top rows of truncated ladder
/// matrices are wrong by construction, hence the guard.
double eigen_residual_guarded(const OperatorMatrix& op, const TwoModeState& state,
                              Complex lambda, int guard = 2);

/// Max entrywise magnitude on the sub-basis with total excitation <= total.
double guarded_max_abs(const Matrix& m, int total);

}  // namespace lgkit::fock
