#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgkit/fock_space.hpp"
#include "lgkit/modes.hpp"

#include <cmath>
#include <complex>

using namespace lgkit;
using namespace lgkit::fock;

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

// Independent exponential oracle for small blocks: a long plain Taylor sum,
// no scaling, no block logic.
Matrix taylor_exp_oracle(const Matrix& a) {
    Matrix term = Matrix::Identity(a.rows(), a.cols());
    Matrix sum = term;
    for (int k = 1; k <= 80; ++k) {
        term = (term * a) / static_cast<double>(k);
        sum += term;
    }
    return sum;
}

Vector basis_ket(const BasisSpec& basis, int k1, int k2) {
    Vector v = Vector::Zero(basis.dimension());
    v[basis.index_of(k1, k2)] = 1.0;
    return v;
}

}  // namespace

TEST_CASE("basis enumeration: ascending total excitation, then ascending k2") {
    const BasisSpec basis(3);
    CHECK(basis.dimension() == 10);
    CHECK(basis.ket_at(0) == std::pair<int, int>{0, 0});
    CHECK(basis.ket_at(1) == std::pair<int, int>{1, 0});
    CHECK(basis.ket_at(2) == std::pair<int, int>{0, 1});
    CHECK(basis.ket_at(3) == std::pair<int, int>{2, 0});
    CHECK(basis.ket_at(5) == std::pair<int, int>{0, 2});
    for (int i = 0; i < basis.dimension(); ++i) {
        const auto [k1, k2] = basis.ket_at(i);
        CHECK(basis.index_of(k1, k2) == i);
    }
    CHECK_THROWS_AS(basis.index_of(3, 1), std::out_of_range);
    CHECK_THROWS_AS(BasisSpec(-1), std::invalid_argument);
}

TEST_CASE("mode index validity and derived circular numbers") {
    CHECK(ModeIndex::valid(3, 1));
    CHECK(ModeIndex::valid(3, -3));
    CHECK_FALSE(ModeIndex::valid(3, 2));
    CHECK_FALSE(ModeIndex::valid(2, 3));
    CHECK_THROWS_AS(ModeIndex(2, 1), InvalidModeIndex);
    const ModeIndex idx(5, -3);
    CHECK(idx.m_rho() == 1);
    CHECK(idx.n_rho() == 4);
    CHECK(idx.m_rho() + idx.n_rho() == idx.n);
    CHECK(idx.m_rho() - idx.n_rho() == idx.l);
    CHECK(idx.radial_degree() == 1);
    CHECK(all_modes_up_to(4).size() == 15);
}

TEST_CASE("annihilation ladder rules") {
    const BasisSpec basis(4);
    const OperatorMatrix a1 = annihilation(1, basis);
    const OperatorMatrix a2 = annihilation(2, basis);

    const Vector out10 = a1.apply(basis_ket(basis, 1, 0));
    CHECK(std::abs(out10[basis.index_of(0, 0)] - 1.0) < 1e-15);
    CHECK(out10.norm() == doctest::Approx(1.0));

    const Vector out20 = a1.apply(basis_ket(basis, 2, 0));
    CHECK(std::abs(out20[basis.index_of(1, 0)] - std::sqrt(2.0)) < 1e-15);

    CHECK(a2.apply(basis_ket(basis, 0, 0)).norm() == 0.0);
}

TEST_CASE("number and angular momentum operators") {
    const BasisSpec basis(6);
    const OperatorMatrix num = number_operator(basis);
    const OperatorMatrix oam = angular_momentum_operator(basis);

    CHECK(num.apply(basis_ket(basis, 0, 0)).norm() == 0.0);
    CHECK(oam.apply(basis_ket(basis, 0, 0)).norm() == 0.0);

    // (|1,0> + i|0,1>)/sqrt2 is the single-excitation +1 eigenvector
    Vector v = (basis_ket(basis, 1, 0) + kI * basis_ket(basis, 0, 1)) / std::sqrt(2.0);
    CHECK((oam.apply(v) - v).norm() < 1e-14);

    // N as a product identity
    const OperatorMatrix a1 = annihilation(1, basis);
    const OperatorMatrix a2 = annihilation(2, basis);
    const Matrix rebuilt = (a1.adjoint() * a1 + a2.adjoint() * a2).entries;
    CHECK((rebuilt - num.entries).cwiseAbs().maxCoeff() < 1e-13);

    // Hermiticity
    CHECK((num.entries - num.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((oam.entries - oam.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    const OperatorMatrix x1 = position_quadrature(1, basis);
    const OperatorMatrix p2 = momentum_quadrature(2, basis);
    CHECK((x1.entries - x1.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((p2.entries - p2.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("circular mode commutators on the guarded sub-basis") {
    const BasisSpec basis(8);
    const OperatorMatrix ap = circular_annihilation(Circular::Plus, basis);
    const OperatorMatrix am = circular_annihilation(Circular::Minus, basis);
    const Matrix eye = Matrix::Identity(basis.dimension(), basis.dimension());

    CHECK(guarded_max_abs((ap * ap.adjoint() - ap.adjoint() * ap).entries - eye, 6) <
          1e-12);
    CHECK(guarded_max_abs((am * am.adjoint() - am.adjoint() * am).entries - eye, 6) <
          1e-12);
    CHECK(guarded_max_abs((ap * am.adjoint() - am.adjoint() * ap).entries, 6) < 1e-12);
    CHECK(guarded_max_abs((am * ap.adjoint() - ap.adjoint() * am).entries, 6) < 1e-12);
}

TEST_CASE("expm_dense against the plain Taylor oracle") {
    Matrix a(2, 2);
    a << Complex(0.0, 0.3), Complex(0.7, -0.1), Complex(-0.7, -0.1), Complex(0.0, -0.3);
    CHECK((expm_dense(a) - taylor_exp_oracle(a)).cwiseAbs().maxCoeff() < 1e-13);

    // scaling path: larger norm
    Matrix b = 6.0 * a;
    CHECK((expm_dense(b) - taylor_exp_oracle(b)).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("jx rotation: vacuum fixed, single excitation rotated") {
    const BasisSpec basis(4);
    const OperatorMatrix u = jx_rotation(basis);

    CHECK((u.apply(basis_ket(basis, 0, 0)) - basis_ket(basis, 0, 0)).norm() < 1e-13);

    const Vector expected =
        (basis_ket(basis, 1, 0) + kI * basis_ket(basis, 0, 1)) / std::sqrt(2.0);
    CHECK((u.apply(basis_ket(basis, 1, 0)) - expected).norm() < 1e-13);

    // unitary on the whole (block-diagonal) truncated space
    const Matrix gram = (u.adjoint() * u).entries;
    CHECK((gram - Matrix::Identity(basis.dimension(), basis.dimension()))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
}

TEST_CASE("beam splitter frozen 2x2 block values") {
    const BasisSpec basis(3);

    const OperatorMatrix id = beam_splitter(0.0, 1.234, basis);
    CHECK((id.entries - Matrix::Identity(basis.dimension(), basis.dimension()))
              .cwiseAbs()
              .maxCoeff() < 1e-14);

    const Matrix diff = beam_splitter(0.5 * kPi, 0.5 * kPi, basis).entries -
                        jx_rotation(basis).entries;
    CHECK(diff.cwiseAbs().maxCoeff() < 1e-10);

    // B(pi/2, 0)|1,0> = cos(pi/4)|1,0> - sin(pi/4)|0,1>
    const OperatorMatrix b = beam_splitter(0.5 * kPi, 0.0, basis);
    const Vector out = b.apply(basis_ket(basis, 1, 0));
    const Vector expected = std::cos(0.25 * kPi) * basis_ket(basis, 1, 0) -
                            std::sin(0.25 * kPi) * basis_ket(basis, 0, 1);
    CHECK((out - expected).norm() < 1e-13);
}

TEST_CASE("ladder construction of |n,l>") {
    const BasisSpec basis(8);

    const TwoModeState vac = lg_state_ladder(ModeIndex(0, 0), basis);
    CHECK((vac.coeffs - basis_ket(basis, 0, 0)).norm() < 1e-15);

    const TwoModeState plus = lg_state_ladder(ModeIndex(1, 1), basis);
    const Vector expected_plus =
        (basis_ket(basis, 1, 0) + kI * basis_ket(basis, 0, 1)) / std::sqrt(2.0);
    CHECK((plus.coeffs - expected_plus).norm() < 1e-14);

    // l = -1 is the i-rotated partner of (|1,0> - i|0,1>)/sqrt2
    const TwoModeState minus = lg_state_ladder(ModeIndex(1, -1), basis);
    const Vector naive =
        (basis_ket(basis, 1, 0) - kI * basis_ket(basis, 0, 1)) / std::sqrt(2.0);
    const Complex ratio = minus.coeffs[basis.index_of(1, 0)] / naive[basis.index_of(1, 0)];
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-13);
    CHECK((minus.coeffs - ratio * naive).norm() < 1e-13);
    CHECK(std::abs(ratio - kI) < 1e-13);

    CHECK(vac.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(plus.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(minus.norm() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(lg_state_ladder(ModeIndex(10, 0), BasisSpec(4)), CutoffTooSmall);
}

TEST_CASE("beam-splitter construction matches the block-exponential oracle") {
    const BasisSpec basis(8);

    CHECK((lg_state_beamsplitter(ModeIndex(0, 0), basis).coeffs -
           basis_ket(basis, 0, 0))
              .norm() < 1e-15);
    CHECK((lg_state_beamsplitter(ModeIndex(1, 1), basis).coeffs -
           lg_state_ladder(ModeIndex(1, 1), basis).coeffs)
              .norm() < 1e-13);

    // (2,0): exp(i pi/2 Jx) on the two-excitation block applied to |1,1>,
    // with the block generator assembled by hand and exponentiated by the
    // plain Taylor oracle.
    Matrix jx2 = Matrix::Zero(3, 3);
    jx2(0, 1) = jx2(1, 0) = 0.5 * std::sqrt(2.0);   // <2,0|Jx|1,1> etc.
    jx2(1, 2) = jx2(2, 1) = 0.5 * std::sqrt(2.0);
    const Matrix u2 = taylor_exp_oracle(kI * (0.5 * kPi) * jx2);
    const TwoModeState got = lg_state_beamsplitter(ModeIndex(2, 0), basis);
    for (int local = 0; local < 3; ++local) {
        const int index = BasisSpec::block_offset(2) + local;
        CHECK(std::abs(got.coeffs[index] - u2(local, 1)) < 1e-13);
    }

    // agreement with the ladder route for every valid (n,l), n <= 6
    for (const ModeIndex& idx : all_modes_up_to(6)) {
        const TwoModeState a = lg_state_ladder(idx, basis);
        const TwoModeState b = lg_state_beamsplitter(idx, basis);
        CHECK((a.coeffs - b.coeffs).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("jx decomposition residuals shrink with the advertised cutoffs") {
    CHECK(jx_decomposition_check(BasisSpec(0)) == 0.0);
    CHECK(jx_decomposition_check(BasisSpec(4)) < 1e-10);
    CHECK(jx_decomposition_check(BasisSpec(8)) < 1e-9);
}

TEST_CASE("quadrature covariance identities") {
    CHECK(quadrature_covariance_check(BasisSpec(2)) < 1e-12);
    CHECK(quadrature_covariance_check(BasisSpec(10)) < 1e-10);
}

TEST_CASE("entangled eta state: guarded eigen-residuals and overlaps") {
    const BasisSpec basis(40);
    const OperatorMatrix x1 = position_quadrature(1, basis);
    const OperatorMatrix p1 = momentum_quadrature(1, basis);
    const OperatorMatrix x2 = position_quadrature(2, basis);
    const OperatorMatrix p2 = momentum_quadrature(2, basis);
    const OperatorMatrix op1 = x1 - x2 - p1 + p2;
    const OperatorMatrix op2 = p1 + p2 - x1 - x2;

    for (const Complex eta : {Complex(0.4, 0.3), Complex(-0.8, 0.5), Complex(0.0, 1.0)}) {
        const TwoModeState st = build_eta_state(eta, basis);
        CHECK(eigen_residual_guarded(op1, st, 2.0 * eta.real()) < 1e-6);
        CHECK(eigen_residual_guarded(op2, st, 2.0 * eta.imag()) < 1e-6);
    }

    // vacuum overlap of the eta state is the Gaussian factor
    const Complex eta(0.3, -0.6);
    const TwoModeState st = build_eta_state(eta, basis);
    CHECK(std::abs(st.coeffs[basis.index_of(0, 0)] - std::exp(-0.5 * std::norm(eta))) <
          1e-13);
}

TEST_CASE("entangled tau state: Fock overlaps and guarded eigen-residuals") {
    const BasisSpec basis(40);
    const Complex tau(0.5, -0.2);
    const TwoModeState st = build_tau_state(tau, basis);

    // <0,0|tau> = e^{-|tau|^2/2}, <1,0|tau> = tau e^{-|tau|^2/2}
    CHECK(std::abs(st.coeffs[basis.index_of(0, 0)] - std::exp(-0.5 * std::norm(tau))) <
          1e-13);
    CHECK(std::abs(st.coeffs[basis.index_of(1, 0)] -
                   tau * std::exp(-0.5 * std::norm(tau))) < 1e-13);
    // so that conj gives <tau|1,0> = tau^* e^{-|tau|^2/2}
    CHECK(std::abs(std::conj(st.coeffs[basis.index_of(1, 0)]) -
                   modes::tau_overlap_fock(1, 0, tau)) < 1e-13);

    const OperatorMatrix op1 = position_quadrature(1, basis) - position_quadrature(2, basis);
    const OperatorMatrix op2 = momentum_quadrature(1, basis) + momentum_quadrature(2, basis);
    const double sqrt2 = std::sqrt(2.0);
    for (const Complex t : {Complex(0.4, 0.3), Complex(-0.7, 0.6), Complex(0.0, 0.9)}) {
        const TwoModeState state = build_tau_state(t, basis);
        CHECK(eigen_residual_guarded(op1, state, sqrt2 * t.real()) < 1e-6);
        CHECK(eigen_residual_guarded(op2, state, sqrt2 * t.imag()) < 1e-6);
    }
}

TEST_CASE("operator algebra guards") {
    const BasisSpec a(4), b(5);
    CHECK_THROWS_AS(annihilation(3, a), std::invalid_argument);
    CHECK_THROWS_AS(annihilation(1, a) * annihilation(1, b), std::invalid_argument);
    CHECK_THROWS_AS(expm_blockwise(position_quadrature(1, a)), std::invalid_argument);
    CHECK_NOTHROW(expm_blockwise(number_operator(a)));
}
