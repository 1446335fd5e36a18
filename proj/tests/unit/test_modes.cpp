#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgkit/fock_space.hpp"
#include "lgkit/modes.hpp"
#include "lgkit/quadrature.hpp"

#include <cmath>
#include <complex>

using namespace lgkit;
using namespace lgkit::modes;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);
}  // namespace

TEST_CASE("eta and tau points expose their derived coordinates") {
    const EtaPoint p(Complex(3.0, 4.0));
    CHECK(p.radius() == doctest::Approx(5.0));
    CHECK(p.angle() == doctest::Approx(std::atan2(4.0, 3.0)));
    const TauPoint t(Complex(-1.5, 2.5));
    CHECK(t.tau1() == -1.5);
    CHECK(t.tau2() == 2.5);
}

TEST_CASE("lg wavefunction frozen values") {
    // ground mode at r = 1: all polynomial factors are 1
    const Complex v = lg_wavefunction_eta(ModeIndex(0, 0), std::polar(1.0, 0.77));
    CHECK(std::abs(v - std::exp(-0.5)) < 1e-14);
    CHECK(std::abs(v) == doctest::Approx(0.6065306597126334).epsilon(1e-12));

    // the r^{|l|} factor kills the origin for l != 0
    CHECK(std::abs(lg_wavefunction_eta(ModeIndex(2, 2), Complex(0.0, 0.0))) == 0.0);

    // magnitude is independent of the angle
    for (int k = 0; k < 8; ++k) {
        const double phi = 2.0 * kPi * k / 8.0;
        CHECK(std::abs(lg_wavefunction_eta(ModeIndex(3, 1), std::polar(1.2, phi))) ==
              doctest::Approx(std::abs(lg_wavefunction_eta(ModeIndex(3, 1),
                                                           Complex(1.2, 0.0))))
                  .epsilon(1e-12));
    }
}

TEST_CASE("lg wavefunction carries e^{-il phi} with the signed l") {
    for (const ModeIndex idx : {ModeIndex(2, 2), ModeIndex(2, -2), ModeIndex(3, 1)}) {
        const double r = 0.9;
        const Complex base = lg_wavefunction_eta(idx, Complex(r, 0.0));
        for (int k = 1; k < 12; ++k) {
            const double phi = 2.0 * kPi * k / 12.0;
            const Complex rotated = lg_wavefunction_eta(idx, std::polar(r, phi));
            CHECK(std::abs(rotated * std::exp(kI * static_cast<double>(idx.l) * phi) -
                           base) < 1e-12);
        }
    }
}

TEST_CASE("normalization through the polar plane integral") {
    for (const ModeIndex idx : {ModeIndex(1, 1), ModeIndex(2, 0), ModeIndex(3, -1)}) {
        const PolarRule rule =
            make_polar_rule(6.0 + std::sqrt(static_cast<double>(idx.n)), 96, 64);
        double total = 0.0;
        for (std::size_t i = 0; i < rule.r.size(); ++i)
            for (std::size_t j = 0; j < rule.phi.size(); ++j)
                total += rule.weight[i * rule.phi.size() + j] *
                         std::norm(lg_wavefunction_eta(idx,
                                                       std::polar(rule.r[i], rule.phi[j])));
        CHECK(std::abs(total / kPi - 1.0) < 1e-6);
    }
}

TEST_CASE("radial equation residual magnitudes and second-order convergence") {
    struct Case {
        ModeIndex idx;
        double r;
        double bound;
    };
    for (const Case c : {Case{ModeIndex(0, 0), 1.0, 1e-5}, Case{ModeIndex(2, 0), 1.5, 1e-4},
                         Case{ModeIndex(3, 1), 0.8, 1e-4}}) {
        const double coarse = radial_equation_residual(c.idx, c.r, 1e-3);
        CHECK(coarse < c.bound);
        const double fine = radial_equation_residual(c.idx, c.r, 5e-4);
        const double ratio = coarse / fine;
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
    }
    CHECK_THROWS_AS(radial_equation_residual(ModeIndex(0, 0), 1e-4, 1e-3),
                    std::invalid_argument);
}

TEST_CASE("hermite-gaussian frozen values and orthonormality") {
    CHECK(hg_wavefunction(0, 0.0) == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-14));
    CHECK(hg_wavefunction(0, 0.0) == doctest::Approx(0.7511255444649425).epsilon(1e-12));
    CHECK(hg_wavefunction(1, 0.0) == 0.0);

    const Rule1D rule = gauss_hermite(48);
    for (int m = 0; m <= 6; ++m) {
        for (int n = m; n <= 6; ++n) {
            double quad = 0.0;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                const double x = rule.nodes[k];
                quad += rule.weights[k] * hg_wavefunction(m, x) * hg_wavefunction(n, x) *
                        std::exp(x * x);
            }
            CHECK(std::abs(quad - (m == n ? 1.0 : 0.0)) < 1e-8);
        }
    }
}

TEST_CASE("tau overlap with Fock states: frozen values") {
    const Complex tau(0.3, -0.8);
    CHECK(std::abs(tau_overlap_fock(0, 0, tau) - std::exp(-0.5 * std::norm(tau))) <
          1e-14);

    // (1,0) at tau = 1+i: H_{1,0}(tau^*, tau) = tau^*
    const Complex v10 = tau_overlap_fock(1, 0, Complex(1.0, 1.0));
    CHECK(std::abs(v10 - Complex(1.0, -1.0) * std::exp(-1.0)) < 1e-14);

    // (1,1) at tau = 1: H_{1,1}(1,1) = 0
    CHECK(std::abs(tau_overlap_fock(1, 1, Complex(1.0, 0.0))) < 1e-15);
}

TEST_CASE("tau overlap with |n,l>: frozen values and the Fock-space oracle") {
    const Complex tau(0.5, 0.3);
    CHECK(std::abs(tau_overlap_lg(ModeIndex(0, 0), tau) -
                   std::exp(-0.5 * std::norm(tau))) < 1e-14);

    const fock::BasisSpec basis(40);
    const auto oracle = [&](const ModeIndex& idx, Complex t) {
        const fock::TwoModeState lg = fock::lg_state_beamsplitter(idx, basis);
        const fock::TwoModeState ts = fock::build_tau_state(t, basis);
        return ts.coeffs.dot(lg.coeffs);
    };
    CHECK(std::abs(tau_overlap_lg(ModeIndex(1, 1), tau) - oracle(ModeIndex(1, 1), tau)) <
          1e-5);
    CHECK(std::abs(tau_overlap_lg(ModeIndex(2, 2), Complex(0.0, 0.0)) -
                   oracle(ModeIndex(2, 2), Complex(0.0, 0.0))) < 1e-6);
    CHECK(std::abs(tau_overlap_lg(ModeIndex(3, 1), Complex(-0.4, 0.7)) -
                   oracle(ModeIndex(3, 1), Complex(-0.4, 0.7))) < 1e-5);

    CHECK_THROWS_AS(tau_overlap_lg(ModeIndex(1, -1), tau), InvalidModeIndex);
}
