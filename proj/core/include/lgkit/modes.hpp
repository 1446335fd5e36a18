#pragma once

#include "lgkit/mode_index.hpp"

#include <complex>

namespace lgkit::modes {

using Complex = std::complex<double>;

/// Point of the eta plane, kept with its polar reading r = |eta|,
/// phi = arg(eta) in (-pi, pi].
struct EtaPoint {
    Complex eta;

    EtaPoint(Complex value) : eta(value) {}
    double radius() const { return std::abs(eta); }
    double angle() const { return std::arg(eta); }
};

/// Point of the tau plane with its Cartesian reading tau = tau1 + i tau2.
struct TauPoint {
    Complex tau;

    TauPoint(Complex value) : tau(value) {}
    double tau1() const { return tau.real(); }
    double tau2() const { return tau.imag(); }
};

/// Laguerre-Gaussian wavefunction of |n,l> in the eta representation:
///   C1 e^{-i l phi} e^{-r^2/2} r^{|l|} L_{(n-|l|)/2}^{|l|}(r^2),
/// C1 = sqrt(((n-|l|)/2)! / ((n+|l|)/2)!), with the signed l in the phase and
/// |l| in the radial factor, read literally for either sign of l.
Complex lg_wavefunction_eta(const ModeIndex& idx, const EtaPoint& p);

/// Absolute residual of the radial eigenvalue equation
///   n psi = [r^2/2 - 1 - (1/2)(d_rr + (1/r) d_r + (1/r^2) d_phiphi)] psi
/// evaluated on lg_wavefunction_eta with central second-order differences of
/// step h in both r and phi. Decays as O(h^2).
double radial_equation_residual(const ModeIndex& idx, double r, double h);

/// Hermite-Gaussian mode h_m(x) = e^{-x^2/2} H_m(x) / sqrt(2^m m! sqrt(pi)),
/// the L^2-normalized oscillator eigenfunction.
double hg_wavefunction(int m, double x);

/// Fock-state overlap <tau|m,n> = ((-1)^n / sqrt(m! n!)) H_{m,n}(tau^*, tau)
/// e^{-|tau|^2/2}.
Complex tau_overlap_fock(int m, int n, const TauPoint& p);

/// Closed double-sum expansion of <tau|n,l> over two-variable Hermite
/// polynomials. Only derived for l >= 0; for l < 0 the truncated-Fock inner
/// product is the defining route and this function refuses the index.
Complex tau_overlap_lg(const ModeIndex& idx, const TauPoint& p);

}  // namespace lgkit::modes
