#include "lgkit/modes.hpp"

#include "lgkit/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace lgkit::modes {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

// (-i)^p for integer p >= 0.
Complex minus_i_pow(int p) {
    switch (p & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

Complex lg_eta_polar(const ModeIndex& idx, double r, double phi) {
    const int al = idx.abs_l();
    const int n_r = idx.radial_degree();
    const int m_r = (idx.n + al) / 2;
    const double log_c1 =
        0.5 * (specialfn::log_factorial(n_r) - specialfn::log_factorial(m_r));
    const double radial = std::exp(log_c1 - 0.5 * r * r) * std::pow(r, al) *
                          specialfn::laguerre(n_r, al, r * r);
    return radial * std::exp(-kI * static_cast<double>(idx.l) * phi);
}

}  // namespace

Complex lg_wavefunction_eta(const ModeIndex& idx, const EtaPoint& p) {
    return lg_eta_polar(idx, p.radius(), p.angle());
}

double radial_equation_residual(const ModeIndex& idx, double r, double h) {
    if (!(h > 0.0) || !(r > 2.0 * h))
        throw std::invalid_argument("radial_equation_residual: need r > 2h > 0");
    const double phi = 0.4;  // generic sample angle, away from symmetry axes

    const Complex psi = lg_eta_polar(idx, r, phi);
    const Complex psi_rp = lg_eta_polar(idx, r + h, phi);
    const Complex psi_rm = lg_eta_polar(idx, r - h, phi);
    const Complex psi_pp = lg_eta_polar(idx, r, phi + h);
    const Complex psi_pm = lg_eta_polar(idx, r, phi - h);

    const Complex d_rr = (psi_rp - 2.0 * psi + psi_rm) / (h * h);
    const Complex d_r = (psi_rp - psi_rm) / (2.0 * h);
    const Complex d_pp = (psi_pp - 2.0 * psi + psi_pm) / (h * h);

    const Complex rhs = (0.5 * r * r - 1.0) * psi - 0.5 * (d_rr + d_r / r + d_pp / (r * r));
    return std::abs(static_cast<double>(idx.n) * psi - rhs);
}

double hg_wavefunction(int m, double x) {
    if (m < 0) throw std::invalid_argument("hg_wavefunction: negative mode");
    const double log_norm =
        0.5 * (m * std::log(2.0) + specialfn::log_factorial(m) + 0.5 * std::log(kPi));
    return std::exp(-0.5 * x * x - log_norm) * specialfn::hermite(m, x);
}

Complex tau_overlap_fock(int m, int n, const TauPoint& p) {
    if (m < 0 || n < 0) throw std::invalid_argument("tau_overlap_fock: negative index");
    const double sign = (n & 1) ? -1.0 : 1.0;
    const double log_norm = 0.5 * (specialfn::log_factorial(m) + specialfn::log_factorial(n));
    return sign * std::exp(-0.5 * std::norm(p.tau) - log_norm) *
           specialfn::hermite2v(m, n, std::conj(p.tau), p.tau);
}

Complex tau_overlap_lg(const ModeIndex& idx, const TauPoint& p) {
    if (idx.l < 0)
        throw InvalidModeIndex(
            "tau_overlap_lg: the expansion is only derived for l >= 0; "
            "use the truncated-Fock inner product for l < 0");
    const int m_rho = idx.m_rho();
    const int n_rho = idx.n_rho();
    const Complex tau = p.tau;
    const Complex tau_c = std::conj(tau);
    const double ln2 = std::log(2.0);

    Complex sum = 0.0;
    for (int k = 0; k <= m_rho; ++k) {
        const double w_k =
            std::exp(specialfn::log_factorial(n_rho + k) - k * ln2 -
                     specialfn::log_factorial(k) - specialfn::log_factorial(m_rho - k));
        Complex inner = 0.0;
        for (int j = 0; j <= n_rho + k; ++j) {
            const double w_j = std::exp(-specialfn::log_factorial(j) -
                                        specialfn::log_factorial(n_rho + k - j));
            inner += minus_i_pow(k + j) * w_j *
                     specialfn::hermite2v(m_rho - k + j, n_rho + k - j, tau_c, tau);
        }
        sum += w_k * inner;
    }

    const double sign = (n_rho & 1) ? -1.0 : 1.0;
    const double log_pref = 0.5 * ((m_rho - n_rho) * ln2 + specialfn::log_factorial(m_rho) -
                                   specialfn::log_factorial(n_rho));
    return sign * std::exp(log_pref - 0.5 * std::norm(tau)) * sum;
}

}  // namespace lgkit::modes
