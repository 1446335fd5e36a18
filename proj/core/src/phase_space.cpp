#include "lgkit/phase_space.hpp"

#include "lgkit/modes.hpp"
#include "lgkit/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace lgkit::phasespace {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex minus_i_pow(int p) {
    switch (p & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

}  // namespace

PhasePoint4::PhasePoint4(double x1_, double p1_, double x2_, double p2_)
    : x1(x1_), p1(p1_), x2(x2_), p2(p2_) {
    const double q0v = q0();
    const double q2v = q2();
    if (!(std::abs(q2v) <= q0v + 1e-12 * (1.0 + q0v)))
        throw std::invalid_argument("PhasePoint4: |Q2| <= Q0 violated (non-finite input?)");
}

SigmaGamma to_sigma_gamma(const PhasePoint4& pt) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex alpha(pt.x1 * inv_sqrt2, pt.p1 * inv_sqrt2);
    const Complex beta(pt.x2 * inv_sqrt2, pt.p2 * inv_sqrt2);
    return {alpha - std::conj(beta), alpha + std::conj(beta)};
}

PhasePoint4 from_sigma_gamma(const SigmaGamma& sg) {
    const Complex alpha = 0.5 * (sg.sigma + sg.gamma);
    const Complex beta = std::conj(0.5 * (sg.gamma - sg.sigma));
    const double sqrt2 = std::sqrt(2.0);
    return {sqrt2 * alpha.real(), sqrt2 * alpha.imag(), sqrt2 * beta.real(),
            sqrt2 * beta.imag()};
}

double wigner_number_state(int m, double x, double p) {
    if (m < 0) throw std::invalid_argument("wigner_number_state: negative index");
    const double r2 = x * x + p * p;
    const double sign = (m & 1) ? -1.0 : 1.0;
    return sign / kPi * std::exp(-r2) * specialfn::laguerre(m, 0, 2.0 * r2);
}

double wigner_lg(const ModeIndex& idx, const PhasePoint4& pt) {
    const double q0 = pt.q0();
    const double q2 = pt.q2();
    const double sign = (idx.n & 1) ? -1.0 : 1.0;
    return sign / (kPi * kPi) * std::exp(-q0) *
           specialfn::laguerre(idx.m_rho(), 0, q0 + q2) *
           specialfn::laguerre(idx.n_rho(), 0, q0 - q2);
}

WignerOracle::WignerOracle(fock::TwoModeState state)
    : basis_(state.basis),
      coeff_grid_(fock::Matrix::Zero(basis_.nmax() + 1, basis_.nmax() + 1)),
      support_(state.support_max_total()),
      mode_annihilation_(fock::Matrix::Zero(basis_.nmax() + 1, basis_.nmax() + 1)) {
    for (int i = 0; i < state.coeffs.size(); ++i) {
        const auto [k1, k2] = basis_.ket_at(i);
        coeff_grid_(k1, k2) = state.coeffs[i];
    }
    for (int m = 1; m <= basis_.nmax(); ++m)
        mode_annihilation_(m - 1, m) = std::sqrt(static_cast<double>(m));
}

const fock::Matrix& WignerOracle::parity_kernel(Complex alpha) const {
    const std::pair<double, double> key(alpha.real(), alpha.imag());
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = kernel_cache_.find(key);
    if (it == kernel_cache_.end()) {
        const fock::Matrix generator =
            alpha * mode_annihilation_.adjoint() - std::conj(alpha) * mode_annihilation_;
        const fock::Matrix d = fock::expm_dense(generator);
        fock::Matrix parity_d_adj = d.adjoint();
        for (int row = 0; row < parity_d_adj.rows(); ++row)
            if (row & 1) parity_d_adj.row(row) *= -1.0;
        it = kernel_cache_.emplace(key, d * parity_d_adj).first;
    }
    return it->second;
}

double WignerOracle::operator()(const PhasePoint4& pt) const {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex alpha1(pt.x1 * inv_sqrt2, pt.p1 * inv_sqrt2);
    const Complex alpha2(pt.x2 * inv_sqrt2, pt.p2 * inv_sqrt2);

    const double max_alpha = std::max(std::abs(alpha1), std::abs(alpha2));
    const int guard = static_cast<int>(std::ceil(8.0 * max_alpha));
    if (support_ + guard > basis_.nmax())
        throw CutoffTooSmall("WignerOracle: displacement guard exceeds basis cutoff; "
                             "need nmax >= state support + ceil(8*max|alpha|)");

    const fock::Matrix& k1 = parity_kernel(alpha1);
    const fock::Matrix& k2 = parity_kernel(alpha2);

    const int s = support_ + 1;
    const auto c = coeff_grid_.topLeftCorner(s, s);
    const Complex value =
        (c.adjoint() * k1.topLeftCorner(s, s) * c * k2.topLeftCorner(s, s).transpose())
            .trace();
    return value.real() / (kPi * kPi);
}

double wigner_bruteforce(const fock::TwoModeState& state, const PhasePoint4& pt) {
    return WignerOracle(state)(pt);
}

double marginal_sigma_analytic(const ModeIndex& idx, Complex sigma) {
    if (idx.l < 0)
        throw InvalidModeIndex("marginal_sigma_analytic: only derived for l >= 0");
    const int m_rho = idx.m_rho();
    const int n_rho = idx.n_rho();
    const Complex sigma_c = std::conj(sigma);
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
            inner += minus_i_pow(j) * w_j *
                     specialfn::hermite2v(m_rho - k + j, n_rho + k - j, sigma_c, sigma);
        }
        sum += minus_i_pow(k) * w_k * inner;
    }

    const double log_pref = (m_rho - n_rho) * ln2 + specialfn::log_factorial(m_rho) -
                            specialfn::log_factorial(n_rho);
    return std::exp(log_pref - std::norm(sigma)) / kPi * std::norm(sum);
}

double marginal_sigma_via_overlap(const ModeIndex& idx, Complex sigma) {
    return std::norm(modes::tau_overlap_lg(idx, sigma)) / kPi;
}

namespace {

double marginal_quadrature_pass(const ModeIndex& idx, Complex sigma,
                                const QuadratureSpec& spec) {
    const Rule1D rule = make_rule(spec);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const SigmaGamma sg{sigma, Complex(rule.nodes[i], rule.nodes[j])};
            total += rule.weights[i] * rule.weights[j] * wigner_lg(idx, from_sigma_gamma(sg));
        }
    }
    return total;
}

}  // namespace

double marginal_sigma_quadrature(const ModeIndex& idx, Complex sigma,
                                 const QuadratureSpec& spec, double tolerance) {
    spec.validate();
    if (spec.half_width < 5.0 + std::sqrt(static_cast<double>(idx.n)))
        throw std::invalid_argument(
            "marginal_sigma_quadrature: half_width must be >= 5 + sqrt(n)");
    const double coarse = marginal_quadrature_pass(idx, sigma, spec);
    QuadratureSpec doubled = spec;
    doubled.nodes_per_axis = 2 * spec.nodes_per_axis;
    const double fine = marginal_quadrature_pass(idx, sigma, doubled);
    if (std::abs(fine - coarse) > 10.0 * tolerance)
        throw QuadratureUnderResolved("marginal_sigma_quadrature: node doubling moved the "
                                      "result beyond the allowed slack");
    return fine;
}

}  // namespace lgkit::phasespace
