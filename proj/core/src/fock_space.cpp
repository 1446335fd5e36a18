#include "lgkit/fock_space.hpp"

#include "lgkit/special_functions.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace lgkit::fock {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

void require_same_basis(const BasisSpec& a, const BasisSpec& b, const char* where) {
    if (!(a == b)) throw std::invalid_argument(std::string(where) + ": basis mismatch");
}

double inf_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

BasisSpec::BasisSpec(int max_total_excitation) : nmax_(max_total_excitation) {
    if (nmax_ < 0) throw std::invalid_argument("BasisSpec: negative cutoff");
}

int BasisSpec::index_of(int k1, int k2) const {
    const int total = k1 + k2;
    if (k1 < 0 || k2 < 0 || total > nmax_)
        throw std::out_of_range("BasisSpec::index_of: ket outside basis");
    return block_offset(total) + k2;
}

std::pair<int, int> BasisSpec::ket_at(int index) const {
    if (index < 0 || index >= dimension())
        throw std::out_of_range("BasisSpec::ket_at: index outside basis");
    const int total = static_cast<int>((std::sqrt(8.0 * index + 1.0) - 1.0) / 2.0);
    const int k2 = index - block_offset(total);
    return {total - k2, k2};
}

TwoModeState::TwoModeState(const BasisSpec& b, Vector c) : basis(b), coeffs(std::move(c)) {
    if (coeffs.size() != basis.dimension())
        throw std::invalid_argument("TwoModeState: coefficient length != basis dimension");
}

TwoModeState TwoModeState::normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw std::invalid_argument("TwoModeState::normalized: zero state");
    return {basis, coeffs / n};
}

int TwoModeState::support_max_total(double threshold) const {
    int support = 0;
    for (int i = 0; i < coeffs.size(); ++i) {
        if (std::abs(coeffs[i]) > threshold) {
            const auto [k1, k2] = basis.ket_at(i);
            if (k1 + k2 > support) support = k1 + k2;
        }
    }
    return support;
}

OperatorMatrix::OperatorMatrix(const BasisSpec& b, Matrix m) : basis(b), entries(std::move(m)) {
    if (entries.rows() != basis.dimension() || entries.cols() != basis.dimension())
        throw std::invalid_argument("OperatorMatrix: shape != basis dimension");
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_basis(a.basis, b.basis, "OperatorMatrix::operator*");
    return {a.basis, a.entries * b.entries};
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_basis(a.basis, b.basis, "OperatorMatrix::operator+");
    return {a.basis, a.entries + b.entries};
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_basis(a.basis, b.basis, "OperatorMatrix::operator-");
    return {a.basis, a.entries - b.entries};
}

OperatorMatrix operator*(Complex scalar, const OperatorMatrix& a) {
    return {a.basis, scalar * a.entries};
}

OperatorMatrix annihilation(int mode, const BasisSpec& basis) {
    if (mode != 1 && mode != 2) throw std::invalid_argument("annihilation: mode must be 1 or 2");
    Matrix m = Matrix::Zero(basis.dimension(), basis.dimension());
    for (int col = 0; col < basis.dimension(); ++col) {
        const auto [k1, k2] = basis.ket_at(col);
        if (mode == 1 && k1 > 0)
            m(basis.index_of(k1 - 1, k2), col) = std::sqrt(static_cast<double>(k1));
        if (mode == 2 && k2 > 0)
            m(basis.index_of(k1, k2 - 1), col) = std::sqrt(static_cast<double>(k2));
    }
    return {basis, std::move(m)};
}

OperatorMatrix creation(int mode, const BasisSpec& basis) {
    return annihilation(mode, basis).adjoint();
}

OperatorMatrix number_operator(const BasisSpec& basis) {
    Matrix m = Matrix::Zero(basis.dimension(), basis.dimension());
    for (int i = 0; i < basis.dimension(); ++i) {
        const auto [k1, k2] = basis.ket_at(i);
        m(i, i) = static_cast<double>(k1 + k2);
    }
    return {basis, std::move(m)};
}

OperatorMatrix angular_momentum_operator(const BasisSpec& basis) {
    const OperatorMatrix a1 = annihilation(1, basis);
    const OperatorMatrix a2 = annihilation(2, basis);
    // L = i (a2^dag a1 - a1^dag a2)
    return kI * (a2.adjoint() * a1 - a1.adjoint() * a2);
}

OperatorMatrix position_quadrature(int mode, const BasisSpec& basis) {
    const OperatorMatrix a = annihilation(mode, basis);
    return Complex(1.0 / std::sqrt(2.0)) * (a + a.adjoint());
}

OperatorMatrix momentum_quadrature(int mode, const BasisSpec& basis) {
    const OperatorMatrix a = annihilation(mode, basis);
    return Complex(0.0, -1.0 / std::sqrt(2.0)) * (a - a.adjoint());
}

OperatorMatrix circular_annihilation(Circular which, const BasisSpec& basis) {
    const OperatorMatrix a1 = annihilation(1, basis);
    const OperatorMatrix a2 = annihilation(2, basis);
    const Complex inv_sqrt2(1.0 / std::sqrt(2.0));
    if (which == Circular::Plus) return inv_sqrt2 * (a1 - kI * a2);  // (a1 - i a2)/sqrt2
    return inv_sqrt2 * (a2 - kI * a1);                               // (a1 + i a2)/(i sqrt2)
}

OperatorMatrix circular_creation(Circular which, const BasisSpec& basis) {
    return circular_annihilation(which, basis).adjoint();
}

Matrix expm_dense(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("expm_dense: matrix not square");
    const int n = static_cast<int>(a.rows());
    const double norm = inf_norm(a);
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));

    const Matrix b = a / std::pow(2.0, squarings);
    Matrix term = Matrix::Identity(n, n);
    Matrix sum = term;
    bool converged = false;
    for (int k = 1; k <= 60; ++k) {
        term = (term * b) / static_cast<double>(k);
        sum += term;
        if (inf_norm(term) <= tol * inf_norm(sum)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceFailure("expm_dense: Taylor core did not converge");
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

namespace {

// Jx = (a1^dag a2 + a2^dag a1)/2 restricted to the total-excitation block t;
// local index j corresponds to the ket |t-j, j>. Real symmetric tridiagonal.
Matrix jx_block(int t) {
    Matrix g = Matrix::Zero(t + 1, t + 1);
    for (int j = 1; j <= t; ++j) {
        const double v = 0.5 * std::sqrt(static_cast<double>(j) * (t - j + 1));
        g(j - 1, j) = v;
        g(j, j - 1) = v;
    }
    return g;
}

// Beam-splitter generator (theta/2)(a1^dag a2 e^{i phi} - a1 a2^dag e^{-i phi})
// restricted to block t.
Matrix bs_generator_block(double theta, double phi, int t) {
    Matrix g = Matrix::Zero(t + 1, t + 1);
    const Complex up = 0.5 * theta * std::exp(kI * phi);
    const Complex down = -0.5 * theta * std::exp(-kI * phi);
    for (int j = 1; j <= t; ++j) {
        const double v = std::sqrt(static_cast<double>(j) * (t - j + 1));
        g(j - 1, j) = up * v;    // a1^dag a2
        g(j, j - 1) = down * v;  // a1 a2^dag
    }
    return g;
}

template <typename BlockFn>
OperatorMatrix assemble_blockwise_exp(const BasisSpec& basis, BlockFn&& block_generator) {
    Matrix m = Matrix::Zero(basis.dimension(), basis.dimension());
    for (int t = 0; t <= basis.nmax(); ++t) {
        const int off = BasisSpec::block_offset(t);
        const int sz = BasisSpec::block_size(t);
        m.block(off, off, sz, sz) = expm_dense(block_generator(t));
    }
    return {basis, std::move(m)};
}

}  // namespace

OperatorMatrix expm_blockwise(const OperatorMatrix& generator) {
    const BasisSpec& basis = generator.basis;
    // Generator must be number-conserving: no coupling across blocks.
    for (int t = 0; t <= basis.nmax(); ++t) {
        const int off = BasisSpec::block_offset(t);
        const int sz = BasisSpec::block_size(t);
        for (int r = off; r < off + sz; ++r)
            for (int c = 0; c < basis.dimension(); ++c)
                if ((c < off || c >= off + sz) && std::abs(generator.entries(r, c)) > 1e-12)
                    throw std::invalid_argument("expm_blockwise: generator couples excitation blocks");
    }
    return assemble_blockwise_exp(basis, [&](int t) -> Matrix {
        const int off = BasisSpec::block_offset(t);
        const int sz = BasisSpec::block_size(t);
        return generator.entries.block(off, off, sz, sz);
    });
}

OperatorMatrix jx_rotation(const BasisSpec& basis) {
    return assemble_blockwise_exp(
        basis, [](int t) -> Matrix { return kI * (0.5 * kPi) * jx_block(t); });
}

OperatorMatrix beam_splitter(double theta, double phi, const BasisSpec& basis) {
    return assemble_blockwise_exp(
        basis, [&](int t) -> Matrix { return bs_generator_block(theta, phi, t); });
}

TwoModeState lg_state_ladder(const ModeIndex& idx, const BasisSpec& basis) {
    if (idx.n > basis.nmax())
        throw CutoffTooSmall("lg_state_ladder: n exceeds basis cutoff");
    const OperatorMatrix raise_plus = circular_creation(Circular::Plus, basis);
    const OperatorMatrix raise_minus = circular_creation(Circular::Minus, basis);
    Vector v = Vector::Zero(basis.dimension());
    v[basis.index_of(0, 0)] = 1.0;
    for (int i = 0; i < idx.n_rho(); ++i) v = raise_minus.entries * v;
    for (int i = 0; i < idx.m_rho(); ++i) v = raise_plus.entries * v;
    const double log_norm =
        0.5 * (specialfn::log_factorial(idx.m_rho()) + specialfn::log_factorial(idx.n_rho()));
    v *= std::exp(-log_norm);
    return {basis, std::move(v)};
}

TwoModeState lg_state_beamsplitter(const ModeIndex& idx, const BasisSpec& basis) {
    if (idx.n > basis.nmax())
        throw CutoffTooSmall("lg_state_beamsplitter: n exceeds basis cutoff");
    const int t = idx.n;
    const Matrix u = expm_dense(kI * (0.5 * kPi) * jx_block(t));
    Vector v = Vector::Zero(basis.dimension());
    const int off = BasisSpec::block_offset(t);
    // Local index within the block equals k2 = n_rho.
    v.segment(off, t + 1) = u.col(idx.n_rho());
    return {basis, std::move(v)};
}

namespace {

TwoModeState exp_series_on_vacuum(const OperatorMatrix& generator, double prefactor_log) {
    const BasisSpec& basis = generator.basis;
    Vector term = Vector::Zero(basis.dimension());
    term[basis.index_of(0, 0)] = 1.0;
    Vector sum = term;
    bool converged = false;
    for (int k = 1; k <= kEsrSeriesCap; ++k) {
        term = (generator.entries * term) / static_cast<double>(k);
        sum += term;
        if (term.norm() <= kEsrSeriesTol * sum.norm()) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ConvergenceFailure("entangled-state series did not fall below tolerance");
    sum *= std::exp(prefactor_log);
    return {basis, std::move(sum)};
}

}  // namespace

namespace {

// The pair-creation product does not depend on eta/tau; memoize it per basis
// so sweeping many entangled-state samples costs one large product, not many.
enum class PairKind { Circular, Cartesian };

const Matrix& cached_pair_product(const BasisSpec& basis, PairKind kind) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, Matrix> cache;
    const std::pair<int, int> key(basis.nmax(), static_cast<int>(kind));
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Matrix product;
        if (kind == PairKind::Circular) {
            product = (circular_creation(Circular::Plus, basis) *
                       circular_creation(Circular::Minus, basis))
                          .entries;
        } else {
            product = (creation(1, basis) * creation(2, basis)).entries;
        }
        it = cache.emplace(key, std::move(product)).first;
    }
    return it->second;
}

}  // namespace

TwoModeState build_eta_state(Complex eta, const BasisSpec& basis) {
    const OperatorMatrix plus = circular_creation(Circular::Plus, basis);
    const OperatorMatrix minus = circular_creation(Circular::Minus, basis);
    const OperatorMatrix generator(
        basis, eta * plus.entries - std::conj(eta) * minus.entries +
                   cached_pair_product(basis, PairKind::Circular));
    return exp_series_on_vacuum(generator, -0.5 * std::norm(eta));
}

TwoModeState build_tau_state(Complex tau, const BasisSpec& basis) {
    const OperatorMatrix generator(
        basis, tau * creation(1, basis).entries - std::conj(tau) * creation(2, basis).entries +
                   cached_pair_product(basis, PairKind::Cartesian));
    return exp_series_on_vacuum(generator, -0.5 * std::norm(tau));
}

double jx_decomposition_check(const BasisSpec& basis) {
    const OperatorMatrix a1 = annihilation(1, basis);
    const OperatorMatrix a2 = annihilation(2, basis);
    const OperatorMatrix f1 = expm_blockwise(kI * (a1.adjoint() * a2));
    const OperatorMatrix f2 =
        expm_blockwise(Complex(0.5 * std::log(2.0)) *
                       (a1.adjoint() * a1 - a2.adjoint() * a2));
    const OperatorMatrix f3 = expm_blockwise(kI * (a2.adjoint() * a1));
    const OperatorMatrix product = f1 * f2 * f3;
    const Matrix diff = product.entries - jx_rotation(basis).entries;
    return guarded_max_abs(diff, basis.nmax());
}

double quadrature_covariance_check(const BasisSpec& basis) {
    if (basis.nmax() < 2)
        throw std::invalid_argument("quadrature_covariance_check: need nmax >= 2");
    const OperatorMatrix u = jx_rotation(basis);
    const OperatorMatrix x1 = position_quadrature(1, basis);
    const OperatorMatrix p1 = momentum_quadrature(1, basis);
    const OperatorMatrix x2 = position_quadrature(2, basis);
    const OperatorMatrix p2 = momentum_quadrature(2, basis);
    const Complex s(1.0 / std::sqrt(2.0));

    const OperatorMatrix lhs[4] = {u.adjoint() * x1 * u, u.adjoint() * p1 * u,
                                   u.adjoint() * x2 * u, u.adjoint() * p2 * u};
    const OperatorMatrix rhs[4] = {s * (x1 - p2), s * (p1 + x2), s * (x2 - p1), s * (p2 + x1)};

    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double d = guarded_max_abs(lhs[i].entries - rhs[i].entries, basis.nmax() - 2);
        if (d > worst) worst = d;
    }
    return worst;
}

double eigen_residual_guarded(const OperatorMatrix& op, const TwoModeState& state,
                              Complex lambda, int guard) {
    require_same_basis(op.basis, state.basis, "eigen_residual_guarded");
    const int top = op.basis.nmax() - guard;
    if (top < 0) throw std::invalid_argument("eigen_residual_guarded: guard exceeds cutoff");
    const int gd = BasisSpec::guarded_dimension(top);
    const Vector residual = op.entries * state.coeffs - lambda * state.coeffs;
    const double den = state.coeffs.head(gd).norm();
    if (!(den > 0.0)) throw std::invalid_argument("eigen_residual_guarded: empty guarded state");
    return residual.head(gd).norm() / den;
}

double guarded_max_abs(const Matrix& m, int total) {
    const int gd = BasisSpec::guarded_dimension(total);
    if (gd > m.rows() || gd > m.cols())
        throw std::invalid_argument("guarded_max_abs: guard exceeds matrix size");
    return m.topLeftCorner(gd, gd).cwiseAbs().maxCoeff();
}

}  // namespace lgkit::fock
