#include "lgkit/transforms.hpp"

#include "lgkit/modes.hpp"
#include "lgkit/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace lgkit::transforms {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

constexpr int kDefaultFrftNodes = 128;
constexpr int kDefaultGwtNodes = 200;
constexpr double kFieldEdgeDecay = 1e-6;

}  // namespace

FrftOrder::FrftOrder(double alpha) {
    alpha_ = std::fmod(alpha, 2.0 * kPi);
    if (alpha_ < 0.0) alpha_ += 2.0 * kPi;
    sin_ = std::sin(alpha_);
    cos_ = std::cos(alpha_);
    if (std::abs(sin_) < kMinAbsSin)
        throw OrderNearSingular("FrftOrder: |sin(alpha)| < 0.05, kernel near-singular");
}

SampledField::SampledField(std::function<Complex(Complex)> f, QuadratureSpec spec)
    : f_(std::move(f)), spec_(spec) {
    spec_.validate();
    if (!f_) throw std::invalid_argument("SampledField: empty callable");

    const Grid& base = grid(spec_.nodes_per_axis);
    const double peak = base.values.cwiseAbs().maxCoeff();
    if (!(peak > 0.0)) throw std::invalid_argument("SampledField: field vanishes on the box");

    const double edge = spec_.half_width;
    double edge_max = 0.0;
    const int probes = 33;
    for (int k = 0; k < probes; ++k) {
        const double t = -edge + 2.0 * edge * k / (probes - 1);
        for (const Complex z : {Complex(-edge, t), Complex(edge, t), Complex(t, -edge),
                                Complex(t, edge)})
            edge_max = std::max(edge_max, std::abs(f_(z)));
    }
    if (edge_max > kFieldEdgeDecay * peak)
        throw QuadratureUnderResolved(
            "SampledField: field does not decay below 1e-6 of its peak at the box edge; "
            "enlarge the box or lower the mode order");
}

const SampledField::Grid& SampledField::grid(int nodes_per_axis) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = grid_cache_.find(nodes_per_axis);
    if (it == grid_cache_.end()) {
        QuadratureSpec s = spec_;
        s.nodes_per_axis = nodes_per_axis;
        const Rule1D rule = make_rule(s);
        Grid g;
        g.nodes = rule.nodes;
        g.weights = rule.weights;
        g.values.resize(nodes_per_axis, nodes_per_axis);
        for (int i = 0; i < nodes_per_axis; ++i)
            for (int j = 0; j < nodes_per_axis; ++j)
                g.values(i, j) = f_(Complex(rule.nodes[i], rule.nodes[j]));
        it = grid_cache_.emplace(nodes_per_axis, std::move(g)).first;
    }
    return it->second;
}

FrftEvaluator::FrftEvaluator(const SampledField& field, FrftOrder order, int nodes_per_axis)
    : order_(order) {
    const int n = nodes_per_axis > 0 ? nodes_per_axis : field.spec().nodes_per_axis;
    const SampledField::Grid& g = field.grid(n);
    nodes_ = g.nodes;

    const double t = order_.half_cot();
    weighted_kernel_.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double mod2 = g.nodes[i] * g.nodes[i] + g.nodes[j] * g.nodes[j];
            weighted_kernel_(i, j) = g.weights[i] * g.weights[j] / kPi *
                                     g.values(i, j) * std::exp(kI * (t * mod2));
        }
    }
    prefactor_ = std::exp(kI * (order_.alpha() - 0.5 * kPi)) / (2.0 * order_.sin());
}

Complex FrftEvaluator::operator()(Complex tau) const {
    const int n = static_cast<int>(nodes_.size());
    const double s = 1.0 / (2.0 * order_.sin());
    Eigen::VectorXcd u(n), v(n);
    for (int i = 0; i < n; ++i) {
        u[i] = std::exp(kI * (-2.0 * s * tau.real() * nodes_[i]));
        v[i] = std::exp(kI * (-2.0 * s * tau.imag() * nodes_[i]));
    }
    const Complex integral = u.transpose() * weighted_kernel_ * v;
    return prefactor_ * std::exp(kI * (order_.half_cot() * std::norm(tau))) * integral;
}

Complex frft(const SampledField& field, FrftOrder order, Complex tau) {
    const int n = field.spec().nodes_per_axis;
    const FrftEvaluator coarse(field, order, n);
    const FrftEvaluator fine(field, order, 2 * n);
    const Complex a = coarse(tau);
    const Complex b = fine(tau);
    if (std::abs(a - b) > kTransformSelfCheckSlack)
        throw QuadratureUnderResolved("frft: node doubling moved the result beyond the "
                                      "allowed slack");
    return b;
}

double frft_eigen_residual(const ModeIndex& idx, FrftOrder order) {
    const SampledField field(
        [idx](Complex z) { return modes::tau_overlap_lg(idx, z); },
        QuadratureSpec{6.0, kDefaultFrftNodes, QuadratureRule::GaussLegendre});
    const FrftEvaluator coarse(field, order);
    const FrftEvaluator fine(field, order, 2 * kDefaultFrftNodes);

    const Complex eigenvalue = std::exp(-kI * order.alpha() * static_cast<double>(idx.n));
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const Complex tau(-1.0 + 0.5 * i, -1.0 + 0.5 * j);
            const Complex transformed = fine(tau);
            if (std::abs(coarse(tau) - transformed) > kTransformSelfCheckSlack)
                throw QuadratureUnderResolved("frft_eigen_residual: node doubling check failed");
            const double r =
                std::abs(transformed - eigenvalue * modes::tau_overlap_lg(idx, tau));
            if (r > worst) worst = r;
        }
    }
    return worst;
}

namespace {

Complex gwt_pass(int f_mode, int v_mode, double x, double p, int nodes) {
    const Rule1D rule = gauss_hermite(nodes);
    Complex sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double t = rule.nodes[k];
        sum += rule.weights[k] * std::exp(kI * (-2.0 * p * t)) *
               specialfn::hermite(f_mode, x - t) * specialfn::hermite(v_mode, x + t);
    }
    const double log_scale = -0.5 * (f_mode + v_mode) * std::log(2.0) -
                             0.5 * specialfn::log_factorial(f_mode) -
                             0.5 * specialfn::log_factorial(v_mode) - 1.5 * std::log(kPi);
    return sum * std::exp(log_scale - x * x);
}

}  // namespace

Complex gwt(int f_mode, int v_mode, double x, double p) {
    if (f_mode < 0 || v_mode < 0) throw std::invalid_argument("gwt: negative mode index");
    const Complex fine = gwt_pass(f_mode, v_mode, x, p, kDefaultGwtNodes);
    const Complex coarse = gwt_pass(f_mode, v_mode, x, p, kDefaultGwtNodes / 2);
    if (std::abs(fine - coarse) > kTransformSelfCheckSlack)
        throw QuadratureUnderResolved("gwt: node doubling moved the result beyond the "
                                      "allowed slack");
    return fine;
}

double gwt_lg_identity_residual(int m, int n, Complex tau) {
    if (m < 0 || n < m)
        throw std::invalid_argument("gwt_lg_identity_residual: need 0 <= m <= n");
    const double log_ratio =
        0.5 * (specialfn::log_factorial(m) - specialfn::log_factorial(n));
    const Complex lhs = std::exp(log_ratio) * std::pow(std::conj(tau), n - m) *
                        specialfn::laguerre(m, n - m, std::norm(tau)) *
                        std::exp(-0.5 * std::norm(tau));
    const double sign = (m & 1) ? -1.0 : 1.0;
    const Complex rhs = sign * kPi *
                        gwt(m, n, tau.real() / std::sqrt(2.0), tau.imag() / std::sqrt(2.0));
    return std::abs(lhs - rhs);
}

double schmidt_overlap_check(int m, int n, Complex tau) {
    if (m < 0 || n < 0) throw std::invalid_argument("schmidt_overlap_check: negative index");
    const Complex lhs = std::conj(modes::tau_overlap_fock(m, n, tau));
    const double sign = (n & 1) ? -1.0 : 1.0;
    const Complex rhs = sign * kPi *
                        gwt(m, n, tau.real() / std::sqrt(2.0), tau.imag() / std::sqrt(2.0));
    return std::abs(lhs - rhs);
}

}  // namespace lgkit::transforms
