// lgkit: evaluate Laguerre-Gaussian mode wavefunctions, Wigner functions,
// marginals, and transform identities on grids, and run the verification
// suites. Emits deterministic CSV/JSON for plotting and CI.

#include "output.hpp"

#include "lgkit/fock_space.hpp"
#include "lgkit/modes.hpp"
#include "lgkit/phase_space.hpp"
#include "lgkit/transforms.hpp"
#include "lgkit/verify.hpp"

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using lgkit::ModeIndex;
using lgkit::cli::Table;
using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidArgs = 2;
constexpr int kExitIo = 3;
constexpr int kExitCutoff = 4;
constexpr int kExitNearSingular = 5;

struct GlobalOptions {
    int nmax = 32;
    std::string out;      // empty = stdout
    std::string format = "csv";
    double tol = 1e-5;    // slack for quadrature self-consistency checks
};

int default_nmax_from_env() {
    if (const char* env = std::getenv("LGKIT_NMAX")) {
        try {
            const int v = std::stoi(env);
            if (v >= 0) return v;
        } catch (const std::exception&) {
            // fall through to the built-in default
        }
    }
    return 32;
}

void write_output(const GlobalOptions& g, const std::string& payload) {
    if (g.out.empty()) {
        std::cout << payload;
        if (!std::cout) throw std::ios_base::failure("write to stdout failed");
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open output file: " + g.out);
    file << payload;
    file.flush();
    if (!file) throw std::ios_base::failure("write failed: " + g.out);
}

void emit_table(const GlobalOptions& g, const Table& table) {
    write_output(g, g.format == "json" ? lgkit::cli::to_json(table)
                                       : lgkit::cli::to_csv(table));
}

// Plot grids span [-extent, extent) FFT-style: even resolutions include the
// exact center, and identical requests produce byte-identical output.
std::vector<double> plot_axis(double extent, int res) {
    std::vector<double> axis(res);
    for (int i = 0; i < res; ++i) axis[i] = -extent + i * (2.0 * extent / res);
    return axis;
}

// --- mode --------------------------------------------------------------------

int cmd_mode(const GlobalOptions& g, int n, int l, const std::string& plane,
             double extent, int res) {
    const ModeIndex idx(n, l);
    const std::vector<double> axis = plot_axis(extent, res);
    Table table;
    table.columns = {"x", "y", "re", "im", "abs2"};
    for (const double x : axis) {
        for (const double y : axis) {
            const Complex z(x, y);
            const Complex v = plane == "tau" ? lgkit::modes::tau_overlap_lg(idx, z)
                                             : lgkit::modes::lg_wavefunction_eta(idx, z);
            table.rows.push_back({x, y, v.real(), v.imag(), std::norm(v)});
        }
    }
    emit_table(g, table);
    return kExitOk;
}

// --- wigner ------------------------------------------------------------------

int cmd_wigner(const GlobalOptions& g, int n, int l, const std::string& slice,
               double extent, int res, bool oracle) {
    const ModeIndex idx(n, l);

    const std::vector<std::string> names = {"x1", "p1", "x2", "p2"};
    std::map<std::string, double> fixed;
    std::string token;
    std::stringstream stream(slice);
    while (std::getline(stream, token, ',')) {
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--slice entries must look like x2=0");
        const std::string name = token.substr(0, eq);
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw CLI::ValidationError("--slice axis must be one of x1,p1,x2,p2");
        fixed[name] = std::stod(token.substr(eq + 1));
    }
    if (fixed.size() != 2)
        throw CLI::ValidationError("--slice must fix exactly two of x1,p1,x2,p2");

    std::vector<std::string> free_axes;
    for (const std::string& name : names)
        if (!fixed.count(name)) free_axes.push_back(name);

    const auto point = [&](double a, double b) {
        std::map<std::string, double> coord = fixed;
        coord[free_axes[0]] = a;
        coord[free_axes[1]] = b;
        return lgkit::phasespace::PhasePoint4(coord["x1"], coord["p1"], coord["x2"],
                                              coord["p2"]);
    };

    std::optional<lgkit::phasespace::WignerOracle> brute;
    if (oracle)
        brute.emplace(lgkit::fock::lg_state_beamsplitter(idx, lgkit::fock::BasisSpec(g.nmax)));

    const std::vector<double> axis = plot_axis(extent, res);
    Table table;
    table.columns = {"a", "b", "w"};
    if (oracle) {
        table.columns.push_back("w_bruteforce");
        table.columns.push_back("delta");
    }
    for (const double a : axis) {
        for (const double b : axis) {
            const auto pt = point(a, b);
            const double w = lgkit::phasespace::wigner_lg(idx, pt);
            if (oracle) {
                const double wb = (*brute)(pt);
                table.rows.push_back({a, b, w, wb, w - wb});
            } else {
                table.rows.push_back({a, b, w});
            }
        }
    }
    emit_table(g, table);
    return kExitOk;
}

// --- marginal ----------------------------------------------------------------

int cmd_marginal(const GlobalOptions& g, int n, int l, double extent, int res) {
    const ModeIndex idx(n, l);
    const std::vector<double> axis = plot_axis(extent, res);
    Table table;
    table.columns = {"x", "y", "marginal"};
    for (const double x : axis)
        for (const double y : axis)
            table.rows.push_back(
                {x, y, lgkit::phasespace::marginal_sigma_analytic(idx, Complex(x, y))});
    emit_table(g, table);
    return kExitOk;
}

// --- frft --------------------------------------------------------------------

int cmd_frft(const GlobalOptions& g, int n, int l, double alpha) {
    const ModeIndex idx(n, l);
    const lgkit::transforms::FrftOrder order(alpha);
    const lgkit::transforms::SampledField field(
        [idx](Complex z) { return lgkit::modes::tau_overlap_lg(idx, z); },
        lgkit::QuadratureSpec{6.0, 128, lgkit::QuadratureRule::GaussLegendre});
    const lgkit::transforms::FrftEvaluator coarse(field, order);
    const lgkit::transforms::FrftEvaluator fine(field, order, 256);

    struct Sample {
        Complex tau;
        Complex transformed;
        Complex reference;
    };
    std::vector<Sample> samples;
    Complex phase_accum = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const Complex tau(-1.0 + 0.5 * i, -1.0 + 0.5 * j);
            const Complex transformed = fine(tau);
            if (std::abs(coarse(tau) - transformed) >
                lgkit::transforms::kTransformSelfCheckSlack)
                throw lgkit::QuadratureUnderResolved("frft: node-doubling check failed");
            const Complex reference = lgkit::modes::tau_overlap_lg(idx, tau);
            samples.push_back({tau, transformed, reference});
            phase_accum += transformed * std::conj(reference);
        }
    }
    const double phase_fit = std::arg(phase_accum);
    const Complex eigenvalue = std::polar(1.0, phase_fit);

    Table table;
    table.columns = {"re_tau", "im_tau", "residual", "phase_fit"};
    for (const Sample& s : samples)
        table.rows.push_back({s.tau.real(), s.tau.imag(),
                              std::abs(s.transformed - eigenvalue * s.reference),
                              phase_fit});
    emit_table(g, table);
    return kExitOk;
}

// --- gwt ---------------------------------------------------------------------

int cmd_gwt(const GlobalOptions& g, int m, int n, double extent, int res) {
    if (m < 0 || n < m) throw CLI::ValidationError("gwt requires 0 <= m <= n");
    const std::vector<double> axis = plot_axis(extent, res);
    Table table;
    table.columns = {"x", "y", "residual"};
    for (const double x : axis)
        for (const double y : axis)
            table.rows.push_back(
                {x, y, lgkit::transforms::gwt_lg_identity_residual(m, n, Complex(x, y))});
    emit_table(g, table);
    return kExitOk;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(const GlobalOptions& g, const std::string& suite) {
    lgkit::verify::Options opts;
    opts.nmax = g.nmax;
    opts.esr_nmax = std::max(40, g.nmax);
    const lgkit::verify::Report report = lgkit::verify::run_suite(suite, opts);
    for (const auto& c : report.checks)
        std::fprintf(stderr, "[%s] %-42s residual=%.3e tol=%.0e (%.1f ms)\n",
                     c.pass ? "PASS" : "FAIL", c.id.c_str(), c.residual, c.tol, c.ms);
    std::fprintf(stderr, "suite %s: %s (%zu checks)\n", report.suite.c_str(),
                 report.pass ? "PASS" : "FAIL", report.checks.size());
    write_output(g, lgkit::cli::report_to_json(report));
    return report.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre-Gaussian mode toolkit: wavefunctions, Wigner functions, "
                 "marginals, fractional Fourier and generalized Wigner transforms"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    GlobalOptions g;
    g.nmax = default_nmax_from_env();
    app.add_option("--nmax", g.nmax, "Fock-space cutoff (flags > LGKIT_NMAX > default 32)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--out", g.out, "output path (default: stdout)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--tol", g.tol, "slack for quadrature self-consistency checks")
        ->check(CLI::PositiveNumber);

    int n = 0, l = 0, m = 0;
    double alpha = 0.7;

    // global flags remain usable after a subcommand name
    app.fallthrough();

    auto* mode = app.add_subcommand("mode", "wavefunction values on a plane grid");
    mode->fallthrough();
    std::string plane = "eta";
    double mode_extent = 3.0;
    int mode_res = 64;
    mode->add_option("--n", n, "total photon number")->required();
    mode->add_option("--l", l, "orbital angular momentum")->required();
    mode->add_option("--plane", plane, "plane to evaluate")
        ->check(CLI::IsMember({"eta", "tau"}));
    mode->add_option("--extent", mode_extent, "grid half-width")->check(CLI::PositiveNumber);
    mode->add_option("--res", mode_res, "nodes per axis")->check(CLI::Range(8, 2048));

    auto* wigner = app.add_subcommand("wigner", "Wigner function on a 2-d slice");
    wigner->fallthrough();
    std::string slice = "x2=0,p2=0";
    double wigner_extent = 1.5;
    int wigner_res = 32;
    bool oracle = false;
    wigner->add_option("--n", n, "total photon number")->required();
    wigner->add_option("--l", l, "orbital angular momentum")->required();
    wigner->add_option("--slice", slice, "fixed coordinates, e.g. x2=0,p2=0");
    wigner->add_option("--extent", wigner_extent, "grid half-width")
        ->check(CLI::PositiveNumber);
    wigner->add_option("--res", wigner_res, "nodes per axis")->check(CLI::Range(8, 2048));
    wigner->add_flag("--oracle", oracle,
                     "add displaced-parity brute-force column and delta");

    auto* marginal = app.add_subcommand("marginal", "sigma-plane marginal distribution");
    marginal->fallthrough();
    double marginal_extent = 2.5;
    int marginal_res = 64;
    marginal->add_option("--n", n, "total photon number")->required();
    marginal->add_option("--l", l, "orbital angular momentum (l >= 0)")->required();
    marginal->add_option("--extent", marginal_extent, "grid half-width")
        ->check(CLI::PositiveNumber);
    marginal->add_option("--res", marginal_res, "nodes per axis")->check(CLI::Range(8, 2048));

    auto* frft = app.add_subcommand(
        "frft", "fractional-transform eigenrelation residuals on a tau sample");
    frft->fallthrough();
    frft->add_option("--n", n, "total photon number")->required();
    frft->add_option("--l", l, "orbital angular momentum (l >= 0)")->required();
    frft->add_option("--alpha", alpha, "fractional order in radians")->required();

    auto* gwt = app.add_subcommand(
        "gwt", "residual of the LG-as-transform-of-HG identity on a tau grid");
    gwt->fallthrough();
    double gwt_extent = 1.0;
    int gwt_res = 8;
    gwt->add_option("--m", m, "first Hermite-Gaussian index")->required();
    gwt->add_option("--n", n, "second Hermite-Gaussian index (n >= m)")->required();
    gwt->add_option("--extent", gwt_extent, "grid half-width")->check(CLI::PositiveNumber);
    gwt->add_option("--res", gwt_res, "nodes per axis")->check(CLI::Range(8, 2048));

    auto* verify = app.add_subcommand("verify", "run a verification suite, emit a JSON report");
    verify->fallthrough();
    std::string suite = "all";
    verify->add_option("--suite", suite, "suite to run")
        ->check(CLI::IsMember(lgkit::verify::suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidArgs;
    }

    try {
        if (mode->parsed()) return cmd_mode(g, n, l, plane, mode_extent, mode_res);
        if (wigner->parsed())
            return cmd_wigner(g, n, l, slice, wigner_extent, wigner_res, oracle);
        if (marginal->parsed()) return cmd_marginal(g, n, l, marginal_extent, marginal_res);
        if (frft->parsed()) return cmd_frft(g, n, l, alpha);
        if (gwt->parsed()) return cmd_gwt(g, m, n, gwt_extent, gwt_res);
        if (verify->parsed()) return cmd_verify(g, suite);
    } catch (const lgkit::InvalidModeIndex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidArgs;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidArgs;
    } catch (const lgkit::CutoffTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCutoff;
    } catch (const lgkit::OrderNearSingular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNearSingular;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInvalidArgs;
}
