#pragma once

#include <string>
#include <vector>

namespace lgkit::verify {

/// Result of one verification check: the measured residual against its
/// pinned tolerance, plus the statement of theory the check exercises.
struct CheckRecord {
    std::string id;
    std::string anchor;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    double ms = 0.0;
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> checks;
    bool pass = false;
};

struct Options {
    int nmax = 32;      // basis cutoff for state-level checks
    int esr_nmax = 40;  // cutoff for entangled-state residual checks
};

/// Known suite names: "fock", "modes", "wigner", "transforms", and "all".
const std::vector<std::string>& suite_names();

/// Runs the named suite (or every suite for "all") and collects per-check
/// residuals. Throws std::invalid_argument for unknown suite names.
Report run_suite(const std::string& suite, const Options& opts = {});

}  // namespace lgkit::verify
