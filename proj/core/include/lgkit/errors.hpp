#pragma once

#include <stdexcept>
#include <string>

namespace lgkit {

/// Quantum numbers (n, l) violate the parity or range rules.
class InvalidModeIndex : public std::invalid_argument {
public:
    explicit InvalidModeIndex(const std::string& what) : std::invalid_argument(what) {}
};

/// The requested operation needs more Fock-space headroom than the basis provides.
class CutoffTooSmall : public std::runtime_error {
public:
    explicit CutoffTooSmall(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative series did not fall below its tail tolerance within the term cap.
class ConvergenceFailure : public std::runtime_error {
public:
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Doubling the node count moved the result by more than the allowed slack,
/// or an integrand fails its decay requirement on the integration box.
class QuadratureUnderResolved : public std::runtime_error {
public:
    explicit QuadratureUnderResolved(const std::string& what) : std::runtime_error(what) {}
};

/// Fractional order too close to a multiple of pi for the kernel to be evaluated.
class OrderNearSingular : public std::invalid_argument {
public:
    explicit OrderNearSingular(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace lgkit
