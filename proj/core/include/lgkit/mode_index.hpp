#pragma once

#include "lgkit/errors.hpp"

#include <string>
#include <vector>

namespace lgkit {

/// Quantum-number pair of a two-mode angular-momentum eigenstate:
/// n = total photon number, l = orbital angular momentum.
/// Valid iff |l| <= n and n - |l| is even. The derived circular-mode photon
/// numbers are m_rho = (n+l)/2 and n_rho = (n-l)/2, so that
/// m_rho + n_rho = n and m_rho - n_rho = l.
struct ModeIndex {
    int n = 0;
    int l = 0;

    ModeIndex() = default;
    ModeIndex(int n_, int l_) : n(n_), l(l_) {
        if (!valid(n, l))
            throw InvalidModeIndex("ModeIndex: invalid (n,l) = (" + std::to_string(n) + "," +
                                   std::to_string(l) + "): need |l| <= n and n - |l| even");
    }

    static bool valid(int n, int l) {
        if (n < 0) return false;
        const int al = l < 0 ? -l : l;
        return al <= n && (n - al) % 2 == 0;
    }

    int m_rho() const { return (n + l) / 2; }
    int n_rho() const { return (n - l) / 2; }
    int abs_l() const { return l < 0 ? -l : l; }

    /// Radial degree of the associated Laguerre factor, (n - |l|)/2.
    int radial_degree() const { return (n - abs_l()) / 2; }

    bool operator==(const ModeIndex&) const = default;
};

/// Every valid (n, l) with n <= n_total_max, ordered by n then l.
inline std::vector<ModeIndex> all_modes_up_to(int n_total_max) {
    std::vector<ModeIndex> modes;
    for (int n = 0; n <= n_total_max; ++n)
        for (int l = -n; l <= n; l += 2) modes.emplace_back(n, l);
    return modes;
}

}  // namespace lgkit
