#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace adfbn {

/// Hard limits for the exhaustive scans. Every analysis in this library is
/// exponential; exceeding a limit raises BudgetExceeded instead of truncating.
struct Budget {
    /// Largest atom count for 3^n scans over interpretations / subspaces.
    unsigned max_interp_atoms = 12;
    /// Largest atom count for 2^n scans over states.
    unsigned max_state_atoms = 20;
    /// Largest number of signed simple cycles enumerated.
    std::size_t max_cycles = 100000;

    /// Throws BudgetExceeded when a 3^n scan over `atoms` atoms is not allowed.
    void require_interp_scan(std::size_t atoms, std::string_view what) const;
    /// Throws BudgetExceeded when a 2^n scan over `atoms` atoms is not allowed.
    void require_state_scan(std::size_t atoms, std::string_view what) const;

    /// Defaults overridden by ADFBN_MAX_INTERP_ATOMS, ADFBN_MAX_STATE_ATOMS and
    /// ADFBN_MAX_CYCLES when those are set to positive integers.
    static Budget from_environment();
};

}  // namespace adfbn
