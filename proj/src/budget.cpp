#include "adfbn/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "adfbn/error.hpp"

namespace adfbn {

namespace {

template <typename T>
void override_from_env(const char* variable, T& target) {
    const char* raw = std::getenv(variable);
    if (raw == nullptr) return;
    const std::string_view text(raw);
    T value{};
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && end == text.data() + text.size() && value > 0) target = value;
}

}  // namespace

void Budget::require_interp_scan(std::size_t atoms, std::string_view what) const {
    if (atoms > max_interp_atoms) {
        throw BudgetExceeded(std::string(what) + ": 3^" + std::to_string(atoms) +
                             " scan exceeds the interpretation budget of " + std::to_string(max_interp_atoms) +
                             " atoms");
    }
}

void Budget::require_state_scan(std::size_t atoms, std::string_view what) const {
    if (atoms > max_state_atoms || atoms >= 63) {
        throw BudgetExceeded(std::string(what) + ": 2^" + std::to_string(atoms) +
                             " scan exceeds the state budget of " + std::to_string(max_state_atoms) + " atoms");
    }
}

Budget Budget::from_environment() {
    Budget budget;
    override_from_env("ADFBN_MAX_INTERP_ATOMS", budget.max_interp_atoms);
    override_from_env("ADFBN_MAX_STATE_ATOMS", budget.max_state_atoms);
    override_from_env("ADFBN_MAX_CYCLES", budget.max_cycles);
    return budget;
}

}  // namespace adfbn
