#pragma once

#include <string>
#include <vector>

#include "adfbn/textio.hpp"

namespace adfbn::testing {

inline std::string model_path(const std::string& file) { return std::string(ADFBN_MODELS_DIR) + "/" + file; }

inline LoadedModel load(const std::string& file) { return load_model(model_path(file)); }

inline std::vector<std::string> rendered(const std::vector<Interp3>& set,
                                         Interp3::Style style = Interp3::Style::Adf) {
    std::vector<std::string> out;
    for (const auto& nu : set) out.push_back(nu.to_string(style));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> rendered(const std::vector<State>& set) {
    std::vector<std::string> out;
    for (const auto& s : set) out.push_back(s.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Interp3> parse_all(const std::vector<std::string>& texts) {
    std::vector<Interp3> out;
    for (const auto& t : texts) out.push_back(Interp3::parse(t));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Interp3> sorted(std::vector<Interp3> set) {
    std::sort(set.begin(), set.end());
    return set;
}

// Parses a formula over single names a, b, c, ... mapped to 0, 1, 2, ...
inline Formula letters(std::string_view text) {
    return parse_formula(text, [](std::string_view name) -> std::optional<AtomId> {
        if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z') return static_cast<AtomId>(name[0] - 'a');
        return std::nullopt;
    });
}

}  // namespace adfbn::testing
