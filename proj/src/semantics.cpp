#include "adfbn/semantics.hpp"

#include <algorithm>

#include "adfbn/error.hpp"

namespace adfbn {

std::string_view short_name(Semantics sigma) noexcept {
    switch (sigma) {
        case Semantics::TwoValued: return "2v";
        case Semantics::Admissible: return "adm";
        case Semantics::Complete: return "cmp";
        case Semantics::Preferred: return "prf";
        case Semantics::Grounded: return "grnd";
        case Semantics::Stable: return "stb";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) noexcept {
    for (Semantics sigma : {Semantics::TwoValued, Semantics::Admissible, Semantics::Complete, Semantics::Preferred,
                            Semantics::Grounded, Semantics::Stable}) {
        if (short_name(sigma) == text) return sigma;
    }
    return std::nullopt;
}

namespace {

void require_same_size(const Adf& adf, std::size_t size) {
    if (adf.size() != size) {
        throw ModelMismatch("interpretation over " + std::to_string(size) + " atoms used with an ADF of " +
                            std::to_string(adf.size()) + " atoms");
    }
}

std::uint64_t power_of_three(std::size_t exponent) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) result *= 3;
    return result;
}

void sort_unique(std::vector<Interp3>& set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

std::vector<Interp3> scan_interpretations(const Adf& adf, const Budget& budget, bool fixpoints_only) {
    budget.require_interp_scan(adf.size(), fixpoints_only ? "complete" : "admissible");
    std::vector<Interp3> out;
    const std::uint64_t total = power_of_three(adf.size());
    for (std::uint64_t index = 0; index < total; ++index) {
        Interp3 nu = interp_from_index(adf.size(), index);
        const Interp3 image = gamma(adf, nu);
        if (fixpoints_only ? nu == image : leq_i(nu, image)) out.push_back(std::move(nu));
    }
    return out;
}

std::vector<State> two_valued_models(const Adf& adf, const Budget& budget) {
    budget.require_state_scan(adf.size(), "two-valued");
    std::vector<State> out;
    const std::uint64_t total = std::uint64_t{1} << adf.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const State omega(adf.size(), bits);
        if (is_two_valued_model(adf, omega)) out.push_back(omega);
    }
    return out;
}

bool is_stable(const Adf& adf, const State& omega) {
    // The reduct keeps exactly the true atoms, so stability means its
    // grounded interpretation accepts every one of them.
    const Interp3 w = grounded(reduct(adf, omega));
    return std::all_of(w.values().begin(), w.values().end(), [](Truth t) { return t == Truth::True; });
}

}  // namespace

std::vector<State> completions(const Interp3& nu, const Budget& budget) {
    std::vector<std::size_t> open;
    std::uint64_t base = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] == Truth::Undec) open.push_back(i);
        if (nu[i] == Truth::True) base |= std::uint64_t{1} << i;
    }
    budget.require_state_scan(open.size(), "completions");
    std::vector<State> out;
    out.reserve(std::size_t{1} << open.size());
    const std::uint64_t total = std::uint64_t{1} << open.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::uint64_t bits = base;
        for (std::size_t j = 0; j < open.size(); ++j) {
            if (((mask >> j) & 1U) != 0) bits |= std::uint64_t{1} << open[j];
        }
        out.emplace_back(nu.size(), bits);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Interp3 gamma(const Adf& adf, const Interp3& nu) {
    require_same_size(adf, nu.size());
    std::vector<Truth> image(adf.size());
    for (AtomId s = 0; s < adf.size(); ++s) image[s] = eval3(adf.condition(s), nu, adf.condition_atoms(s));
    return Interp3(std::move(image));
}

bool is_two_valued_model(const Adf& adf, const State& omega) {
    require_same_size(adf, omega.size());
    for (AtomId s = 0; s < adf.size(); ++s) {
        if (omega[s] != eval2(adf.condition(s), omega)) return false;
    }
    return true;
}

Adf reduct(const Adf& adf, const State& omega) {
    if (!is_two_valued_model(adf, omega)) {
        throw PreconditionError("reduct requires a two-valued model; " + omega.to_string() + " is not one");
    }
    std::vector<std::optional<AtomId>> mapping(adf.size());
    std::map<AtomId, bool> falsified;
    std::vector<std::string> atoms;
    for (AtomId s = 0; s < adf.size(); ++s) {
        if (omega[s]) {
            mapping[s] = static_cast<AtomId>(atoms.size());
            atoms.push_back(adf.name(s));
        } else {
            falsified.emplace(s, false);
        }
    }
    std::vector<Formula> conditions;
    conditions.reserve(atoms.size());
    for (AtomId s = 0; s < adf.size(); ++s) {
        if (omega[s]) conditions.push_back(remap_atoms(substitute(adf.condition(s), falsified), mapping));
    }
    std::set<Link> links;
    for (const Link& link : adf.links()) {
        if (mapping[link.from] && mapping[link.to]) links.insert(Link{*mapping[link.from], *mapping[link.to]});
    }
    return Adf(std::move(atoms), std::move(conditions), std::move(links));
}

Interp3 grounded(const Adf& adf) {
    Interp3 nu = Interp3::all_undec(adf.size());
    // Each productive step decides at least one more atom.
    for (std::size_t step = 0; step <= adf.size(); ++step) {
        Interp3 next = gamma(adf, nu);
        if (next == nu) return nu;
        nu = std::move(next);
    }
    throw Error("gamma iteration did not reach a fixpoint; the operator is not monotone on this input");
}

std::vector<Interp3> enumerate(const Adf& adf, Semantics sigma, const Budget& budget) {
    std::vector<Interp3> out;
    switch (sigma) {
        case Semantics::TwoValued:
            for (const State& omega : two_valued_models(adf, budget)) out.push_back(Interp3::from_state(omega));
            break;
        case Semantics::Admissible:
            out = scan_interpretations(adf, budget, false);
            break;
        case Semantics::Complete:
            out = scan_interpretations(adf, budget, true);
            break;
        case Semantics::Preferred:
            out = maximal_elements(scan_interpretations(adf, budget, false));
            break;
        case Semantics::Grounded:
            out.push_back(grounded(adf));
            break;
        case Semantics::Stable:
            for (const State& omega : two_valued_models(adf, budget)) {
                if (is_stable(adf, omega)) out.push_back(Interp3::from_state(omega));
            }
            break;
    }
    sort_unique(out);
    return out;
}

std::vector<Interp3> maximal_elements(std::vector<Interp3> set) {
    sort_unique(set);
    // Most decided first: anything strictly above a candidate has fewer
    // undecided atoms, so some maximal element above it is already kept.
    std::stable_sort(set.begin(), set.end(), [](const Interp3& a, const Interp3& b) {
        return a.undecided_count() < b.undecided_count();
    });
    std::vector<Interp3> kept;
    for (auto& candidate : set) {
        const bool dominated = std::any_of(kept.begin(), kept.end(),
                                           [&](const Interp3& k) { return leq_i(candidate, k); });
        if (!dominated) kept.push_back(std::move(candidate));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<Interp3> minimal_elements(std::vector<Interp3> set) {
    sort_unique(set);
    std::stable_sort(set.begin(), set.end(), [](const Interp3& a, const Interp3& b) {
        return a.undecided_count() > b.undecided_count();
    });
    std::vector<Interp3> kept;
    for (auto& candidate : set) {
        const bool dominated = std::any_of(kept.begin(), kept.end(),
                                           [&](const Interp3& k) { return leq_i(k, candidate); });
        if (!dominated) kept.push_back(std::move(candidate));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace adfbn
