#include "adfbn/check.hpp"

#include <algorithm>
#include <random>

#include "adfbn/dynamics.hpp"
#include "adfbn/error.hpp"
#include "adfbn/semantics.hpp"
#include "adfbn/structure.hpp"

namespace adfbn {

namespace {

std::string render(const std::vector<Interp3>& set, Interp3::Style style) {
    std::vector<std::string> parts;
    for (const auto& nu : set) parts.push_back(nu.to_string(style));
    std::sort(parts.begin(), parts.end());
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i == 0 ? "" : ", ") + parts[i];
    return out + "}";
}

std::vector<Interp3> sorted(std::vector<Interp3> set) {
    std::sort(set.begin(), set.end());
    return set;
}

bool includes(const std::vector<Interp3>& big, const std::vector<Interp3>& small) {
    const auto a = sorted(big);
    const auto b = sorted(small);
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

CheckResult compare_sets(std::string name, const std::vector<Interp3>& lhs, const char* lhs_name,
                         Interp3::Style lhs_style, const std::vector<Interp3>& rhs, const char* rhs_name) {
    CheckResult result;
    result.name = std::move(name);
    result.passed = sorted(lhs) == sorted(rhs);
    result.detail = result.passed ? std::to_string(lhs.size()) + " elements agree"
                                  : std::string(lhs_name) + " " + render(lhs, lhs_style) + " vs " + rhs_name + " " +
                                        render(rhs, Interp3::Style::Adf);
    return result;
}

std::vector<Interp3> as_interps(const std::vector<State>& states) {
    std::vector<Interp3> out;
    for (const State& s : states) out.push_back(Interp3::from_state(s));
    return out;
}

std::vector<Interp3> all_subspaces(std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::vector<Interp3> out;
    out.reserve(total);
    for (std::uint64_t index = 0; index < total; ++index) out.push_back(interp_from_index(n, index));
    return out;
}

}  // namespace

std::vector<CheckResult> check_correspondences(const BooleanNetwork& network, const Budget& budget) {
    const std::size_t n = network.size();
    budget.require_interp_scan(n, "correspondence check");
    const Adf adf = bn_to_adf(network);
    std::vector<CheckResult> results;

    const Stg sync = build_stg(network, Scheme::Synchronous, budget);
    const Stg async = build_stg(network, Scheme::Asynchronous, budget);
    const auto two_valued = enumerate(adf, Semantics::TwoValued, budget);
    const auto admissible = enumerate(adf, Semantics::Admissible, budget);
    const auto complete = enumerate(adf, Semantics::Complete, budget);
    const auto preferred = enumerate(adf, Semantics::Preferred, budget);
    const auto ground = enumerate(adf, Semantics::Grounded, budget);
    const auto stable = enumerate(adf, Semantics::Stable, budget);
    const TrapReport traps = trap_spaces(network, Scheme::Synchronous, budget);
    const auto subspaces = all_subspaces(n);

    results.push_back(compare_sets("stable states = two-valued models", as_interps(stable_states(sync)),
                                   "stable states", Interp3::Style::Adf, two_valued, "two-valued"));
    results.push_back(compare_sets("trap spaces = admissible", traps.trap_spaces, "trap spaces",
                                   Interp3::Style::Subspace, admissible, "admissible"));
    results.push_back(compare_sets("minimal trap spaces = preferred", traps.minimal, "minimal trap spaces",
                                   Interp3::Style::Subspace, preferred, "preferred"));

    for (const Stg* stg : {&sync, &async}) {
        CheckResult closure{"substitution criterion = closure of the " + std::string(short_name(stg->scheme())) +
                                " transition graph",
                            true, false, ""};
        for (const auto& m : subspaces) {
            if (is_trap_space(network, m) != is_trap_space_direct(*stg, m, budget)) {
                closure.passed = false;
                closure.detail = "disagree on " + m.to_string(Interp3::Style::Subspace);
                break;
            }
        }
        if (closure.passed) closure.detail = std::to_string(subspaces.size()) + " subspaces agree";
        results.push_back(std::move(closure));
    }

    {
        // Inclusion decided on explicit completion sets, against the reversed
        // information order.
        CheckResult order{"subspace inclusion = reversed information order", true, false, ""};
        std::mt19937_64 rng(0x5eed0000ULL + n);
        std::uniform_int_distribution<std::size_t> pick(0, subspaces.size() - 1);
        const std::size_t pairs = std::min<std::size_t>(500, subspaces.size() * subspaces.size());
        for (std::size_t k = 0; k < pairs && order.passed; ++k) {
            const Interp3& m1 = subspaces[pick(rng)];
            const Interp3& m2 = subspaces[pick(rng)];
            const auto s1 = completions(m1, budget);
            const auto s2 = completions(m2, budget);
            const bool contained = std::includes(s2.begin(), s2.end(), s1.begin(), s1.end());
            if (contained != leq_i(m2, m1)) {
                order.passed = false;
                order.detail = "disagree on " + m1.to_string(Interp3::Style::Subspace) + " and " +
                               m2.to_string(Interp3::Style::Subspace);
            }
        }
        if (order.passed) order.detail = std::to_string(pairs) + " sampled pairs agree";
        results.push_back(std::move(order));
    }

    {
        CheckResult lattice{"stb <= 2v <= prf <= cmp <= adm, grnd <= cmp", true, false, ""};
        const std::pair<const char*, bool> steps[] = {
            {"stb <= 2v", includes(two_valued, stable)},      {"2v <= prf", includes(preferred, two_valued)},
            {"prf <= cmp", includes(complete, preferred)},    {"cmp <= adm", includes(admissible, complete)},
            {"grnd <= cmp", includes(complete, ground)},
        };
        for (const auto& [what, holds] : steps) {
            if (!holds) {
                lattice.passed = false;
                lattice.detail += std::string(lattice.detail.empty() ? "" : "; ") + what + " fails";
            }
        }
        if (lattice.passed) lattice.detail = "all inclusions hold";
        results.push_back(std::move(lattice));
    }

    {
        const auto least = minimal_elements(complete);
        CheckResult g{"grounded = least complete", ground.size() == 1 && least == ground, false, ""};
        g.detail = "grounded " + render(ground, Interp3::Style::Adf) + ", least complete " +
                   render(least, Interp3::Style::Adf);
        results.push_back(std::move(g));
    }

    {
        CheckResult same{"stable states agree across schemes", stable_states(sync) == stable_states(async), false, ""};
        same.detail = std::to_string(stable_states(sync).size()) + " synchronous, " +
                      std::to_string(stable_states(async).size()) + " asynchronous";
        results.push_back(std::move(same));
    }

    for (const Stg* stg : {&sync, &async}) {
        CheckResult holds{"every minimal trap space holds an attractor of the " + std::string(short_name(stg->scheme())) + " graph",
                          true, false, ""};
        const auto found = attractors(*stg);
        for (const auto& m : traps.minimal) {
            const bool any = std::any_of(found.begin(), found.end(), [&](const std::vector<State>& a) {
                return std::all_of(a.begin(), a.end(), [&](const State& s) { return in_subspace(m, s); });
            });
            if (!any) {
                holds.passed = false;
                holds.detail = "no attractor inside " + m.to_string(Interp3::Style::Subspace);
                break;
            }
        }
        if (holds.passed) holds.detail = std::to_string(traps.minimal.size()) + " minimal trap spaces";
        results.push_back(std::move(holds));
    }

    const bool sign_definite = is_sign_definite(network);
    {
        const bool bipolar = classify(adf).bipolar;
        CheckResult sd{"sign-definite = bipolar", sign_definite == bipolar, false,
                       std::string("sign-definite ") + (sign_definite ? "yes" : "no") + ", bipolar " +
                           (bipolar ? "yes" : "no")};
        results.push_back(std::move(sd));
    }

    if (sign_definite) {
        const ExistenceReport report = existence_report(network, budget);
        CheckResult existence{"cycle conclusions agree with the exact count", report.violations.empty(), false, ""};
        for (const auto& v : report.violations) existence.detail += (existence.detail.empty() ? "" : "; ") + v;
        if (existence.passed) {
            existence.detail = "count " + (report.exact_count ? std::to_string(*report.exact_count) : "n/a") +
                               ", conclusions";
            for (Conclusion c : report.conclusions) existence.detail += " " + std::string(to_string(c));
        }
        results.push_back(std::move(existence));
    } else {
        results.push_back({"cycle conclusions agree with the exact count", true, true,
                           "skipped: the network is not sign-definite"});
    }

    if (sorted(complete) != sorted(traps.trap_spaces)) {
        results.push_back({"complete vs trap spaces", true, true,
                           "differ, as expected in general: complete " + render(complete, Interp3::Style::Adf) +
                               ", trap spaces " + render(traps.trap_spaces, Interp3::Style::Subspace)});
    }
    const auto least_complete = minimal_elements(complete);
    if (sorted(least_complete) != sorted(traps.minimal)) {
        results.push_back({"minimal complete vs minimal trap spaces", true, true,
                           "differ: minimal complete " + render(least_complete, Interp3::Style::Adf) +
                               ", minimal trap spaces " + render(traps.minimal, Interp3::Style::Subspace)});
    }
    return results;
}

}  // namespace adfbn
