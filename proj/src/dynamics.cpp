#include "adfbn/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>
#include <unordered_set>

#include "adfbn/error.hpp"
#include "adfbn/semantics.hpp"
#include "adfbn/truth_table.hpp"

namespace adfbn {

std::string_view short_name(Scheme scheme) noexcept {
    switch (scheme) {
        case Scheme::Synchronous: return "sync";
        case Scheme::Asynchronous: return "async";
        case Scheme::AsynchronousGeneral: return "async-general";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view text) noexcept {
    for (Scheme scheme : {Scheme::Synchronous, Scheme::Asynchronous, Scheme::AsynchronousGeneral}) {
        if (short_name(scheme) == text) return scheme;
    }
    return std::nullopt;
}

namespace {

constexpr std::size_t kMaxGeneralUpdates = 20;
constexpr std::size_t kMaxResidualAtoms = 24;

void require_network_size(const BooleanNetwork& network, std::size_t size) {
    if (network.size() != size) {
        throw ModelMismatch("state over " + std::to_string(size) + " atoms used with a network of " +
                            std::to_string(network.size()) + " variables");
    }
}

// Appends the successors of `state` given its synchronous image, in
// increasing bit-mask order.
void append_successors(std::uint64_t state, std::uint64_t image, Scheme scheme, std::vector<std::uint64_t>& out) {
    if (scheme == Scheme::Synchronous) {
        out.push_back(image);
        return;
    }
    const std::uint64_t changed = state ^ image;
    if (changed == 0) {
        out.push_back(state);
        return;
    }
    const std::size_t begin = out.size();
    if (scheme == Scheme::Asynchronous) {
        for (std::uint64_t rest = changed; rest != 0; rest &= rest - 1) out.push_back(state ^ (rest & (~rest + 1)));
    } else {
        if (static_cast<std::size_t>(std::popcount(changed)) > kMaxGeneralUpdates) {
            throw BudgetExceeded("too many simultaneous updates for the general asynchronous scheme");
        }
        for (std::uint64_t subset = changed; subset != 0; subset = (subset - 1) & changed) out.push_back(state ^ subset);
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(begin), out.end());
}

// Synchronous image of every state, computed from the function truth
// tables. Large spaces are split by index range across threads.
std::vector<std::uint64_t> synchronous_images(const BooleanNetwork& network) {
    const std::size_t n = network.size();
    std::vector<TruthTable> tables;
    tables.reserve(n);
    for (const Formula& f : network.functions()) tables.push_back(tabulate(f, n));

    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint64_t> images(total, 0);
    const auto fill = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t s = begin; s < end; ++s) {
            std::uint64_t image = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (tables[i].test(s)) image |= std::uint64_t{1} << i;
            }
            images[s] = image;
        }
    };

    constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 14;
    const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    if (total < kParallelThreshold || workers == 1) {
        fill(0, total);
        return images;
    }
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::uint64_t begin = 0; begin < total; begin += chunk) {
        pool.emplace_back(fill, begin, std::min(total, begin + chunk));
    }
    pool.clear();  // joins before the table is handed out
    return images;
}

struct TarjanFrame {
    std::uint64_t node;
    std::uint64_t next_edge;
};

std::vector<std::vector<std::uint64_t>> terminal_components(const Stg& stg) {
    constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t total = stg.state_count();
    std::vector<std::uint64_t> index(total, kUnset);
    std::vector<std::uint64_t> low(total, 0);
    std::vector<std::uint64_t> component(total, kUnset);
    std::vector<bool> on_stack(total, false);
    std::vector<std::uint64_t> stack;
    std::vector<TarjanFrame> calls;
    std::vector<std::vector<std::uint64_t>> components;
    std::uint64_t counter = 0;

    for (std::uint64_t root = 0; root < total; ++root) {
        if (index[root] != kUnset) continue;
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        calls.push_back({root, 0});
        while (!calls.empty()) {
            TarjanFrame& frame = calls.back();
            const std::uint64_t v = frame.node;
            const auto succ = stg.successors(v);
            if (frame.next_edge < succ.size()) {
                const std::uint64_t w = succ[frame.next_edge++];
                if (index[w] == kUnset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    calls.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            calls.pop_back();
            if (low[v] == index[v]) {
                std::vector<std::uint64_t> members;
                std::uint64_t w = kUnset;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = components.size();
                    members.push_back(w);
                } while (w != v);
                components.push_back(std::move(members));
            }
            if (!calls.empty()) {
                const std::uint64_t parent = calls.back().node;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    std::vector<std::vector<std::uint64_t>> terminal;
    for (std::size_t c = 0; c < components.size(); ++c) {
        const bool closed = std::all_of(components[c].begin(), components[c].end(), [&](std::uint64_t v) {
            const auto succ = stg.successors(v);
            return std::all_of(succ.begin(), succ.end(), [&](std::uint64_t w) { return component[w] == c; });
        });
        if (closed) terminal.push_back(std::move(components[c]));
    }
    return terminal;
}

std::vector<State> to_sorted_states(const Stg& stg, const std::vector<std::uint64_t>& indices) {
    std::vector<State> out;
    out.reserve(indices.size());
    for (std::uint64_t i : indices) out.push_back(stg.state(i));
    std::sort(out.begin(), out.end());
    return out;
}

// Subspaces with no other listed subspace strictly inside them.
std::vector<Interp3> smallest_subspaces(const std::vector<Interp3>& spaces) {
    std::vector<Interp3> order = spaces;
    std::stable_sort(order.begin(), order.end(), [](const Interp3& a, const Interp3& b) {
        return a.undecided_count() < b.undecided_count();
    });
    std::vector<Interp3> kept;
    for (const auto& candidate : order) {
        const bool contains_other = std::any_of(kept.begin(), kept.end(),
                                                [&](const Interp3& k) { return subspace_leq(k, candidate); });
        if (!contains_other) kept.push_back(candidate);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

// Subspaces not strictly inside any other listed subspace.
std::vector<Interp3> largest_subspaces(const std::vector<Interp3>& spaces) {
    std::vector<Interp3> order = spaces;
    std::stable_sort(order.begin(), order.end(), [](const Interp3& a, const Interp3& b) {
        return a.undecided_count() > b.undecided_count();
    });
    std::vector<Interp3> kept;
    for (const auto& candidate : order) {
        const bool inside_other = std::any_of(kept.begin(), kept.end(),
                                              [&](const Interp3& k) { return subspace_leq(candidate, k); });
        if (!inside_other) kept.push_back(candidate);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

std::vector<State> successors(const BooleanNetwork& network, const State& state, Scheme scheme) {
    require_network_size(network, state.size());
    std::uint64_t image = 0;
    for (AtomId i = 0; i < network.size(); ++i) {
        if (eval2(network.function(i), state)) image |= std::uint64_t{1} << i;
    }
    std::vector<std::uint64_t> indices;
    append_successors(state.bits(), image, scheme, indices);
    std::vector<State> out;
    out.reserve(indices.size());
    for (std::uint64_t bits : indices) out.emplace_back(state.size(), bits);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Stg::Stg(std::size_t atoms, Scheme scheme, std::vector<std::uint64_t> offsets, std::vector<std::uint64_t> targets)
    : atoms_(atoms), scheme_(scheme), offsets_(std::move(offsets)), targets_(std::move(targets)) {
    if (offsets_.size() != state_count() + 1 || offsets_.back() != targets_.size()) {
        throw Error("inconsistent transition graph layout");
    }
}

Stg build_stg(const BooleanNetwork& network, Scheme scheme, const Budget& budget) {
    budget.require_state_scan(network.size(), "state transition graph");
    const std::vector<std::uint64_t> images = synchronous_images(network);
    std::vector<std::uint64_t> offsets;
    std::vector<std::uint64_t> targets;
    offsets.reserve(images.size() + 1);
    targets.reserve(images.size());
    offsets.push_back(0);
    for (std::uint64_t s = 0; s < images.size(); ++s) {
        append_successors(s, images[s], scheme, targets);
        offsets.push_back(targets.size());
    }
    return Stg(network.size(), scheme, std::move(offsets), std::move(targets));
}

bool is_trap_set(const Stg& stg, std::span<const State> states) {
    std::unordered_set<std::uint64_t> members;
    for (const State& s : states) {
        if (s.size() != stg.atoms()) throw ModelMismatch("state size does not match the transition graph");
        members.insert(s.bits());
    }
    for (std::uint64_t s : members) {
        for (std::uint64_t t : stg.successors(s)) {
            if (!members.contains(t)) return false;
        }
    }
    return true;
}

std::vector<std::vector<State>> attractors(const Stg& stg) {
    std::vector<std::vector<State>> out;
    for (const auto& component : terminal_components(stg)) out.push_back(to_sorted_states(stg, component));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<State>> basins(const Stg& stg, std::span<const std::vector<State>> attractor_sets) {
    const std::uint64_t total = stg.state_count();
    std::vector<std::uint64_t> in_offsets(total + 1, 0);
    for (std::uint64_t s = 0; s < total; ++s) {
        for (std::uint64_t t : stg.successors(s)) ++in_offsets[t + 1];
    }
    for (std::uint64_t s = 0; s < total; ++s) in_offsets[s + 1] += in_offsets[s];
    std::vector<std::uint64_t> sources(in_offsets.back());
    std::vector<std::uint64_t> fill(in_offsets.begin(), in_offsets.end() - 1);
    for (std::uint64_t s = 0; s < total; ++s) {
        for (std::uint64_t t : stg.successors(s)) sources[fill[t]++] = s;
    }

    std::vector<std::vector<State>> out;
    for (const auto& attractor : attractor_sets) {
        std::vector<bool> seen(total, false);
        std::vector<std::uint64_t> frontier;
        for (const State& s : attractor) {
            if (!seen[s.bits()]) {
                seen[s.bits()] = true;
                frontier.push_back(s.bits());
            }
        }
        std::vector<std::uint64_t> reached = frontier;
        while (!frontier.empty()) {
            const std::uint64_t t = frontier.back();
            frontier.pop_back();
            for (std::uint64_t k = in_offsets[t]; k < in_offsets[t + 1]; ++k) {
                const std::uint64_t s = sources[k];
                if (!seen[s]) {
                    seen[s] = true;
                    frontier.push_back(s);
                    reached.push_back(s);
                }
            }
        }
        out.push_back(to_sorted_states(stg, reached));
    }
    return out;
}

std::vector<State> stable_states(const Stg& stg) {
    std::vector<State> out;
    for (const auto& attractor : attractors(stg)) {
        if (attractor.size() == 1) out.push_back(attractor.front());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_subspace(const Interp3& m, const State& state) {
    if (m.size() != state.size()) throw ModelMismatch("subspace and state sizes differ");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != Truth::Undec && (m[i] == Truth::True) != state[i]) return false;
    }
    return true;
}

bool subspace_leq(const Interp3& small, const Interp3& large) {
    if (small.size() != large.size()) throw ModelMismatch("subspace sizes differ");
    for (std::size_t i = 0; i < large.size(); ++i) {
        if (large[i] != Truth::Undec && small[i] != large[i]) return false;
    }
    return true;
}

Interp3 f_of_m(const BooleanNetwork& network, const Interp3& m) {
    require_network_size(network, m.size());
    std::map<AtomId, bool> fixed;
    for (AtomId i = 0; i < m.size(); ++i) {
        if (m[i] != Truth::Undec) fixed.emplace(i, m[i] == Truth::True);
    }
    std::vector<Truth> image(network.size(), Truth::Undec);
    for (AtomId i = 0; i < network.size(); ++i) {
        const Formula residual = simplify(substitute(network.function(i), fixed));
        if (residual.is_constant()) {
            image[i] = to_truth(residual.kind() == Formula::Kind::True);
            continue;
        }
        // Folding alone misses tautologies such as a | !a; the residual is
        // constant exactly when its truth table is.
        const auto atoms = free_atoms(residual);
        if (atoms.size() > kMaxResidualAtoms) {
            throw BudgetExceeded("F[m]: residual function of '" + network.name(i) + "' has too many free arguments");
        }
        std::vector<std::optional<AtomId>> local(atoms.back() + std::size_t{1});
        for (std::size_t j = 0; j < atoms.size(); ++j) local[atoms[j]] = static_cast<AtomId>(j);
        const TruthTable table = tabulate(remap_atoms(residual, local), atoms.size());
        const std::uint64_t ones = kernels::active_kernels().popcount(table.words());
        if (ones == 0) {
            image[i] = Truth::False;
        } else if (ones == table.bit_count()) {
            image[i] = Truth::True;
        }
    }
    return Interp3(std::move(image));
}

bool is_trap_space(const BooleanNetwork& network, const Interp3& m) {
    const Interp3 image = f_of_m(network, m);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != Truth::Undec && image[i] != m[i]) return false;
    }
    return true;
}

bool is_trap_space_direct(const Stg& stg, const Interp3& m, const Budget& budget) {
    if (m.size() != stg.atoms()) throw ModelMismatch("subspace size does not match the transition graph");
    const auto states = completions(m, budget);
    return is_trap_set(stg, states);
}

TrapReport trap_spaces(const BooleanNetwork& network, Scheme scheme, const Budget& budget) {
    budget.require_interp_scan(network.size(), "trap spaces");
    TrapReport report;
    report.scheme = scheme;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < network.size(); ++i) total *= 3;
    for (std::uint64_t index = 0; index < total; ++index) {
        Interp3 m = interp_from_index(network.size(), index);
        if (is_trap_space(network, m)) report.trap_spaces.push_back(std::move(m));
    }
    report.minimal = smallest_subspaces(report.trap_spaces);

    std::vector<Interp3> nontrivial;
    std::copy_if(report.trap_spaces.begin(), report.trap_spaces.end(), std::back_inserter(nontrivial),
                 [](const Interp3& m) { return !std::all_of(m.values().begin(), m.values().end(),
                                                            [](Truth t) { return t == Truth::Undec; }); });
    report.maximal = largest_subspaces(nontrivial);

    const Stg stg = build_stg(network, scheme, budget);
    report.attractors = attractors(stg);
    report.basins = basins(stg, report.attractors);
    for (const auto& attractor : report.attractors) {
        if (attractor.size() == 1) report.stable_states.push_back(attractor.front());
    }
    std::sort(report.stable_states.begin(), report.stable_states.end());
    return report;
}

}  // namespace adfbn
