#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "adfbn/budget.hpp"
#include "adfbn/interpretation.hpp"
#include "adfbn/model.hpp"

namespace adfbn {

/// Update schemes. Asynchronous applies exactly one function per step;
/// AsynchronousGeneral applies any non-empty subset of them.
enum class Scheme { Synchronous, Asynchronous, AsynchronousGeneral };

std::string_view short_name(Scheme scheme) noexcept;
/// Accepts sync, async and async-general.
std::optional<Scheme> parse_scheme(std::string_view text) noexcept;

/// Successor states of `state`, sorted and duplicate-free. Asynchronous
/// schemes emit a self-loop only when no update changes the state.
std::vector<State> successors(const BooleanNetwork& network, const State& state, Scheme scheme);

/// State transition graph over all 2^n states in compressed adjacency form.
/// State `i` is the state whose bit mask is `i`.
class Stg {
public:
    Stg(std::size_t atoms, Scheme scheme, std::vector<std::uint64_t> offsets, std::vector<std::uint64_t> targets);

    std::size_t atoms() const noexcept { return atoms_; }
    Scheme scheme() const noexcept { return scheme_; }
    std::uint64_t state_count() const noexcept { return std::uint64_t{1} << atoms_; }
    std::uint64_t edge_count() const noexcept { return targets_.size(); }
    std::span<const std::uint64_t> successors(std::uint64_t state) const {
        return std::span<const std::uint64_t>(targets_).subspan(offsets_[state], offsets_[state + 1] - offsets_[state]);
    }
    State state(std::uint64_t index) const { return State(atoms_, index); }

private:
    std::size_t atoms_;
    Scheme scheme_;
    std::vector<std::uint64_t> offsets_;
    std::vector<std::uint64_t> targets_;
};

Stg build_stg(const BooleanNetwork& network, Scheme scheme, const Budget& budget = {});

/// No transition leaves `states`.
bool is_trap_set(const Stg& stg, std::span<const State> states);

/// Terminal strongly connected components, each sorted, the list sorted.
std::vector<std::vector<State>> attractors(const Stg& stg);

/// For each attractor, every state from which it is reachable (sorted).
std::vector<std::vector<State>> basins(const Stg& stg, std::span<const std::vector<State>> attractors);

/// Singleton attractors.
std::vector<State> stable_states(const Stg& stg);

/// S[m]: states agreeing with every fixed variable of the subspace.
bool in_subspace(const Interp3& m, const State& state);

/// S[small] is a subset of S[large], decided from the fixed variables.
bool subspace_leq(const Interp3& small, const Interp3& large);

/// F[m]: each variable whose function becomes constant after substituting
/// the fixed part of `m` takes that constant; the rest are free.
Interp3 f_of_m(const BooleanNetwork& network, const Interp3& m);

/// Trap-space test by the substitution criterion: every variable fixed in
/// `m` is fixed to the same value in F[m].
bool is_trap_space(const BooleanNetwork& network, const Interp3& m);

/// Trap-space test by definition: the completion set of `m` is a trap set
/// of `stg`.
bool is_trap_space_direct(const Stg& stg, const Interp3& m, const Budget& budget = {});

struct TrapReport {
    Scheme scheme = Scheme::Synchronous;
    std::vector<Interp3> trap_spaces;
    std::vector<Interp3> minimal;
    /// The trivial all-free space is never a candidate.
    std::vector<Interp3> maximal;
    std::vector<std::vector<State>> attractors;
    std::vector<std::vector<State>> basins;
    std::vector<State> stable_states;
};

/// 3^n scan over subspaces plus the STG analysis under `scheme`.
TrapReport trap_spaces(const BooleanNetwork& network, Scheme scheme = Scheme::Synchronous,
                       const Budget& budget = {});

}  // namespace adfbn
