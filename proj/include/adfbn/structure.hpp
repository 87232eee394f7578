#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adfbn/budget.hpp"
#include "adfbn/model.hpp"

namespace adfbn {

/// Plain directed graph on vertices 0..n-1.
struct Digraph {
    std::vector<std::vector<AtomId>> successors;

    std::size_t size() const noexcept { return successors.size(); }
};

/// One interaction arc. `redundant` marks links the target never depends on;
/// those are carried once with each sign.
struct SignedArc {
    AtomId from = 0;
    AtomId to = 0;
    Sign sign = Sign::Positive;
    bool redundant = false;
};

struct SignedGraph {
    std::size_t vertices = 0;
    std::vector<SignedArc> arcs;

    Digraph underlying() const;
};

/// Interaction graph with semantic signs: one arc per parent of each
/// function, signed by its supporting/attacking role. Throws
/// PreconditionError naming the function and argument of the first link
/// that is neither.
SignedGraph interaction_graph(const BooleanNetwork& network);

enum class CycleSign { Positive, Negative };

/// Positive iff the number of negative arcs is even.
CycleSign cycle_sign(std::span<const Sign> arc_signs) noexcept;

struct SignedCycle {
    /// Starts at the smallest vertex; arc i goes from vertices[i] to
    /// vertices[(i + 1) % size].
    std::vector<AtomId> vertices;
    std::vector<Sign> arc_signs;
    CycleSign sign = CycleSign::Positive;
};

/// All simple cycles, one per sign choice on redundant arcs. Throws
/// BudgetExceeded past budget.max_cycles.
std::vector<SignedCycle> signed_cycles(const SignedGraph& graph, const Budget& budget = {});
std::vector<SignedCycle> signed_cycles(const BooleanNetwork& network, const Budget& budget = {});

/// Visits simple cycles until `visit` returns false. Only vertices in
/// `allowed` are used when it is non-empty.
void for_each_signed_cycle(const SignedGraph& graph, const std::vector<bool>& allowed,
                           const std::function<bool(const SignedCycle&)>& visit);

struct FeedbackVertexSet {
    std::size_t size = 0;
    std::vector<AtomId> witness;
};

/// Minimum feedback vertex set by exhaustive search in order of increasing
/// size. Self-loops are cycles.
FeedbackVertexSet min_fvs(const Digraph& graph, const Budget& budget = {});

/// Strongly connected components, each sorted.
std::vector<std::vector<AtomId>> strongly_connected_components(const Digraph& graph);

enum class Conclusion { Unique, AtMostOne, AtLeastOne, None, NoConclusion };

std::string_view to_string(Conclusion conclusion) noexcept;

struct ExistenceReport {
    bool acyclic = false;
    bool has_positive_cycle = false;
    bool has_negative_cycle = false;
    /// A non-trivial strongly connected component without positive cycles
    /// and without arcs entering it from outside.
    bool negative_closed_scc = false;
    /// Every vertex has a non-redundant in-arc.
    bool all_regulated = false;
    /// Every vertex has a negative, non-redundant in-arc.
    bool all_negatively_regulated = false;
    bool redundant_arc_on_cycle = false;
    std::vector<Conclusion> conclusions;
    FeedbackVertexSet fvs;
    std::optional<std::uint64_t> exact_count;
    /// Conclusions contradicted by the exact count. Empty on every sound run.
    std::vector<std::string> violations;
};

/// Cycle-sign predicates and what they imply about the number of stable
/// states. Conclusions drop to NoConclusion when a redundant arc lies on a
/// cycle. The exact count is attached when n fits the state budget.
ExistenceReport existence_report(const BooleanNetwork& network, const Budget& budget = {});

/// Number of two-valued models, counted on truth tables.
std::uint64_t count_two_valued(const Adf& adf, const Budget& budget = {});

}  // namespace adfbn
