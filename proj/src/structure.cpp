#include "adfbn/structure.hpp"

#include <algorithm>
#include <bit>

#include "adfbn/error.hpp"
#include "adfbn/truth_table.hpp"

namespace adfbn {

Digraph SignedGraph::underlying() const {
    Digraph graph;
    graph.successors.resize(vertices);
    for (const SignedArc& arc : arcs) graph.successors[arc.from].push_back(arc.to);
    for (auto& succ : graph.successors) {
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
    return graph;
}

SignedGraph interaction_graph(const BooleanNetwork& network) {
    SignedGraph graph;
    graph.vertices = network.size();
    std::set<Link> parents;
    for (const SignedEdge& edge : network.edges()) parents.insert(Link{edge.from, edge.to});
    for (const Link& link : parents) {
        switch (semantic_polarity(network.function(link.to), link.from)) {
            case LinkKind::Supporting:
                graph.arcs.push_back({link.from, link.to, Sign::Positive, false});
                break;
            case LinkKind::Attacking:
                graph.arcs.push_back({link.from, link.to, Sign::Negative, false});
                break;
            case LinkKind::Both:
                graph.arcs.push_back({link.from, link.to, Sign::Positive, true});
                graph.arcs.push_back({link.from, link.to, Sign::Negative, true});
                break;
            case LinkKind::Neither:
                throw PreconditionError("network is not sign-definite: the function of '" + network.name(link.to) +
                                        "' is neither increasing nor decreasing in '" + network.name(link.from) + "'");
        }
    }
    return graph;
}

CycleSign cycle_sign(std::span<const Sign> arc_signs) noexcept {
    const auto negatives = std::count(arc_signs.begin(), arc_signs.end(), Sign::Negative);
    return negatives % 2 == 0 ? CycleSign::Positive : CycleSign::Negative;
}

namespace {

struct CycleSearch {
    const SignedGraph& graph;
    const std::vector<bool>& allowed;
    const std::function<bool(const SignedCycle&)>& visit;
    std::vector<std::vector<std::size_t>> out_arcs;
    std::vector<bool> on_path;
    std::vector<AtomId> path;
    std::vector<Sign> signs;

    bool usable(AtomId v) const { return allowed.empty() || allowed[v]; }

    // Extends the path ending at `v`; cycles are reported once, rooted at
    // their smallest vertex `start`. Returns false to stop the search.
    bool extend(AtomId start, AtomId v) {
        for (std::size_t a : out_arcs[v]) {
            const SignedArc& arc = graph.arcs[a];
            const AtomId w = arc.to;
            if (w < start || !usable(w)) continue;
            signs.push_back(arc.sign);
            bool keep_going = true;
            if (w == start) {
                SignedCycle cycle{path, signs, cycle_sign(signs)};
                keep_going = visit(cycle);
            } else if (!on_path[w]) {
                on_path[w] = true;
                path.push_back(w);
                keep_going = extend(start, w);
                path.pop_back();
                on_path[w] = false;
            }
            signs.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }
};

bool is_acyclic(const Digraph& graph, std::uint64_t removed) {
    const std::size_t n = graph.size();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (((removed >> v) & 1U) != 0) continue;
        for (AtomId w : graph.successors[v]) {
            if (((removed >> w) & 1U) == 0) ++indegree[w];
        }
    }
    std::vector<AtomId> ready;
    std::size_t remaining = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (((removed >> v) & 1U) != 0) continue;
        ++remaining;
        if (indegree[v] == 0) ready.push_back(static_cast<AtomId>(v));
    }
    while (!ready.empty()) {
        const AtomId v = ready.back();
        ready.pop_back();
        --remaining;
        for (AtomId w : graph.successors[v]) {
            if (((removed >> w) & 1U) == 0 && --indegree[w] == 0) ready.push_back(w);
        }
    }
    return remaining == 0;
}

void tarjan_visit(const Digraph& graph, AtomId v, std::vector<int>& index, std::vector<int>& low,
                  std::vector<bool>& on_stack, std::vector<AtomId>& stack, int& counter,
                  std::vector<std::vector<AtomId>>& out) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (AtomId w : graph.successors[v]) {
        if (index[w] < 0) {
            tarjan_visit(graph, w, index, low, on_stack, stack, counter, out);
            low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
        }
    }
    if (low[v] == index[v]) {
        std::vector<AtomId> component;
        AtomId w = 0;
        do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
    }
}

}  // namespace

void for_each_signed_cycle(const SignedGraph& graph, const std::vector<bool>& allowed,
                           const std::function<bool(const SignedCycle&)>& visit) {
    CycleSearch search{graph, allowed, visit, std::vector<std::vector<std::size_t>>(graph.vertices),
                       std::vector<bool>(graph.vertices, false), {}, {}};
    for (std::size_t a = 0; a < graph.arcs.size(); ++a) search.out_arcs[graph.arcs[a].from].push_back(a);
    for (AtomId start = 0; start < graph.vertices; ++start) {
        if (!search.usable(start)) continue;
        search.on_path[start] = true;
        search.path.assign(1, start);
        const bool keep_going = search.extend(start, start);
        search.on_path[start] = false;
        if (!keep_going) return;
    }
}

std::vector<SignedCycle> signed_cycles(const SignedGraph& graph, const Budget& budget) {
    std::vector<SignedCycle> cycles;
    for_each_signed_cycle(graph, {}, [&](const SignedCycle& cycle) {
        if (cycles.size() >= budget.max_cycles) {
            throw BudgetExceeded("more than " + std::to_string(budget.max_cycles) + " signed cycles");
        }
        cycles.push_back(cycle);
        return true;
    });
    return cycles;
}

std::vector<SignedCycle> signed_cycles(const BooleanNetwork& network, const Budget& budget) {
    return signed_cycles(interaction_graph(network), budget);
}

std::vector<std::vector<AtomId>> strongly_connected_components(const Digraph& graph) {
    const std::size_t n = graph.size();
    std::vector<int> index(n, -1);
    std::vector<int> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<AtomId> stack;
    std::vector<std::vector<AtomId>> out;
    int counter = 0;
    for (AtomId v = 0; v < n; ++v) {
        if (index[v] < 0) tarjan_visit(graph, v, index, low, on_stack, stack, counter, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FeedbackVertexSet min_fvs(const Digraph& graph, const Budget& budget) {
    const std::size_t n = graph.size();
    budget.require_state_scan(n, "feedback vertex set");
    for (std::size_t k = 0; k <= n; ++k) {
        if (k == 0) {
            if (is_acyclic(graph, 0)) return {};
            continue;
        }
        // Gosper's hack: every n-bit mask with exactly k bits, increasing.
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
            if (is_acyclic(graph, mask)) {
                FeedbackVertexSet result{k, {}};
                for (std::size_t v = 0; v < n; ++v) {
                    if (((mask >> v) & 1U) != 0) result.witness.push_back(static_cast<AtomId>(v));
                }
                return result;
            }
            const std::uint64_t low_bit = mask & (~mask + 1);
            const std::uint64_t ripple = mask + low_bit;
            mask = (((ripple ^ mask) >> 2) / low_bit) | ripple;
        }
    }
    return {};  // unreachable: removing every vertex leaves no cycle
}

std::string_view to_string(Conclusion conclusion) noexcept {
    switch (conclusion) {
        case Conclusion::Unique: return "unique";
        case Conclusion::AtMostOne: return "at_most_one";
        case Conclusion::AtLeastOne: return "at_least_one";
        case Conclusion::None: return "none";
        case Conclusion::NoConclusion: return "no_conclusion";
    }
    return "?";
}

ExistenceReport existence_report(const BooleanNetwork& network, const Budget& budget) {
    const SignedGraph graph = interaction_graph(network);
    const Digraph digraph = graph.underlying();
    const std::size_t n = network.size();
    ExistenceReport report;

    report.acyclic = is_acyclic(digraph, 0);

    std::size_t visited = 0;
    const auto count_visit = [&] {
        if (++visited > budget.max_cycles) {
            throw BudgetExceeded("more than " + std::to_string(budget.max_cycles) + " signed cycles");
        }
    };
    for_each_signed_cycle(graph, {}, [&](const SignedCycle& cycle) {
        count_visit();
        (cycle.sign == CycleSign::Positive ? report.has_positive_cycle : report.has_negative_cycle) = true;
        return !(report.has_positive_cycle && report.has_negative_cycle);
    });

    const auto components = strongly_connected_components(digraph);
    std::vector<std::size_t> component_of(n, 0);
    for (std::size_t c = 0; c < components.size(); ++c) {
        for (AtomId v : components[c]) component_of[v] = c;
    }
    for (const SignedArc& arc : graph.arcs) {
        if (arc.redundant && component_of[arc.from] == component_of[arc.to]) {
            const bool on_cycle = arc.from == arc.to || components[component_of[arc.from]].size() > 1;
            report.redundant_arc_on_cycle = report.redundant_arc_on_cycle || on_cycle;
        }
    }

    for (std::size_t c = 0; c < components.size() && !report.negative_closed_scc; ++c) {
        const auto& members = components[c];
        bool internal_arc = false;
        bool entered_from_outside = false;
        for (const SignedArc& arc : graph.arcs) {
            if (component_of[arc.to] != c) continue;
            if (component_of[arc.from] == c) {
                internal_arc = true;
            } else {
                entered_from_outside = true;
            }
        }
        if (!internal_arc || entered_from_outside) continue;
        std::vector<bool> allowed(n, false);
        for (AtomId v : members) allowed[v] = true;
        bool positive_inside = false;
        for_each_signed_cycle(graph, allowed, [&](const SignedCycle& cycle) {
            count_visit();
            positive_inside = cycle.sign == CycleSign::Positive;
            return !positive_inside;
        });
        report.negative_closed_scc = !positive_inside;
    }

    std::vector<bool> regulated(n, false);
    std::vector<bool> negatively_regulated(n, false);
    for (const SignedArc& arc : graph.arcs) {
        if (arc.redundant) continue;
        regulated[arc.to] = true;
        if (arc.sign == Sign::Negative) negatively_regulated[arc.to] = true;
    }
    report.all_regulated = std::all_of(regulated.begin(), regulated.end(), [](bool b) { return b; });
    report.all_negatively_regulated =
        std::all_of(negatively_regulated.begin(), negatively_regulated.end(), [](bool b) { return b; });

    if (!report.redundant_arc_on_cycle) {
        if (report.acyclic) report.conclusions.push_back(Conclusion::Unique);
        if (!report.has_positive_cycle) report.conclusions.push_back(Conclusion::AtMostOne);
        if (!report.has_negative_cycle) report.conclusions.push_back(Conclusion::AtLeastOne);
        // A stable state needs a positive cycle once every vertex has a regulator.
        if (report.negative_closed_scc || (!report.has_positive_cycle && report.all_regulated)) {
            report.conclusions.push_back(Conclusion::None);
        }
    }
    if (report.conclusions.empty()) report.conclusions.push_back(Conclusion::NoConclusion);

    report.fvs = min_fvs(digraph, budget);

    if (n <= budget.max_state_atoms) {
        const std::uint64_t count = count_two_valued(bn_to_adf(network), budget);
        report.exact_count = count;
        for (Conclusion c : report.conclusions) {
            const bool holds = c == Conclusion::Unique       ? count == 1
                               : c == Conclusion::AtMostOne  ? count <= 1
                               : c == Conclusion::AtLeastOne ? count >= 1
                               : c == Conclusion::None       ? count == 0
                                                             : true;
            if (!holds) {
                report.violations.push_back("conclusion " + std::string(to_string(c)) + " contradicted by " +
                                            std::to_string(count) + " stable states");
            }
        }
        if (report.fvs.size < 64 && count > (std::uint64_t{1} << report.fvs.size)) {
            report.violations.push_back(std::to_string(count) + " stable states exceed 2^" +
                                        std::to_string(report.fvs.size));
        }
    }
    return report;
}

std::uint64_t count_two_valued(const Adf& adf, const Budget& budget) {
    budget.require_state_scan(adf.size(), "two-valued count");
    std::vector<TruthTable> tables;
    tables.reserve(adf.size());
    for (const Formula& condition : adf.conditions()) tables.push_back(tabulate(condition, adf.size()));
    return count_fixed_points(tables);
}

}  // namespace adfbn
