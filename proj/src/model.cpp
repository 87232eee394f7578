#include "adfbn/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "adfbn/error.hpp"

namespace adfbn {

namespace {

void require_unique_names(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names) {
        if (!seen.insert(name).second) throw ModelMismatch(std::string("duplicate ") + what + " '" + name + "'");
    }
}

std::optional<AtomId> find_name(const std::vector<std::string>& names, std::string_view name) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<AtomId>(it - names.begin());
}

void require_atoms_in_range(const std::vector<Formula>& formulas, std::size_t n, const char* what) {
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        if (atom_bound(formulas[i]) > n) {
            throw ModelMismatch(std::string(what) + " " + std::to_string(i) + " refers to an unknown atom");
        }
    }
}

}  // namespace

Adf::Adf(std::vector<std::string> atoms, std::vector<Formula> conditions)
    : atoms_(std::move(atoms)), conditions_(std::move(conditions)) {
    if (atoms_.size() != conditions_.size()) {
        throw ModelMismatch("an ADF needs exactly one acceptance condition per atom");
    }
    require_unique_names(atoms_, "atom");
    require_atoms_in_range(conditions_, atoms_.size(), "condition");
    condition_atoms_.reserve(conditions_.size());
    for (std::size_t s = 0; s < conditions_.size(); ++s) {
        condition_atoms_.push_back(free_atoms(conditions_[s]));
        for (AtomId parent : condition_atoms_.back()) links_.insert(Link{parent, static_cast<AtomId>(s)});
    }
}

Adf::Adf(std::vector<std::string> atoms, std::vector<Formula> conditions, std::set<Link> links)
    : Adf(std::move(atoms), std::move(conditions)) {
    for (const Link& link : links) {
        if (link.from >= size() || link.to >= size()) throw ModelMismatch("link endpoint outside the atom set");
    }
    for (const Link& implied : links_) {
        if (!links.contains(implied)) {
            throw ModelMismatch("condition of '" + name(implied.to) + "' mentions '" + name(implied.from) +
                                "' without a link");
        }
    }
    links_ = std::move(links);
}

std::optional<AtomId> Adf::find(std::string_view name) const { return find_name(atoms_, name); }

std::vector<AtomId> Adf::parents(AtomId atom) const {
    std::vector<AtomId> out;
    for (const Link& link : links_) {
        if (link.to == atom) out.push_back(link.from);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Link> Adf::vacuous_links() const {
    std::vector<Link> out;
    for (const Link& link : links_) {
        const auto& used = condition_atoms_[link.to];
        if (!std::binary_search(used.begin(), used.end(), link.from)) out.push_back(link);
    }
    return out;
}

BooleanNetwork::BooleanNetwork(std::vector<std::string> variables, std::vector<Formula> functions)
    : BooleanNetwork(variables, functions, polarity_edges(functions)) {}

BooleanNetwork::BooleanNetwork(std::vector<std::string> variables, std::vector<Formula> functions,
                               std::set<SignedEdge> edges)
    : variables_(std::move(variables)), functions_(std::move(functions)), edges_(std::move(edges)) {
    if (variables_.size() != functions_.size()) {
        throw ModelMismatch("a Boolean network needs exactly one function per variable");
    }
    require_unique_names(variables_, "variable");
    require_atoms_in_range(functions_, variables_.size(), "function");
    for (const SignedEdge& edge : edges_) {
        if (edge.from >= size() || edge.to >= size()) throw ModelMismatch("edge endpoint outside the variable set");
    }
    for (std::size_t v = 0; v < functions_.size(); ++v) {
        for (AtomId u : free_atoms(functions_[v])) {
            const bool covered = edges_.contains(SignedEdge{u, static_cast<AtomId>(v), Sign::Positive}) ||
                                 edges_.contains(SignedEdge{u, static_cast<AtomId>(v), Sign::Negative});
            if (!covered) {
                throw ModelMismatch("function of '" + variables_[v] + "' reads '" + variables_[u] +
                                    "' without an edge");
            }
        }
    }
}

std::optional<AtomId> BooleanNetwork::find(std::string_view name) const { return find_name(variables_, name); }

bool BooleanNetwork::is_input(AtomId variable) const { return function(variable) == Formula::atom(variable); }

std::vector<AtomId> BooleanNetwork::inputs() const {
    std::vector<AtomId> out;
    for (AtomId v = 0; v < size(); ++v) {
        if (is_input(v)) out.push_back(v);
    }
    return out;
}

std::set<SignedEdge> polarity_edges(std::span<const Formula> functions) {
    std::set<SignedEdge> edges;
    for (std::size_t v = 0; v < functions.size(); ++v) {
        const auto target = static_cast<AtomId>(v);
        for (const auto& [atom, polarity] : syntactic_polarity(to_nnf(functions[v]))) {
            if (polarity == Polarity::Positive || polarity == Polarity::Both) {
                edges.insert(SignedEdge{atom, target, Sign::Positive});
            }
            if (polarity == Polarity::Negative || polarity == Polarity::Both) {
                edges.insert(SignedEdge{atom, target, Sign::Negative});
            }
        }
    }
    return edges;
}

Adf bn_to_adf(const BooleanNetwork& network) {
    std::set<Link> links;
    for (const SignedEdge& edge : network.edges()) links.insert(Link{edge.from, edge.to});
    return Adf(network.variables(), network.functions(), std::move(links));
}

BnConversion adf_to_bn(const Adf& adf) {
    std::vector<Formula> nnf;
    nnf.reserve(adf.size());
    for (const Formula& condition : adf.conditions()) nnf.push_back(to_nnf(condition));

    BnConversion result;
    for (AtomId s = 0; s < adf.size(); ++s) {
        for (const auto& [atom, polarity] : syntactic_polarity(nnf[s])) {
            if (polarity == Polarity::Both) {
                result.warnings.push_back("'" + adf.name(atom) + "' occurs with both polarities in the condition of '" +
                                          adf.name(s) + "'; adding a positive and a negative edge");
            }
        }
    }
    auto edges = polarity_edges(nnf);
    result.network = BooleanNetwork(adf.atoms(), std::move(nnf), std::move(edges));
    return result;
}

Classification classify(const Adf& adf) {
    Classification result;
    for (const Link& link : adf.links()) {
        const LinkKind kind = semantic_polarity(adf.condition(link.to), link.from);
        result.per_link.emplace(link, kind);
        if (kind == LinkKind::Neither) result.bipolar = false;
    }
    return result;
}

bool is_sign_definite(const Formula& function) {
    constexpr std::size_t kMaxArguments = 10;
    const auto atoms = free_atoms(function);
    const std::size_t k = atoms.size();
    if (k > kMaxArguments) {
        throw BudgetExceeded("sign-definiteness check over " + std::to_string(k) + " arguments is too large");
    }
    // Local table: bit j of `x` is the value of atoms[j].
    const std::size_t points = std::size_t{1} << k;
    std::vector<std::uint8_t> value(points);
    std::vector<std::uint8_t> assignment(atoms.empty() ? 0 : atoms.back() + std::size_t{1}, 0);
    for (std::size_t x = 0; x < points; ++x) {
        for (std::size_t j = 0; j < k; ++j) assignment[atoms[j]] = static_cast<std::uint8_t>((x >> j) & 1U);
        value[x] = evaluate(function, [&assignment](AtomId a) { return assignment[a] != 0; }) ? 1 : 0;
    }
    // Sign-definite iff some reflection x -> x ^ flip makes the function
    // increasing monotone: x <= y implies g(x) <= g(y) for all comparable pairs.
    const std::size_t full = points - 1;
    for (std::size_t flip = 0; flip < points; ++flip) {
        bool monotone = true;
        for (std::size_t x = 0; x < points && monotone; ++x) {
            if (value[x ^ flip] == 0) continue;
            const std::size_t rest = full & ~x;
            for (std::size_t extra = rest;; extra = (extra - 1) & rest) {
                if (value[(x | extra) ^ flip] == 0) {
                    monotone = false;
                    break;
                }
                if (extra == 0) break;
            }
        }
        if (monotone) return true;
    }
    return false;
}

bool is_sign_definite(const BooleanNetwork& network) {
    return std::all_of(network.functions().begin(), network.functions().end(),
                       [](const Formula& f) { return is_sign_definite(f); });
}

}  // namespace adfbn
