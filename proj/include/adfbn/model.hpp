#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adfbn/formula.hpp"

namespace adfbn {

/// Directed dependency (from, to): `from` is a parent of `to`.
struct Link {
    AtomId from = 0;
    AtomId to = 0;
    friend auto operator<=>(const Link&, const Link&) = default;
};

enum class Sign : std::uint8_t { Positive, Negative };

struct SignedEdge {
    AtomId from = 0;
    AtomId to = 0;
    Sign sign = Sign::Positive;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// Abstract dialectical framework: atoms in declaration order, links, and one
/// acceptance condition per atom. The free atoms of every condition are
/// parents of that atom; links without an occurrence are kept as vacuous.
class Adf {
public:
    Adf() = default;
    /// Links are the free atoms of each condition.
    Adf(std::vector<std::string> atoms, std::vector<Formula> conditions);
    Adf(std::vector<std::string> atoms, std::vector<Formula> conditions, std::set<Link> links);

    std::size_t size() const noexcept { return atoms_.size(); }
    const std::vector<std::string>& atoms() const noexcept { return atoms_; }
    const std::string& name(AtomId atom) const { return atoms_.at(atom); }
    std::optional<AtomId> find(std::string_view name) const;

    const Formula& condition(AtomId atom) const { return conditions_.at(atom); }
    const std::vector<Formula>& conditions() const noexcept { return conditions_; }
    /// Free atoms of the condition of `atom`, sorted.
    std::span<const AtomId> condition_atoms(AtomId atom) const { return condition_atoms_.at(atom); }

    const std::set<Link>& links() const noexcept { return links_; }
    std::vector<AtomId> parents(AtomId atom) const;
    /// Links that do not occur in the target's condition.
    std::vector<Link> vacuous_links() const;

    friend bool operator==(const Adf& lhs, const Adf& rhs) {
        return lhs.atoms_ == rhs.atoms_ && lhs.conditions_ == rhs.conditions_ && lhs.links_ == rhs.links_;
    }

private:
    std::vector<std::string> atoms_;
    std::vector<Formula> conditions_;
    std::set<Link> links_;
    std::vector<std::vector<AtomId>> condition_atoms_;
};

/// Boolean logical model with its signed regulatory graph. Input nodes are
/// the variables whose function is the variable itself.
class BooleanNetwork {
public:
    BooleanNetwork() = default;
    /// Edges are read off the negation normal form of each function.
    BooleanNetwork(std::vector<std::string> variables, std::vector<Formula> functions);
    BooleanNetwork(std::vector<std::string> variables, std::vector<Formula> functions,
                   std::set<SignedEdge> edges);

    std::size_t size() const noexcept { return variables_.size(); }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::string& name(AtomId variable) const { return variables_.at(variable); }
    std::optional<AtomId> find(std::string_view name) const;

    const Formula& function(AtomId variable) const { return functions_.at(variable); }
    const std::vector<Formula>& functions() const noexcept { return functions_; }
    const std::set<SignedEdge>& edges() const noexcept { return edges_; }

    bool is_input(AtomId variable) const;
    std::vector<AtomId> inputs() const;

    friend bool operator==(const BooleanNetwork& lhs, const BooleanNetwork& rhs) {
        return lhs.variables_ == rhs.variables_ && lhs.functions_ == rhs.functions_ && lhs.edges_ == rhs.edges_;
    }

private:
    std::vector<std::string> variables_;
    std::vector<Formula> functions_;
    std::set<SignedEdge> edges_;
};

/// Signed edges (u, v, +) for positive and (u, v, -) for negative occurrences
/// of u in the NNF of f_v. Atoms of mixed polarity get both edges.
std::set<SignedEdge> polarity_edges(std::span<const Formula> functions);

Adf bn_to_adf(const BooleanNetwork& network);

struct BnConversion {
    BooleanNetwork network;
    /// One entry per condition atom occurring with both polarities.
    std::vector<std::string> warnings;
};

/// Converts conditions to NNF and reads the signed edges off them.
BnConversion adf_to_bn(const Adf& adf);

struct Classification {
    bool bipolar = true;
    std::map<Link, LinkKind> per_link;
};

/// Semantic polarity of every link; vacuous links are `Both`.
Classification classify(const Adf& adf);

/// Each function becomes increasing monotone after negating some subset of
/// its arguments, checked over every comparable pair of argument vectors.
bool is_sign_definite(const Formula& function);
bool is_sign_definite(const BooleanNetwork& network);

}  // namespace adfbn
