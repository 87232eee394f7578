#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adfbn/interpretation.hpp"

namespace adfbn {

/// Index of an atom in the enclosing model's declaration order.
using AtomId = std::uint32_t;

/// Propositional formula over atom indices. Conjunction and disjunction are
/// n-ary; implication is binary and material. Value type: copies are deep.
class Formula {
public:
    enum class Kind : std::uint8_t { Atom, True, False, Not, And, Or, Implies };

    static Formula atom(AtomId id);
    static Formula constant(bool value);
    static Formula negation(Formula operand);
    static Formula conjunction(std::vector<Formula> operands);
    static Formula disjunction(std::vector<Formula> operands);
    static Formula implication(Formula antecedent, Formula consequent);

    Kind kind() const noexcept { return kind_; }
    /// Only meaningful for Kind::Atom.
    AtomId atom_id() const noexcept { return atom_; }
    std::span<const Formula> children() const noexcept { return children_; }

    bool is_constant() const noexcept { return kind_ == Kind::True || kind_ == Kind::False; }

    friend bool operator==(const Formula&, const Formula&) = default;

private:
    Formula(Kind kind, AtomId atom, std::vector<Formula> children)
        : kind_(kind), atom_(atom), children_(std::move(children)) {}

    Kind kind_ = Kind::True;
    AtomId atom_ = 0;
    std::vector<Formula> children_;
};

/// Sorted, duplicate-free list of the atoms occurring in `phi`.
std::vector<AtomId> free_atoms(const Formula& phi);

/// Largest atom index in `phi` plus one, or 0 when `phi` has no atoms.
std::size_t atom_bound(const Formula& phi);

/// Classical evaluation with `value_of(AtomId) -> bool` supplying atoms.
template <typename Lookup>
bool evaluate(const Formula& phi, const Lookup& value_of) {
    switch (phi.kind()) {
        case Formula::Kind::Atom:
            return value_of(phi.atom_id());
        case Formula::Kind::True:
            return true;
        case Formula::Kind::False:
            return false;
        case Formula::Kind::Not:
            return !evaluate(phi.children()[0], value_of);
        case Formula::Kind::And:
            for (const auto& child : phi.children()) {
                if (!evaluate(child, value_of)) return false;
            }
            return true;
        case Formula::Kind::Or:
            for (const auto& child : phi.children()) {
                if (evaluate(child, value_of)) return true;
            }
            return false;
        case Formula::Kind::Implies:
            return !evaluate(phi.children()[0], value_of) || evaluate(phi.children()[1], value_of);
    }
    return false;
}

/// Two-valued evaluation. Throws ModelMismatch when `phi` mentions an atom
/// outside `omega`.
bool eval2(const Formula& phi, const State& omega);

/// Consensus value of `phi` over every two-valued completion of `nu`.
/// Only the free atoms of `phi` that are undecided in `nu` are enumerated.
Truth eval3(const Formula& phi, const Interp3& nu);

/// Same as eval3 with the free atoms of `phi` supplied by the caller.
Truth eval3(const Formula& phi, const Interp3& nu, std::span<const AtomId> phi_atoms);

/// Negation normal form: no implications, negation only directly on atoms.
/// Constants are kept (negated constants are folded).
Formula to_nnf(const Formula& phi);

/// Per-atom occurrence polarity, counting negations and implication
/// antecedents on the path from the root.
enum class Polarity : std::uint8_t { Absent, Positive, Negative, Both };

std::map<AtomId, Polarity> syntactic_polarity(const Formula& phi);

/// No atom occurs both positively and negatively.
bool is_syntactically_bipolar(const Formula& phi);

/// Semantic role of one argument of a Boolean function. `Both` means the
/// function never depends on the argument; `Neither` means flipping it can
/// both raise and lower the value.
enum class LinkKind : std::uint8_t { Supporting, Attacking, Both, Neither };

/// Decides the role of `a` in `phi` by brute force over the other free atoms.
LinkKind semantic_polarity(const Formula& phi, AtomId a);

/// Replaces each bound atom by the corresponding constant. No simplification.
Formula substitute(const Formula& phi, const std::map<AtomId, bool>& bindings);

/// Constant folding only: collapses connectives whose value is fixed by
/// constant operands and drops neutral constants.
Formula simplify(const Formula& phi);

/// The value of `phi` when constant folding reduces it to a constant.
std::optional<bool> folded_constant(const Formula& phi);

/// Renames atoms; `mapping[old]` is the new index. Throws ModelMismatch if an
/// atom maps to nothing.
Formula remap_atoms(const Formula& phi, std::span<const std::optional<AtomId>> mapping);

/// Renders `phi` in the textual formula grammar with minimal parentheses.
/// Nested same-operator children are parenthesised so parsing the output
/// reproduces the tree exactly.
std::string format_formula(const Formula& phi, std::span<const std::string> names);

const char* to_string(Polarity polarity) noexcept;
const char* to_string(LinkKind kind) noexcept;

}  // namespace adfbn
