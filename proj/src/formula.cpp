#include "adfbn/formula.hpp"

#include <algorithm>

#include "adfbn/error.hpp"

namespace adfbn {

Formula Formula::atom(AtomId id) { return Formula(Kind::Atom, id, {}); }

Formula Formula::constant(bool value) { return Formula(value ? Kind::True : Kind::False, 0, {}); }

Formula Formula::negation(Formula operand) {
    std::vector<Formula> children;
    children.push_back(std::move(operand));
    return Formula(Kind::Not, 0, std::move(children));
}

Formula Formula::conjunction(std::vector<Formula> operands) {
    if (operands.empty()) return constant(true);
    if (operands.size() == 1) return std::move(operands.front());
    return Formula(Kind::And, 0, std::move(operands));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
    if (operands.empty()) return constant(false);
    if (operands.size() == 1) return std::move(operands.front());
    return Formula(Kind::Or, 0, std::move(operands));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
    std::vector<Formula> children;
    children.push_back(std::move(antecedent));
    children.push_back(std::move(consequent));
    return Formula(Kind::Implies, 0, std::move(children));
}

namespace {

void collect_atoms(const Formula& phi, std::vector<AtomId>& out) {
    if (phi.kind() == Formula::Kind::Atom) {
        out.push_back(phi.atom_id());
        return;
    }
    for (const auto& child : phi.children()) collect_atoms(child, out);
}

constexpr std::size_t kMaxEnumeratedAtoms = 30;

}  // namespace

std::vector<AtomId> free_atoms(const Formula& phi) {
    std::vector<AtomId> atoms;
    collect_atoms(phi, atoms);
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

std::size_t atom_bound(const Formula& phi) {
    if (phi.kind() == Formula::Kind::Atom) return std::size_t{phi.atom_id()} + 1;
    std::size_t bound = 0;
    for (const auto& child : phi.children()) bound = std::max(bound, atom_bound(child));
    return bound;
}

bool eval2(const Formula& phi, const State& omega) {
    if (atom_bound(phi) > omega.size()) {
        throw ModelMismatch("formula refers to atom " + std::to_string(atom_bound(phi) - 1) + " but the state has " +
                            std::to_string(omega.size()) + " atoms");
    }
    return evaluate(phi, [&omega](AtomId a) { return omega[a]; });
}

Truth eval3(const Formula& phi, const Interp3& nu) { return eval3(phi, nu, free_atoms(phi)); }

Truth eval3(const Formula& phi, const Interp3& nu, std::span<const AtomId> phi_atoms) {
    std::vector<AtomId> open;
    for (AtomId a : phi_atoms) {
        if (a >= nu.size()) {
            throw ModelMismatch("formula refers to atom " + std::to_string(a) + " but the interpretation has " +
                                std::to_string(nu.size()) + " atoms");
        }
        if (nu[a] == Truth::Undec) open.push_back(a);
    }
    if (open.size() > kMaxEnumeratedAtoms) {
        throw BudgetExceeded("eval3: " + std::to_string(open.size()) + " undecided parents are too many to enumerate");
    }
    std::vector<std::uint8_t> assignment(nu.size(), 0);
    for (std::size_t i = 0; i < nu.size(); ++i) assignment[i] = nu[i] == Truth::True ? 1 : 0;
    const auto lookup = [&assignment](AtomId a) { return assignment[a] != 0; };

    bool seen_true = false;
    bool seen_false = false;
    const std::uint64_t total = std::uint64_t{1} << open.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t j = 0; j < open.size(); ++j) assignment[open[j]] = static_cast<std::uint8_t>((mask >> j) & 1U);
        if (evaluate(phi, lookup)) {
            seen_true = true;
        } else {
            seen_false = true;
        }
        if (seen_true && seen_false) return Truth::Undec;
    }
    return to_truth(seen_true);
}

namespace {

Formula nnf(const Formula& phi, bool negated) {
    using Kind = Formula::Kind;
    switch (phi.kind()) {
        case Kind::Atom:
            return negated ? Formula::negation(phi) : phi;
        case Kind::True:
            return Formula::constant(!negated);
        case Kind::False:
            return Formula::constant(negated);
        case Kind::Not:
            return nnf(phi.children()[0], !negated);
        case Kind::And:
        case Kind::Or: {
            std::vector<Formula> parts;
            parts.reserve(phi.children().size());
            for (const auto& child : phi.children()) parts.push_back(nnf(child, negated));
            const bool conjunctive = (phi.kind() == Kind::And) != negated;
            return conjunctive ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
        }
        case Kind::Implies: {
            // a -> b  ==  !a | b;   !(a -> b)  ==  a & !b
            std::vector<Formula> parts;
            parts.push_back(nnf(phi.children()[0], !negated));
            parts.push_back(nnf(phi.children()[1], negated));
            return negated ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
        }
    }
    return phi;
}

void walk_polarity(const Formula& phi, bool negative, std::map<AtomId, Polarity>& out) {
    using Kind = Formula::Kind;
    switch (phi.kind()) {
        case Kind::Atom: {
            const Polarity here = negative ? Polarity::Negative : Polarity::Positive;
            auto [it, inserted] = out.emplace(phi.atom_id(), here);
            if (!inserted && it->second != here) it->second = Polarity::Both;
            return;
        }
        case Kind::True:
        case Kind::False:
            return;
        case Kind::Not:
            walk_polarity(phi.children()[0], !negative, out);
            return;
        case Kind::And:
        case Kind::Or:
            for (const auto& child : phi.children()) walk_polarity(child, negative, out);
            return;
        case Kind::Implies:
            walk_polarity(phi.children()[0], !negative, out);
            walk_polarity(phi.children()[1], negative, out);
            return;
    }
}

}  // namespace

Formula to_nnf(const Formula& phi) { return nnf(phi, false); }

std::map<AtomId, Polarity> syntactic_polarity(const Formula& phi) {
    std::map<AtomId, Polarity> out;
    walk_polarity(phi, false, out);
    return out;
}

bool is_syntactically_bipolar(const Formula& phi) {
    const auto polarity = syntactic_polarity(phi);
    return std::none_of(polarity.begin(), polarity.end(),
                        [](const auto& entry) { return entry.second == Polarity::Both; });
}

LinkKind semantic_polarity(const Formula& phi, AtomId a) {
    const auto atoms = free_atoms(phi);
    if (!std::binary_search(atoms.begin(), atoms.end(), a)) return LinkKind::Both;
    std::vector<AtomId> others;
    std::copy_if(atoms.begin(), atoms.end(), std::back_inserter(others), [a](AtomId x) { return x != a; });
    if (others.size() > kMaxEnumeratedAtoms) {
        throw BudgetExceeded("semantic_polarity: " + std::to_string(others.size()) + " co-arguments are too many");
    }

    std::vector<std::uint8_t> assignment(atoms.back() + std::size_t{1}, 0);
    const auto lookup = [&assignment](AtomId x) { return assignment[x] != 0; };
    bool raises = false;
    bool lowers = false;
    const std::uint64_t total = std::uint64_t{1} << others.size();
    for (std::uint64_t mask = 0; mask < total && !(raises && lowers); ++mask) {
        for (std::size_t j = 0; j < others.size(); ++j) assignment[others[j]] = static_cast<std::uint8_t>((mask >> j) & 1U);
        assignment[a] = 0;
        const bool low = evaluate(phi, lookup);
        assignment[a] = 1;
        const bool high = evaluate(phi, lookup);
        raises = raises || (!low && high);
        lowers = lowers || (low && !high);
    }
    if (raises && lowers) return LinkKind::Neither;
    if (raises) return LinkKind::Supporting;
    if (lowers) return LinkKind::Attacking;
    return LinkKind::Both;
}

Formula substitute(const Formula& phi, const std::map<AtomId, bool>& bindings) {
    using Kind = Formula::Kind;
    switch (phi.kind()) {
        case Kind::Atom: {
            const auto it = bindings.find(phi.atom_id());
            return it == bindings.end() ? phi : Formula::constant(it->second);
        }
        case Kind::True:
        case Kind::False:
            return phi;
        case Kind::Not:
            return Formula::negation(substitute(phi.children()[0], bindings));
        case Kind::And:
        case Kind::Or: {
            std::vector<Formula> parts;
            parts.reserve(phi.children().size());
            for (const auto& child : phi.children()) parts.push_back(substitute(child, bindings));
            return phi.kind() == Kind::And ? Formula::conjunction(std::move(parts))
                                           : Formula::disjunction(std::move(parts));
        }
        case Kind::Implies:
            return Formula::implication(substitute(phi.children()[0], bindings),
                                        substitute(phi.children()[1], bindings));
    }
    return phi;
}

Formula simplify(const Formula& phi) {
    using Kind = Formula::Kind;
    switch (phi.kind()) {
        case Kind::Atom:
        case Kind::True:
        case Kind::False:
            return phi;
        case Kind::Not: {
            Formula inner = simplify(phi.children()[0]);
            if (inner.is_constant()) return Formula::constant(inner.kind() == Kind::False);
            return Formula::negation(std::move(inner));
        }
        case Kind::And:
        case Kind::Or: {
            const bool conjunctive = phi.kind() == Kind::And;
            const Kind absorbing = conjunctive ? Kind::False : Kind::True;
            const Kind neutral = conjunctive ? Kind::True : Kind::False;
            std::vector<Formula> parts;
            for (const auto& child : phi.children()) {
                Formula part = simplify(child);
                if (part.kind() == absorbing) return part;
                if (part.kind() != neutral) parts.push_back(std::move(part));
            }
            return conjunctive ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
        }
        case Kind::Implies: {
            Formula lhs = simplify(phi.children()[0]);
            Formula rhs = simplify(phi.children()[1]);
            if (lhs.kind() == Kind::False || rhs.kind() == Kind::True) return Formula::constant(true);
            if (lhs.kind() == Kind::True) return rhs;
            if (rhs.kind() == Kind::False) return Formula::negation(std::move(lhs));
            return Formula::implication(std::move(lhs), std::move(rhs));
        }
    }
    return phi;
}

std::optional<bool> folded_constant(const Formula& phi) {
    const Formula folded = simplify(phi);
    if (!folded.is_constant()) return std::nullopt;
    return folded.kind() == Formula::Kind::True;
}

Formula remap_atoms(const Formula& phi, std::span<const std::optional<AtomId>> mapping) {
    using Kind = Formula::Kind;
    switch (phi.kind()) {
        case Kind::Atom: {
            const AtomId old = phi.atom_id();
            if (old >= mapping.size() || !mapping[old]) {
                throw ModelMismatch("atom " + std::to_string(old) + " has no counterpart after renaming");
            }
            return Formula::atom(*mapping[old]);
        }
        case Kind::True:
        case Kind::False:
            return phi;
        case Kind::Not:
            return Formula::negation(remap_atoms(phi.children()[0], mapping));
        case Kind::And:
        case Kind::Or: {
            std::vector<Formula> parts;
            parts.reserve(phi.children().size());
            for (const auto& child : phi.children()) parts.push_back(remap_atoms(child, mapping));
            return phi.kind() == Kind::And ? Formula::conjunction(std::move(parts))
                                           : Formula::disjunction(std::move(parts));
        }
        case Kind::Implies:
            return Formula::implication(remap_atoms(phi.children()[0], mapping),
                                        remap_atoms(phi.children()[1], mapping));
    }
    return phi;
}

namespace {

// Binding strength: -> (1) < | (2) < & (3) < ! (4) < atoms and constants (5).
int precedence(const Formula& phi) {
    switch (phi.kind()) {
        case Formula::Kind::Implies: return 1;
        case Formula::Kind::Or: return 2;
        case Formula::Kind::And: return 3;
        case Formula::Kind::Not: return 4;
        default: return 5;
    }
}

void format_into(const Formula& phi, std::span<const std::string> names, std::string& out);

void format_wrapped(const Formula& phi, bool wrap, std::span<const std::string> names, std::string& out) {
    if (wrap) out.push_back('(');
    format_into(phi, names, out);
    if (wrap) out.push_back(')');
}

void format_into(const Formula& phi, std::span<const std::string> names, std::string& out) {
    using Kind = Formula::Kind;
    switch (phi.kind()) {
        case Kind::Atom:
            if (phi.atom_id() >= names.size()) {
                throw ModelMismatch("no name for atom " + std::to_string(phi.atom_id()));
            }
            out += names[phi.atom_id()];
            return;
        case Kind::True:
            out.push_back('1');
            return;
        case Kind::False:
            out.push_back('0');
            return;
        case Kind::Not:
            out.push_back('!');
            format_wrapped(phi.children()[0], precedence(phi.children()[0]) < 4, names, out);
            return;
        case Kind::And:
        case Kind::Or: {
            const int own = precedence(phi);
            const char* separator = phi.kind() == Kind::And ? " & " : " | ";
            bool first = true;
            for (const auto& child : phi.children()) {
                if (!first) out += separator;
                first = false;
                format_wrapped(child, precedence(child) <= own, names, out);
            }
            return;
        }
        case Kind::Implies:
            format_wrapped(phi.children()[0], precedence(phi.children()[0]) <= 1, names, out);
            out += " -> ";
            format_into(phi.children()[1], names, out);
            return;
    }
}

}  // namespace

std::string format_formula(const Formula& phi, std::span<const std::string> names) {
    std::string out;
    format_into(phi, names, out);
    return out;
}

const char* to_string(Polarity polarity) noexcept {
    switch (polarity) {
        case Polarity::Absent: return "absent";
        case Polarity::Positive: return "positive";
        case Polarity::Negative: return "negative";
        case Polarity::Both: return "both";
    }
    return "?";
}

const char* to_string(LinkKind kind) noexcept {
    switch (kind) {
        case LinkKind::Supporting: return "supporting";
        case LinkKind::Attacking: return "attacking";
        case LinkKind::Both: return "both";
        case LinkKind::Neither: return "neither";
    }
    return "?";
}

}  // namespace adfbn
