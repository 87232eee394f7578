#pragma once

// Seeded random instances for the property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "adfbn/model.hpp"

namespace adfbn::testing {

using Rng = std::mt19937_64;

inline std::vector<std::string> numbered_names(std::size_t n, const char* prefix = "x") {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Any connective, depth at most `depth`.
inline Formula random_formula(Rng& rng, std::size_t atoms, std::size_t depth) {
    if (depth == 0 || atoms == 0 || coin(rng, 0.25)) {
        if (atoms == 0 || coin(rng, 0.08)) return Formula::constant(coin(rng));
        return Formula::atom(static_cast<AtomId>(uniform(rng, 0, atoms - 1)));
    }
    switch (uniform(rng, 0, 3)) {
        case 0:
            return Formula::negation(random_formula(rng, atoms, depth - 1));
        case 1:
        case 2: {
            std::vector<Formula> parts;
            const std::size_t k = uniform(rng, 2, 3);
            for (std::size_t i = 0; i < k; ++i) parts.push_back(random_formula(rng, atoms, depth - 1));
            return uniform(rng, 0, 1) == 0 ? Formula::conjunction(std::move(parts))
                                           : Formula::disjunction(std::move(parts));
        }
        default:
            return Formula::implication(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1));
    }
}

inline BooleanNetwork random_network(Rng& rng, std::size_t max_atoms = 8, std::size_t max_depth = 4) {
    const std::size_t n = uniform(rng, 1, max_atoms);
    std::vector<Formula> functions;
    for (std::size_t i = 0; i < n; ++i) functions.push_back(random_formula(rng, n, uniform(rng, 0, max_depth)));
    return BooleanNetwork(numbered_names(n), std::move(functions));
}

struct SignDefiniteOptions {
    std::size_t max_atoms = 8;
    std::size_t max_parents = 3;
    // Chance that a function is a constant (an unregulated vertex).
    double constant_chance = 0.05;
    // Every function gets at least one negative literal.
    bool force_negative = false;
    // Chance that a parent's literal is negative.
    double negative_chance = 0.4;
};

// Monotone and/or tree over literals whose sign is fixed per argument, so
// every function is syntactically, hence semantically, sign-definite.
inline Formula random_signed_tree(Rng& rng, const std::vector<Formula>& literals, std::size_t begin, std::size_t end) {
    if (end - begin == 1) return literals[begin];
    const std::size_t split = uniform(rng, begin + 1, end - 1);
    std::vector<Formula> parts{random_signed_tree(rng, literals, begin, split),
                               random_signed_tree(rng, literals, split, end)};
    return coin(rng) ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
}

inline BooleanNetwork random_sign_definite_network(Rng& rng, const SignDefiniteOptions& options = {}) {
    const std::size_t n = uniform(rng, 1, options.max_atoms);
    std::vector<Formula> functions;
    for (std::size_t v = 0; v < n; ++v) {
        if (!options.force_negative && coin(rng, options.constant_chance)) {
            functions.push_back(Formula::constant(coin(rng)));
            continue;
        }
        std::vector<AtomId> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<AtomId>(i);
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t k = uniform(rng, 1, std::min(options.max_parents, n));
        std::vector<Formula> literals;
        for (std::size_t j = 0; j < k; ++j) {
            const bool negative = (options.force_negative && j == 0) || coin(rng, options.negative_chance);
            Formula atom = Formula::atom(pool[j]);
            literals.push_back(negative ? Formula::negation(std::move(atom)) : std::move(atom));
        }
        // Repeating a literal keeps its sign; it exercises multiple occurrences.
        if (k > 1 && coin(rng, 0.2)) literals.push_back(literals.front());
        std::shuffle(literals.begin(), literals.end(), rng);
        functions.push_back(random_signed_tree(rng, literals, 0, literals.size()));
    }
    return BooleanNetwork(numbered_names(n), std::move(functions));
}

}  // namespace adfbn::testing
