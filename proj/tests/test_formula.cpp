#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adfbn/error.hpp"
#include "adfbn/formula.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace adfbn;
using adfbn::testing::letters;

namespace {

// All assignments over n atoms, as the oracle reads them.
bool same_function(const Formula& a, const Formula& b, std::size_t n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto bits = oracle::bits_of(n, mask);
        if (oracle::eval(a, bits) != oracle::eval(b, bits)) return false;
    }
    return true;
}

// Three-valued value by consensus over every completion of every atom.
Truth consensus(const Formula& phi, const Interp3& nu) {
    return oracle::gamma({phi}, nu)[0];
}

}  // namespace

TEST_CASE("factories collapse trivial arities") {
    CHECK(Formula::conjunction({}) == Formula::constant(true));
    CHECK(Formula::disjunction({}) == Formula::constant(false));
    CHECK(Formula::conjunction({Formula::atom(3)}) == Formula::atom(3));
}

TEST_CASE("free atoms and bound") {
    const Formula phi = letters("(c & !a) -> c");
    CHECK(free_atoms(phi) == std::vector<AtomId>{0, 2});
    CHECK(atom_bound(phi) == 3);
    CHECK(free_atoms(Formula::constant(true)).empty());
}

TEST_CASE("two-valued evaluation") {
    const Formula phi = letters("!b & a");
    CHECK(eval2(phi, State::parse("10")));
    CHECK_FALSE(eval2(phi, State::parse("11")));
    CHECK_THROWS_AS(eval2(phi, State::parse("1")), ModelMismatch);
    CHECK(eval2(letters("a -> b"), State::parse("00")));
    CHECK_FALSE(eval2(letters("a -> b"), State::parse("10")));
}

TEST_CASE("three-valued evaluation examples") {
    CHECK(eval3(letters("a | !a"), Interp3::parse("u")) == Truth::True);
    CHECK(eval3(letters("a & b"), Interp3::parse("0u")) == Truth::False);
    CHECK(eval3(letters("a & b"), Interp3::parse("1u")) == Truth::Undec);
    CHECK(eval3(Formula::constant(false), Interp3::parse("")) == Truth::False);
    CHECK_THROWS_AS(eval3(letters("c"), Interp3::parse("uu")), ModelMismatch);
}

TEST_CASE("three-valued evaluation matches consensus over all completions") {
    testing::Rng rng(11);
    for (int round = 0; round < 400; ++round) {
        const std::size_t n = testing::uniform(rng, 1, 5);
        const Formula phi = testing::random_formula(rng, n, 4);
        for (int k = 0; k < 6; ++k) {
            const auto all = oracle::all_interpretations(n);
            const Interp3& nu = all[testing::uniform(rng, 0, all.size() - 1)];
            CHECK(eval3(phi, nu) == consensus(phi, nu));
        }
    }
}

TEST_CASE("negation normal form preserves the function and pushes negation to atoms") {
    testing::Rng rng(12);
    const std::function<bool(const Formula&)> negations_on_atoms = [&](const Formula& phi) {
        if (phi.kind() == Formula::Kind::Implies) return false;
        if (phi.kind() == Formula::Kind::Not) return phi.children()[0].kind() == Formula::Kind::Atom;
        return std::all_of(phi.children().begin(), phi.children().end(), negations_on_atoms);
    };
    for (int round = 0; round < 400; ++round) {
        const std::size_t n = testing::uniform(rng, 1, 5);
        const Formula phi = testing::random_formula(rng, n, 4);
        const Formula nnf = to_nnf(phi);
        CHECK(same_function(phi, nnf, n));
        CHECK(negations_on_atoms(nnf));
    }
    CHECK(to_nnf(letters("!(a -> b)")) == letters("a & !b"));
    CHECK(to_nnf(letters("!(a | !b)")) == letters("!a & b"));
}

TEST_CASE("syntactic polarity") {
    const auto p = syntactic_polarity(letters("!z & a"));
    CHECK(p.at(25) == Polarity::Negative);
    CHECK(p.at(0) == Polarity::Positive);
    CHECK(syntactic_polarity(letters("a -> b")).at(0) == Polarity::Negative);
    CHECK(syntactic_polarity(letters("a | !a")).at(0) == Polarity::Both);
    CHECK_FALSE(is_syntactically_bipolar(letters("(a & !b) | (!a & b)")));
    CHECK(is_syntactically_bipolar(letters("!(a | !b)")));
}

TEST_CASE("semantic polarity") {
    CHECK(semantic_polarity(letters("!z & a"), 25) == LinkKind::Attacking);
    CHECK(semantic_polarity(letters("!z & a"), 0) == LinkKind::Supporting);
    CHECK(semantic_polarity(letters("a | !a"), 0) == LinkKind::Both);
    CHECK(semantic_polarity(letters("(a & !b) | (!a & b)"), 0) == LinkKind::Neither);
    CHECK(semantic_polarity(letters("a"), 1) == LinkKind::Both);
    // Syntactically mixed but semantically supporting.
    CHECK(semantic_polarity(letters("a | (!a & b)"), 1) == LinkKind::Supporting);
}

TEST_CASE("semantic polarity matches pairwise comparison of flipped assignments") {
    testing::Rng rng(13);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = testing::uniform(rng, 1, 5);
        const Formula phi = testing::random_formula(rng, n, 4);
        for (AtomId a = 0; a < n; ++a) {
            bool raises = false;
            bool lowers = false;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                if (((mask >> a) & 1U) != 0) continue;
                const bool low = oracle::eval(phi, oracle::bits_of(n, mask));
                const bool high = oracle::eval(phi, oracle::bits_of(n, mask | (std::uint64_t{1} << a)));
                raises = raises || (!low && high);
                lowers = lowers || (low && !high);
            }
            const LinkKind expected = raises && lowers ? LinkKind::Neither
                                      : raises         ? LinkKind::Supporting
                                      : lowers         ? LinkKind::Attacking
                                                       : LinkKind::Both;
            CHECK(semantic_polarity(phi, a) == expected);
        }
    }
}

TEST_CASE("substitution and simplification") {
    const Formula phi = letters("a | !a");
    CHECK(simplify(substitute(phi, {{0, true}})) == Formula::constant(true));
    CHECK_FALSE(folded_constant(phi).has_value());
    CHECK(folded_constant(substitute(letters("b & (a -> 0)"), {{0, true}})) == false);
    CHECK(simplify(letters("1 -> b")) == letters("b"));
    CHECK(simplify(letters("b -> 0")) == letters("!b"));

    testing::Rng rng(14);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = testing::uniform(rng, 1, 5);
        const Formula phi2 = testing::random_formula(rng, n, 4);
        std::map<AtomId, bool> bindings;
        for (AtomId a = 0; a < n; ++a) {
            if (testing::coin(rng)) bindings.emplace(a, testing::coin(rng));
        }
        const Formula reduced = simplify(substitute(phi2, bindings));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            auto bits = oracle::bits_of(n, mask);
            for (const auto& [a, v] : bindings) bits[a] = v;
            CHECK(oracle::eval(reduced, bits) == oracle::eval(phi2, bits));
        }
        for (AtomId a : free_atoms(reduced)) CHECK_FALSE(bindings.contains(a));
    }
}

TEST_CASE("remapping atoms") {
    const std::vector<std::optional<AtomId>> mapping{std::nullopt, 0, 1};
    CHECK(remap_atoms(letters("b & !c"), mapping) == letters("a & !b"));
    CHECK_THROWS_AS(remap_atoms(letters("a"), mapping), ModelMismatch);
}

TEST_CASE("formatting uses minimal parentheses") {
    const std::vector<std::string> names{"a", "b", "c"};
    CHECK(format_formula(letters("a & (b | c)"), names) == "a & (b | c)");
    CHECK(format_formula(letters("(a & b) | c"), names) == "a & b | c");
    CHECK(format_formula(letters("!(a & b)"), names) == "!(a & b)");
    CHECK(format_formula(letters("(a -> b) -> c"), names) == "(a -> b) -> c");
    CHECK(format_formula(letters("a -> b -> c"), names) == "a -> b -> c");
    CHECK(format_formula(letters("a & (b & c)"), names) == "a & (b & c)");
    CHECK(format_formula(Formula::constant(true), names) == "1");
}

TEST_CASE("sign-definite functions are exactly those without a mixed argument") {
    testing::Rng rng(15);
    for (int round = 0; round < 400; ++round) {
        const std::size_t n = testing::uniform(rng, 1, 5);
        const Formula phi = testing::random_formula(rng, n, 4);
        bool mixed = false;
        for (AtomId a : free_atoms(phi)) mixed = mixed || semantic_polarity(phi, a) == LinkKind::Neither;
        CHECK(is_sign_definite(phi) == !mixed);
    }
    CHECK(is_sign_definite(letters("a | !a")));
    CHECK_FALSE(is_sign_definite(letters("(a & !b) | (!a & b)")));
}
