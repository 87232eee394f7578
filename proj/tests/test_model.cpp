#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adfbn/error.hpp"
#include "adfbn/model.hpp"
#include "adfbn/semantics.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace adfbn;
using adfbn::testing::letters;

TEST_CASE("links follow the free atoms of each condition") {
    const Adf adf({"a", "b", "c"}, {letters("!c"), letters("!a"), letters("!b")});
    CHECK(adf.links() == std::set<Link>{{2, 0}, {0, 1}, {1, 2}});
    CHECK(adf.parents(0) == std::vector<AtomId>{2});
    CHECK(adf.vacuous_links().empty());
    CHECK(adf.find("b") == AtomId{1});
    CHECK_FALSE(adf.find("z").has_value());
}

TEST_CASE("explicit links must cover the conditions and may add vacuous ones") {
    const Adf adf({"a", "b"}, {letters("b"), Formula::constant(true)}, {{1, 0}, {0, 1}});
    CHECK(adf.vacuous_links() == std::vector<Link>{{0, 1}});
    CHECK_THROWS_AS(Adf({"a", "b"}, {letters("b"), letters("a")}, {{1, 0}}), ModelMismatch);
    CHECK_THROWS_AS(Adf({"a", "a"}, {letters("a"), letters("a")}), ModelMismatch);
    CHECK_THROWS_AS(Adf({"a"}, {letters("b")}), ModelMismatch);
    CHECK_THROWS_AS(Adf({"a"}, {}), ModelMismatch);
}

TEST_CASE("mussel network edges carry the literal signs") {
    const auto model = testing::load("mussels.bnet");
    const auto& net = model.network;
    const AtomId q = *net.find("q");
    const AtomId z = *net.find("z");
    const AtomId a = *net.find("a");
    CHECK(net.edges().contains(SignedEdge{z, q, Sign::Negative}));
    CHECK(net.edges().contains(SignedEdge{a, q, Sign::Positive}));
    CHECK_FALSE(net.edges().contains(SignedEdge{z, q, Sign::Positive}));
}

TEST_CASE("network constructor validates edges") {
    CHECK_THROWS_AS(BooleanNetwork({"a", "b"}, {letters("b"), letters("a")}, {{1, 0, Sign::Positive}}), ModelMismatch);
    const BooleanNetwork extra({"a", "b"}, {letters("b"), letters("b")},
                               {{1, 0, Sign::Positive}, {1, 1, Sign::Positive}, {0, 1, Sign::Negative}});
    CHECK(extra.edges().size() == 3);
}

TEST_CASE("input nodes keep their value and carry a positive self-loop") {
    const auto model = testing::load("fig2.bnet");
    const auto& net = model.network;
    REQUIRE(net.size() == 4);
    const AtomId v4 = *net.find("v4");
    CHECK(net.inputs() == std::vector<AtomId>{v4});
    CHECK(net.edges().contains(SignedEdge{v4, v4, Sign::Positive}));
    // The regulatory edges of the four-node example plus the input loop.
    const std::set<SignedEdge> expected{
        {1, 0, Sign::Positive},  {0, 1, Sign::Negative}, {3, 1, Sign::Positive}, {0, 2, Sign::Positive},
        {1, 2, Sign::Positive},  {3, 2, Sign::Negative}, {3, 3, Sign::Positive},
    };
    CHECK(net.edges() == expected);
    // The converted ADF keeps the same links, including the reflexive one.
    const Adf adf = bn_to_adf(net);
    CHECK(adf.links().contains(Link{v4, v4}));
    CHECK(adf.links().size() == 7);
}

TEST_CASE("conversion to a network applies NNF and warns on mixed polarity") {
    const Adf adf({"a", "b", "c"}, {letters("!(b -> c)"), letters("a"), letters("(a & !b) | (!a & b)")});
    const BnConversion conversion = adf_to_bn(adf);
    CHECK(conversion.network.function(0) == letters("b & !c"));
    CHECK(conversion.warnings.size() == 2);
    CHECK(conversion.network.edges().contains(SignedEdge{0, 2, Sign::Positive}));
    CHECK(conversion.network.edges().contains(SignedEdge{0, 2, Sign::Negative}));
    CHECK(adf_to_bn(testing::load("cycle3.adf").adf).warnings.empty());
}

TEST_CASE("conversion both ways preserves every function pointwise") {
    testing::Rng rng(31);
    for (int round = 0; round < 200; ++round) {
        const BooleanNetwork net = testing::random_network(rng, 6, 4);
        const Adf adf = bn_to_adf(net);
        const BooleanNetwork back = adf_to_bn(adf).network;
        REQUIRE(back.size() == net.size());
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << net.size()); ++s) {
            const auto bits = oracle::bits_of(net.size(), s);
            for (AtomId v = 0; v < net.size(); ++v) {
                CHECK(oracle::eval(back.function(v), bits) == oracle::eval(net.function(v), bits));
            }
        }
        CHECK(enumerate(adf, Semantics::TwoValued) == enumerate(bn_to_adf(back), Semantics::TwoValued));
    }
}

TEST_CASE("classification of links") {
    const Adf travel = testing::load("travel.adf").adf;
    const auto result = classify(travel);
    CHECK(result.bipolar);
    const AtomId p = *travel.find("p");
    const AtomId t = *travel.find("t");
    const AtomId v = *travel.find("v");
    CHECK(result.per_link.at(Link{t, v}) == LinkKind::Attacking);
    CHECK(result.per_link.at(Link{p, v}) == LinkKind::Supporting);
    CHECK(result.per_link.at(Link{p, p}) == LinkKind::Supporting);

    const Adf mixed = testing::load("mixed.adf").adf;
    CHECK_FALSE(classify(mixed).bipolar);
    CHECK(classify(mixed).per_link.at(Link{0, 2}) == LinkKind::Neither);

    const Adf taut = testing::load("taut.adf").adf;
    CHECK(classify(taut).per_link.at(Link{0, 0}) == LinkKind::Both);
    CHECK(classify(taut).bipolar);

    // Vacuous links are both supporting and attacking.
    const Adf vacuous({"a", "b"}, {letters("b"), Formula::constant(true)}, {{1, 0}, {0, 1}});
    CHECK(classify(vacuous).per_link.at(Link{0, 1}) == LinkKind::Both);
}

TEST_CASE("sign-definite networks are exactly the bipolar frameworks") {
    testing::Rng rng(32);
    for (int round = 0; round < 300; ++round) {
        const BooleanNetwork net = testing::random_network(rng, 6, 4);
        CHECK(is_sign_definite(net) == classify(bn_to_adf(net)).bipolar);
    }
    for (int round = 0; round < 100; ++round) {
        CHECK(is_sign_definite(testing::random_sign_definite_network(rng)));
    }
}
