#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adfbn/dynamics.hpp"
#include "adfbn/error.hpp"
#include "adfbn/semantics.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace adfbn;
using adfbn::testing::letters;
using adfbn::testing::rendered;

namespace {

const BooleanNetwork& cycle3() {
    static const BooleanNetwork net = testing::load("cycle3.adf").network;
    return net;
}

std::set<std::set<std::uint64_t>> as_masks(const std::vector<std::vector<State>>& sets) {
    std::set<std::set<std::uint64_t>> out;
    for (const auto& set : sets) {
        std::set<std::uint64_t> masks;
        for (const State& s : set) masks.insert(s.bits());
        out.insert(std::move(masks));
    }
    return out;
}

constexpr Scheme kSchemes[] = {Scheme::Synchronous, Scheme::Asynchronous, Scheme::AsynchronousGeneral};

}  // namespace

TEST_CASE("scheme names") {
    for (Scheme s : kSchemes) CHECK(parse_scheme(short_name(s)) == s);
    CHECK_FALSE(parse_scheme("random").has_value());
}

TEST_CASE("successors on the three-cycle") {
    CHECK(rendered(successors(cycle3(), State::parse("000"), Scheme::Synchronous)) == std::vector<std::string>{"111"});
    CHECK(rendered(successors(cycle3(), State::parse("000"), Scheme::Asynchronous)) ==
          std::vector<std::string>{"001", "010", "100"});
    CHECK(rendered(successors(cycle3(), State::parse("000"), Scheme::AsynchronousGeneral)).size() == 7);
    // Asynchronous self-loops appear only at stable states.
    const BooleanNetwork self = testing::load("self.adf").network;
    CHECK(rendered(successors(self, State::parse("1"), Scheme::Asynchronous)) == std::vector<std::string>{"1"});
    CHECK_THROWS_AS(successors(cycle3(), State::parse("00"), Scheme::Synchronous), ModelMismatch);
}

TEST_CASE("synchronous graph of the three-cycle") {
    const Stg stg = build_stg(cycle3(), Scheme::Synchronous);
    CHECK(stg.state_count() == 8);
    CHECK(stg.edge_count() == 8);
    REQUIRE(stg.successors(0).size() == 1);
    CHECK(stg.successors(0)[0] == 7);
    CHECK(stg.successors(7)[0] == 0);
    CHECK(is_trap_set(stg, std::vector<State>{State::parse("000"), State::parse("111")}));
    CHECK_FALSE(is_trap_set(stg, std::vector<State>{State::parse("000")}));
    const auto found = attractors(stg);
    CHECK(std::find(found.begin(), found.end(), std::vector<State>{State::parse("000"), State::parse("111")}) !=
          found.end());
    // The synchronous map permutes the eight states, so the other six form
    // a second cycle.
    CHECK(found.size() == 2);
    CHECK(stable_states(stg).empty());
}

TEST_CASE("four-node example") {
    const BooleanNetwork net = testing::load("fig2.bnet").network;
    const Stg stg = build_stg(net, Scheme::Synchronous);
    const auto found = attractors(stg);
    std::vector<std::vector<std::string>> shown;
    for (const auto& a : found) shown.push_back(rendered(a));
    std::sort(shown.begin(), shown.end());
    CHECK(shown == std::vector<std::vector<std::string>>{{"0000"}, {"0011", "0101", "1011", "1101"}});
    CHECK(rendered(stable_states(stg)) == std::vector<std::string>{"0000"});
    const auto basin = basins(stg, found);
    REQUIRE(basin.size() == 2);
    // v4 never changes, so each attractor collects the states with its v4.
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(basin[i].size() == 8);
        for (const State& s : basin[i]) CHECK(s[3] == found[i].front()[3]);
    }
}

TEST_CASE("transition graphs and attractors match the oracle") {
    testing::Rng rng(51);
    for (int round = 0; round < 120; ++round) {
        const BooleanNetwork net = testing::random_network(rng, 6, 4);
        for (Scheme scheme : kSchemes) {
            const Stg stg = build_stg(net, scheme);
            for (std::uint64_t s = 0; s < stg.state_count(); ++s) {
                const auto got = stg.successors(s);
                std::vector<std::uint64_t> sorted_got(got.begin(), got.end());
                std::sort(sorted_got.begin(), sorted_got.end());
                CHECK(sorted_got == oracle::successors(net, s, scheme));
                std::vector<std::uint64_t> via_eval;
                for (const State& t : successors(net, stg.state(s), scheme)) via_eval.push_back(t.bits());
                std::sort(via_eval.begin(), via_eval.end());
                CHECK(via_eval == sorted_got);
            }
            const auto found = attractors(stg);
            CHECK(as_masks(found) == oracle::attractors(net, scheme));
            for (const auto& a : found) {
                CHECK(is_trap_set(stg, a));
                CHECK(std::is_sorted(a.begin(), a.end()));
            }
            // Every state reaches some attractor: basins cover the state space.
            std::set<std::uint64_t> covered;
            for (const auto& b : basins(stg, found)) {
                for (const State& s : b) covered.insert(s.bits());
            }
            CHECK(covered.size() == stg.state_count());
        }
    }
}

TEST_CASE("parallel image computation agrees with direct evaluation") {
    testing::Rng rng(52);
    const std::size_t n = 15;
    std::vector<Formula> functions;
    for (std::size_t i = 0; i < n; ++i) functions.push_back(testing::random_formula(rng, n, 4));
    const BooleanNetwork net(testing::numbered_names(n), std::move(functions));
    const Stg stg = build_stg(net, Scheme::Synchronous);
    for (int k = 0; k < 2000; ++k) {
        const std::uint64_t s = rng() & ((std::uint64_t{1} << n) - 1);
        REQUIRE(stg.successors(s).size() == 1);
        CHECK(stg.successors(s)[0] == oracle::successors(net, s, Scheme::Synchronous).front());
    }
}

TEST_CASE("subspaces") {
    const Interp3 m = Interp3::parse("1-0");
    CHECK(in_subspace(m, State::parse("110")));
    CHECK_FALSE(in_subspace(m, State::parse("111")));
    CHECK(subspace_leq(Interp3::parse("110"), m));
    CHECK(subspace_leq(m, Interp3::parse("---")));
    CHECK_FALSE(subspace_leq(Interp3::parse("---"), m));
    CHECK_THROWS_AS(subspace_leq(m, Interp3::parse("--")), ModelMismatch);
}

TEST_CASE("subspace inclusion is the reversed information order") {
    testing::Rng rng(53);
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = testing::uniform(rng, 0, 5);
        const auto all = oracle::all_interpretations(n);
        const Interp3& a = all[testing::uniform(rng, 0, all.size() - 1)];
        const Interp3& b = all[testing::uniform(rng, 0, all.size() - 1)];
        const auto sa = oracle::completion_masks(a);
        const auto sb = oracle::completion_masks(b);
        const bool included = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
        CHECK(subspace_leq(a, b) == included);
        CHECK(leq_i(b, a) == included);
    }
}

TEST_CASE("F[m] and the substitution criterion") {
    const BooleanNetwork taut = testing::load("taut.adf").network;
    CHECK(f_of_m(taut, Interp3::parse("--")) == Interp3::parse("1-"));
    CHECK(is_trap_space(taut, Interp3::parse("-1")));
    CHECK(is_trap_space(taut, Interp3::parse("11")));
    CHECK(is_trap_space(taut, Interp3::parse("--")));
    const BooleanNetwork self = testing::load("self.adf").network;
    for (const char* m : {"-", "0", "1"}) CHECK(is_trap_space(self, Interp3::parse(m)));
    for (const char* m : {"0--", "1--", "-0-", "-1-", "--0", "--1"}) CHECK_FALSE(is_trap_space(cycle3(), Interp3::parse(m)));
    CHECK(is_trap_space(cycle3(), Interp3::parse("---")));
}

TEST_CASE("trap-space report of the self-supporting atom") {
    const BooleanNetwork self = testing::load("self.adf").network;
    const TrapReport report = trap_spaces(self);
    CHECK(rendered(report.trap_spaces, Interp3::Style::Subspace) == std::vector<std::string>{"-", "0", "1"});
    CHECK(rendered(report.minimal, Interp3::Style::Subspace) == std::vector<std::string>{"0", "1"});
    CHECK(rendered(report.maximal, Interp3::Style::Subspace) == std::vector<std::string>{"0", "1"});
    CHECK(rendered(report.stable_states) == std::vector<std::string>{"0", "1"});
}

TEST_CASE("trap spaces of the three-cycle") {
    const TrapReport report = trap_spaces(cycle3());
    CHECK(rendered(report.trap_spaces, Interp3::Style::Subspace) == std::vector<std::string>{"---"});
    CHECK(report.maximal.empty());
    CHECK(report.stable_states.empty());
}

TEST_CASE("substitution criterion equals the closure check and the admissible scan") {
    testing::Rng rng(54);
    for (int round = 0; round < 150; ++round) {
        const BooleanNetwork net = testing::random_network(rng, 5, 4);
        const TrapReport report = trap_spaces(net);
        CHECK(report.trap_spaces == enumerate(bn_to_adf(net), Semantics::Admissible));
        CHECK(report.minimal == enumerate(bn_to_adf(net), Semantics::Preferred));
        for (Scheme scheme : kSchemes) {
            CHECK(report.trap_spaces == oracle::trap_spaces(net, scheme));
            const Stg stg = build_stg(net, scheme);
            for (const auto& m : oracle::all_interpretations(net.size())) {
                CHECK(is_trap_space(net, m) == is_trap_space_direct(stg, m));
            }
        }
        const auto stable = stable_states(build_stg(net, Scheme::Synchronous));
        CHECK(report.stable_states == stable);
        for (const auto& m : report.maximal) CHECK(m.undecided_count() < m.size());
    }
}
