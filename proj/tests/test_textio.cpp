#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include <json.hpp>

#include "adfbn/error.hpp"
#include "adfbn/semantics.hpp"
#include "adfbn/textio.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"

using namespace adfbn;
using adfbn::testing::letters;

namespace {

template <typename Fn>
ParseError parse_failure(Fn&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}

std::vector<std::filesystem::path> corpus() {
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(ADFBN_MODELS_DIR)) out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("formula grammar") {
    CHECK(letters("a & b | c") == letters("(a & b) | c"));
    CHECK(letters("a | b & c") == letters("a | (b & c)"));
    CHECK(letters("a -> b -> c") == letters("a -> (b -> c)"));
    CHECK(letters("!!a") == Formula::negation(Formula::negation(Formula::atom(0))));
    CHECK(letters(" 1 ") == Formula::constant(true));
    CHECK(letters("a|b|c").children().size() == 3);
    const auto e = parse_failure([] { letters("a & "); });
    CHECK(e.column() == 5);
    CHECK(parse_failure([] { letters("(a | b"); }).column() == 7);
    CHECK(parse_failure([] { letters("a b"); }).column() == 3);
    CHECK(parse_failure([] { letters("a & Q"); }).column() == 5);
    CHECK(parse_failure([] { letters("10"); }).column() == 1);
}

TEST_CASE("ADF format") {
    const Adf adf = parse_adf("s(a). ac(a, !c).\ns(b). ac(b, !a).\ns(c). ac(c, !b).\n");
    CHECK(adf == testing::load("cycle3.adf").adf);
    const Adf self = parse_adf("s(a). ac(a, a).");
    CHECK(self.condition(0) == Formula::atom(0));
    // Forward references and comments.
    const Adf fwd = parse_adf("# leading comment\nac(x, y). # trailing\ns(x).\ns(y).\nac(y, 1).\n");
    CHECK(fwd.atoms() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("ADF errors carry positions") {
    const auto undeclared = parse_failure([] { parse_adf("s(a).\nac(a, b).\n"); });
    CHECK(std::string(undeclared.what()).find("'b'") != std::string::npos);
    CHECK(undeclared.line() == 2);
    CHECK(undeclared.column() == 7);
    const auto duplicate = parse_failure([] { parse_adf("s(a). ac(a, a).\nac(a, 1)."); });
    CHECK(duplicate.line() == 2);
    CHECK(std::string(duplicate.what()).find("duplicate") != std::string::npos);
    const auto missing = parse_failure([] { parse_adf("s(a).\ns(b). ac(a, b)."); });
    CHECK(missing.line() == 2);
    CHECK(std::string(missing.what()).find("'b' has no acceptance condition") != std::string::npos);
    CHECK(parse_failure([] { parse_adf("s(a) ac(a, a)."); }).column() == 6);
    CHECK(parse_failure([] { parse_adf("t(a)."); }).line() == 1);
    CHECK(parse_failure([] { parse_adf("s(a). ac(a, (a)."); }).line() == 1);
    CHECK(parse_failure([] { parse_adf("s(a). s(a). ac(a, a)."); }).column() == 7);
    CHECK(parse_failure([] { parse_adf("s(a). ac(b, a)."); }).column() == 7);
}

TEST_CASE("bnet format") {
    const BooleanNetwork net = parse_bnet("targets, factors\nq, !z & a\n");
    CHECK(net.variables() == std::vector<std::string>{"q", "z", "a"});
    CHECK(net.function(0) == Formula::conjunction({Formula::negation(Formula::atom(1)), Formula::atom(2)}));
    CHECK(net.inputs() == std::vector<AtomId>{1, 2});
    CHECK(net.edges().contains(SignedEdge{1, 0, Sign::Negative}));
    CHECK(net.edges().contains(SignedEdge{2, 0, Sign::Positive}));
    CHECK(parse_bnet("targets, factors\n").size() == 0);
    CHECK(parse_bnet("# comment\n\n Targets ,  Factors \r\nx, x # keep\n").size() == 1);
    const auto dup = parse_failure([] { parse_bnet("targets, factors\na, 1\na, 0\n"); });
    CHECK(dup.line() == 3);
    CHECK(parse_failure([] { parse_bnet("a, b\n"); }).line() == 1);
    CHECK(parse_failure([] { parse_bnet("targets, factors\na 1\n"); }).line() == 2);
    const auto syntax = parse_failure([] { parse_bnet("targets, factors\na,  b &\n"); });
    CHECK(syntax.line() == 2);
    CHECK(syntax.column() == 8);
}

TEST_CASE("formats are chosen by extension") {
    CHECK(format_from_path("x/model.adf") == ModelFormat::Adf);
    CHECK(format_from_path("model.bnet") == ModelFormat::Bnet);
    CHECK_FALSE(format_from_path("model.txt").has_value());
    CHECK(parse_model_format("bnet") == ModelFormat::Bnet);
    CHECK_THROWS_AS(load_model("nowhere.txt"), Error);
}

TEST_CASE("round trip over the corpus") {
    for (const auto& path : corpus()) {
        CAPTURE(path.string());
        const LoadedModel model = load_model(path);
        if (model.format == ModelFormat::Adf) {
            CHECK(parse_adf(write_adf(model.adf)) == model.adf);
        } else {
            CHECK(parse_bnet(write_bnet(model.network)) == model.network);
        }
        // Conversion keeps the two-valued models in both directions.
        const Adf via_bnet = bn_to_adf(parse_bnet(write_bnet(model.network)));
        const Adf via_adf = parse_adf(write_adf(model.adf));
        CHECK(enumerate(via_bnet, Semantics::TwoValued) == enumerate(model.adf, Semantics::TwoValued));
        CHECK(enumerate(via_adf, Semantics::TwoValued) == enumerate(model.adf, Semantics::TwoValued));
    }
}

TEST_CASE("round trip of random formulas through both writers") {
    testing::Rng rng(71);
    for (int round = 0; round < 300; ++round) {
        const BooleanNetwork net = testing::random_network(rng, 6, 4);
        CHECK(parse_adf(write_adf(bn_to_adf(net))) == bn_to_adf(net));
        CHECK(parse_bnet(write_bnet(net)) == net);
    }
}

TEST_CASE("DOT export") {
    const BooleanNetwork net = testing::load("cycle3.adf").network;
    const Stg stg = build_stg(net, Scheme::Synchronous);
    const auto found = attractors(stg);
    const std::string dot = write_stg_dot(stg, found);
    CHECK(dot.find("000 -> 111;") != std::string::npos);
    CHECK(dot.find("111 -> 000;") != std::string::npos);
    CHECK(dot.find("000 [peripheries=2];") != std::string::npos);
    CHECK(dot.rfind("digraph stg {", 0) == 0);
}

TEST_CASE("JSON report") {
    const LoadedModel self = testing::load("self.adf");
    const TrapReport traps = trap_spaces(self.network);
    AnalysisReport report;
    report.adf = &self.adf;
    report.traps = &traps;
    report.semantics.emplace_back(Semantics::Complete, enumerate(self.adf, Semantics::Complete));
    const auto json = nlohmann::json::parse(write_report_json(report));
    CHECK(json["traps"]["minimal"] == nlohmann::json::array({"0", "1"}));
    CHECK(json["traps"]["trap_spaces"] == nlohmann::json::array({"-", "0", "1"}));
    CHECK(json["semantics"]["cmp"] == nlohmann::json::array({"0", "1", "u"}));
    CHECK(json["atoms"] == nlohmann::json::array({"a"}));
    CHECK_FALSE(json.contains("existence"));
    CHECK(write_report_json(report) == write_report_json(report));
}
