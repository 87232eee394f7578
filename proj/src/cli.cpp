#include "adfbn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adfbn/check.hpp"
#include "adfbn/dynamics.hpp"
#include "adfbn/error.hpp"
#include "adfbn/semantics.hpp"
#include "adfbn/structure.hpp"
#include "adfbn/textio.hpp"

namespace adfbn::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string input;
    std::string format_in;
    unsigned max_interp_atoms = 0;
    unsigned max_state_atoms = 0;
    std::size_t max_cycles = 0;
    std::string scheme = "sync";
    std::string output_format = "text";
    std::string output;

    std::string semantics;
    bool dot = false;
    bool minimal = false;
    bool maximal = false;
    bool with_basins = false;
    std::string to;

    Budget budget() const {
        Budget b = Budget::from_environment();
        if (max_interp_atoms != 0) b.max_interp_atoms = max_interp_atoms;
        if (max_state_atoms != 0) b.max_state_atoms = max_state_atoms;
        if (max_cycles != 0) b.max_cycles = max_cycles;
        return b;
    }

    Scheme update_scheme() const { return *parse_scheme(scheme); }
    bool json() const { return output_format == "json"; }
};

const std::vector<std::string> kSchemes = {"sync", "async", "async-general"};

void add_common(CLI::App& sub, RunConfig& config) {
    sub.add_option("file", config.input, "Model file (.adf or .bnet)")->required()->check(CLI::ExistingFile);
    sub.add_option("--format-in", config.format_in, "Input format, overriding the file extension")
        ->check(CLI::IsMember({"adf", "bnet"}));
    sub.add_option("--max-interp-atoms", config.max_interp_atoms, "Largest n for 3^n scans")
        ->check(CLI::PositiveNumber);
    sub.add_option("--max-state-atoms", config.max_state_atoms, "Largest n for 2^n scans")
        ->check(CLI::PositiveNumber);
    sub.add_option("--max-cycles", config.max_cycles, "Largest number of enumerated cycles")
        ->check(CLI::PositiveNumber);
    sub.add_option("--format", config.output_format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub.add_option("-o,--output", config.output, "Write results to this file instead of stdout");
}

void add_scheme(CLI::App& sub, RunConfig& config) {
    sub.add_option("--scheme", config.scheme, "Update scheme")->check(CLI::IsMember(kSchemes));
}

template <typename T, typename Render>
std::vector<std::string> sorted_strings(const std::vector<T>& items, Render render) {
    std::vector<std::string> out;
    for (const auto& item : items) out.push_back(render(item));
    std::sort(out.begin(), out.end());
    return out;
}

std::string subspace_string(const Interp3& m) { return m.to_string(Interp3::Style::Subspace); }
std::string adf_string(const Interp3& nu) { return nu.to_string(Interp3::Style::Adf); }
std::string state_string(const State& s) { return s.to_string(); }

std::string join(const std::vector<std::string>& parts, std::string_view separator) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += separator;
        out += parts[i];
    }
    return out;
}

std::string lines(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += p + "\n";
    return out;
}

std::vector<std::vector<std::string>> rendered_state_sets(const std::vector<std::vector<State>>& sets) {
    std::vector<std::vector<std::string>> out;
    for (const auto& set : sets) out.push_back(sorted_strings(set, state_string));
    return out;
}

std::string run_semantics(const RunConfig& config, const LoadedModel& model) {
    const Semantics sigma = *parse_semantics(config.semantics);
    const auto set = enumerate(model.adf, sigma, config.budget());
    if (config.json()) {
        AnalysisReport report;
        report.adf = &model.adf;
        report.semantics.emplace_back(sigma, set);
        return write_report_json(report);
    }
    return lines(sorted_strings(set, adf_string));
}

std::string run_stg(const RunConfig& config, const LoadedModel& model) {
    const Stg stg = build_stg(model.network, config.update_scheme(), config.budget());
    const auto found = attractors(stg);
    if (config.dot) return write_stg_dot(stg, found);
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::uint64_t s = 0; s < stg.state_count(); ++s) {
        for (std::uint64_t t : stg.successors(s)) edges.emplace_back(stg.state(s).to_string(), stg.state(t).to_string());
    }
    std::sort(edges.begin(), edges.end());
    if (config.json()) {
        Json root = Json::object();
        root["atoms"] = model.network.variables();
        root["scheme"] = short_name(stg.scheme());
        Json list = Json::array();
        for (const auto& [from, to] : edges) list.push_back(Json::array({from, to}));
        root["edges"] = std::move(list);
        root["attractors"] = rendered_state_sets(found);
        return root.dump(2) + "\n";
    }
    std::string out;
    for (const auto& [from, to] : edges) out += from + " -> " + to + "\n";
    return out;
}

std::string run_traps(const RunConfig& config, const LoadedModel& model) {
    const TrapReport report = trap_spaces(model.network, config.update_scheme(), config.budget());
    if (config.json()) {
        AnalysisReport doc;
        doc.adf = &model.adf;
        doc.traps = &report;
        return write_report_json(doc);
    }
    const auto& chosen = config.minimal ? report.minimal : config.maximal ? report.maximal : report.trap_spaces;
    return lines(sorted_strings(chosen, subspace_string));
}

std::string run_attractors(const RunConfig& config, const LoadedModel& model) {
    const Stg stg = build_stg(model.network, config.update_scheme(), config.budget());
    const auto found = attractors(stg);
    const auto basin_sets = config.with_basins ? basins(stg, found) : std::vector<std::vector<State>>{};
    if (config.json()) {
        Json root = Json::object();
        root["atoms"] = model.network.variables();
        root["scheme"] = short_name(stg.scheme());
        root["attractors"] = rendered_state_sets(found);
        if (config.with_basins) root["basins"] = rendered_state_sets(basin_sets);
        return root.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < found.size(); ++i) {
        out += join(sorted_strings(found[i], state_string), " ") + "\n";
        if (config.with_basins) out += "  basin: " + join(sorted_strings(basin_sets[i], state_string), " ") + "\n";
    }
    return out;
}

std::string run_convert(const RunConfig& config, const LoadedModel& model) {
    return config.to == "adf" ? write_adf(model.adf) : write_bnet(model.network);
}

std::string run_classify(const RunConfig& config, const LoadedModel& model) {
    const Classification classification = classify(model.adf);
    if (config.json()) {
        AnalysisReport doc;
        doc.adf = &model.adf;
        doc.classification = &classification;
        return write_report_json(doc);
    }
    std::string out = std::string("bipolar: ") + (classification.bipolar ? "yes" : "no") + "\n";
    for (const auto& [link, kind] : classification.per_link) {
        out += model.adf.name(link.from) + " -> " + model.adf.name(link.to) + ": " + to_string(kind) + "\n";
    }
    return out;
}

std::string run_structure(const RunConfig& config, const LoadedModel& model) {
    const Budget budget = config.budget();
    const SignedGraph graph = interaction_graph(model.network);
    const auto cycles = signed_cycles(graph, budget);
    const ExistenceReport report = existence_report(model.network, budget);
    const auto& names = model.network.variables();
    const auto cycle_text = [&](const SignedCycle& cycle) {
        std::string text = cycle.sign == CycleSign::Positive ? "+ " : "- ";
        for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
            text += names[cycle.vertices[i]] + (cycle.arc_signs[i] == Sign::Positive ? " -(+)-> " : " -(-)-> ");
        }
        return text + names[cycle.vertices.front()];
    };
    if (config.json()) {
        AnalysisReport doc;
        doc.adf = &model.adf;
        doc.existence = &report;
        Json root = Json::parse(write_report_json(doc));
        Json list = Json::array();
        for (const auto& cycle : cycles) {
            Json entry = Json::object();
            Json vertices = Json::array();
            Json signs = Json::array();
            for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
                vertices.push_back(names[cycle.vertices[i]]);
                signs.push_back(cycle.arc_signs[i] == Sign::Positive ? "+" : "-");
            }
            entry["vertices"] = std::move(vertices);
            entry["arc_signs"] = std::move(signs);
            entry["sign"] = cycle.sign == CycleSign::Positive ? "+" : "-";
            list.push_back(std::move(entry));
        }
        root["cycles"] = std::move(list);
        return root.dump(2) + "\n";
    }
    std::string out = "cycles: " + std::to_string(cycles.size()) + "\n";
    for (const auto& cycle : cycles) out += "  " + cycle_text(cycle) + "\n";
    const auto yes_no = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    out += "acyclic: " + yes_no(report.acyclic) + "\n";
    out += "positive cycle: " + yes_no(report.has_positive_cycle) + "\n";
    out += "negative cycle: " + yes_no(report.has_negative_cycle) + "\n";
    out += "negative closed component: " + yes_no(report.negative_closed_scc) + "\n";
    out += "every vertex regulated: " + yes_no(report.all_regulated) + "\n";
    out += "every vertex negatively regulated: " + yes_no(report.all_negatively_regulated) + "\n";
    out += "redundant arc on a cycle: " + yes_no(report.redundant_arc_on_cycle) + "\n";
    std::vector<std::string> witness;
    for (AtomId v : report.fvs.witness) witness.push_back(names[v]);
    out += "feedback vertex set: " + std::to_string(report.fvs.size) + " {" + join(witness, ", ") + "}\n";
    std::vector<std::string> conclusions;
    for (Conclusion c : report.conclusions) conclusions.emplace_back(to_string(c));
    out += "conclusions: " + join(conclusions, " ") + "\n";
    out += "two-valued models: " + (report.exact_count ? std::to_string(*report.exact_count) : "not counted") + "\n";
    for (const auto& v : report.violations) out += "violation: " + v + "\n";
    return out;
}

std::string run_count(const RunConfig& config, const LoadedModel& model) {
    const std::uint64_t count = count_two_valued(model.adf, config.budget());
    if (config.json()) {
        Json root = Json::object();
        root["two_valued_count"] = count;
        return root.dump(2) + "\n";
    }
    return std::to_string(count) + "\n";
}

std::string run_check(const RunConfig& config, const LoadedModel& model, bool& all_passed) {
    const auto results = check_correspondences(model.network, config.budget());
    all_passed = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    if (config.json()) {
        Json list = Json::array();
        for (const auto& r : results) {
            Json entry = Json::object();
            entry["name"] = r.name;
            entry["status"] = r.informational ? "note" : r.passed ? "pass" : "fail";
            entry["detail"] = r.detail;
            list.push_back(std::move(entry));
        }
        Json root = Json::object();
        root["checks"] = std::move(list);
        return root.dump(2) + "\n";
    }
    std::string out;
    for (const auto& r : results) {
        const char* status = r.informational ? "NOTE" : r.passed ? "PASS" : "FAIL";
        out += std::string(status) + "  " + r.name + ": " + r.detail + "\n";
    }
    return out;
}

std::string run_report(const RunConfig& config, const LoadedModel& model) {
    const Budget budget = config.budget();
    AnalysisReport doc;
    doc.adf = &model.adf;
    for (Semantics sigma : {Semantics::TwoValued, Semantics::Admissible, Semantics::Complete, Semantics::Preferred,
                            Semantics::Grounded, Semantics::Stable}) {
        doc.semantics.emplace_back(sigma, enumerate(model.adf, sigma, budget));
    }
    const TrapReport traps = trap_spaces(model.network, config.update_scheme(), budget);
    doc.traps = &traps;
    std::optional<ExistenceReport> existence;
    try {
        existence = existence_report(model.network, budget);
        doc.existence = &*existence;
    } catch (const PreconditionError& e) {
        doc.existence_error = e.what();
    }
    const Classification classification = classify(model.adf);
    doc.classification = &classification;
    return write_report_json(doc);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Abstract dialectical frameworks and Boolean networks"};
    app.name("adfbn");
    app.require_subcommand(1, 1);
    RunConfig config;

    auto* semantics = app.add_subcommand("semantics", "Enumerate an ADF semantics");
    add_common(*semantics, config);
    semantics->add_option("--sem", config.semantics, "Semantics")
        ->required()
        ->check(CLI::IsMember({"2v", "adm", "cmp", "prf", "grnd", "stb"}));

    auto* stg = app.add_subcommand("stg", "State transition graph");
    add_common(*stg, config);
    add_scheme(*stg, config);
    stg->add_flag("--dot", config.dot, "Graphviz output");

    auto* traps = app.add_subcommand("traps", "Trap spaces");
    add_common(*traps, config);
    add_scheme(*traps, config);
    auto* minimal = traps->add_flag("--minimal", config.minimal, "Only minimal trap spaces");
    auto* maximal = traps->add_flag("--maximal", config.maximal, "Only maximal non-trivial trap spaces");
    minimal->excludes(maximal);

    auto* attractor_cmd = app.add_subcommand("attractors", "Attractors of the transition graph");
    add_common(*attractor_cmd, config);
    add_scheme(*attractor_cmd, config);
    attractor_cmd->add_flag("--basins", config.with_basins, "Also list the basin of each attractor");

    auto* convert = app.add_subcommand("convert", "Convert between .adf and .bnet");
    add_common(*convert, config);
    convert->add_option("--to", config.to, "Target format")->required()->check(CLI::IsMember({"adf", "bnet"}));

    auto* classify_cmd = app.add_subcommand("classify", "Link polarities and bipolarity");
    add_common(*classify_cmd, config);

    auto* structure = app.add_subcommand("structure", "Signed cycles, feedback vertex set, existence report");
    add_common(*structure, config);

    auto* count = app.add_subcommand("count", "Number of two-valued models");
    add_common(*count, config);

    auto* check = app.add_subcommand("check", "Run every ADF/BN correspondence on the instance");
    add_common(*check, config);

    auto* report = app.add_subcommand("report", "JSON report with every analysis");
    add_common(*report, config);
    add_scheme(*report, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::optional<ModelFormat> format;
    if (!config.format_in.empty()) format = parse_model_format(config.format_in);

    try {
        const LoadedModel model = load_model(config.input, format);
        for (const auto& warning : model.warnings) err << "warning: " << warning << "\n";

        bool passed = true;
        std::string result;
        CLI::App* chosen = app.get_subcommands().front();
        if (chosen == semantics) {
            result = run_semantics(config, model);
        } else if (chosen == stg) {
            result = run_stg(config, model);
        } else if (chosen == traps) {
            result = run_traps(config, model);
        } else if (chosen == attractor_cmd) {
            result = run_attractors(config, model);
        } else if (chosen == convert) {
            result = run_convert(config, model);
        } else if (chosen == classify_cmd) {
            result = run_classify(config, model);
        } else if (chosen == structure) {
            result = run_structure(config, model);
        } else if (chosen == count) {
            result = run_count(config, model);
        } else if (chosen == check) {
            result = run_check(config, model, passed);
        } else {
            result = run_report(config, model);
        }

        if (config.output.empty()) {
            out << result;
        } else {
            std::ofstream file(config.output, std::ios::binary);
            if (!file) throw Error("cannot write '" + config.output + "'");
            file << result;
        }
        return passed ? kExitOk : kExitAnalysisError;
    } catch (const ParseError& e) {
        err << "error: " << config.input << ": " << e.what() << "\n";
    } catch (const BudgetExceeded& e) {
        err << "error: budget exceeded: " << e.what() << "\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitAnalysisError;
}

}  // namespace adfbn::cli
