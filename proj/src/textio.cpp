#include "adfbn/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "adfbn/error.hpp"

namespace adfbn {

std::string_view to_string(ModelFormat format) noexcept { return format == ModelFormat::Adf ? "adf" : "bnet"; }

std::optional<ModelFormat> parse_model_format(std::string_view text) noexcept {
    if (text == "adf") return ModelFormat::Adf;
    if (text == "bnet") return ModelFormat::Bnet;
    return std::nullopt;
}

std::optional<ModelFormat> format_from_path(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".adf") return ModelFormat::Adf;
    if (ext == ".bnet") return ModelFormat::Bnet;
    return std::nullopt;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

// Character cursor with 1-based line/column tracking.
class Cursor {
public:
    Cursor(std::string_view text, std::size_t line, std::size_t column) : text_(text), line_(line), column_(column) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    std::size_t offset() const { return pos_; }

    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    // Skips whitespace and, when enabled, `#` comments up to the end of line.
    void skip_blank(bool comments) {
        while (!done()) {
            if (std::isspace(static_cast<unsigned char>(peek())) != 0) {
                advance();
            } else if (comments && peek() == '#') {
                while (!done() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string identifier() {
        std::string out;
        while (!done() && ident_char(peek())) out.push_back(advance());
        return out;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column_, message); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t column_;
};

std::string describe(const Cursor& cur) {
    if (cur.done()) return "end of input";
    return std::string("'") + cur.peek() + "'";
}

class FormulaParser {
public:
    FormulaParser(std::string_view text, const AtomResolver& resolve, std::size_t line, std::size_t column)
        : cur_(text, line, column), resolve_(resolve) {}

    Formula parse() {
        Formula phi = implication();
        cur_.skip_blank(false);
        if (!cur_.done()) cur_.fail("unexpected " + describe(cur_) + " after formula");
        return phi;
    }

private:
    bool accept(std::string_view token) {
        cur_.skip_blank(false);
        for (std::size_t i = 0; i < token.size(); ++i) {
            if (cur_.peek(i) != token[i]) return false;
        }
        for (std::size_t i = 0; i < token.size(); ++i) cur_.advance();
        return true;
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (!accept("->")) return lhs;
        return Formula::implication(std::move(lhs), implication());
    }

    Formula disjunction() {
        std::vector<Formula> parts;
        parts.push_back(conjunction());
        while (accept("|")) parts.push_back(conjunction());
        return Formula::disjunction(std::move(parts));
    }

    Formula conjunction() {
        std::vector<Formula> parts;
        parts.push_back(unary());
        while (accept("&")) parts.push_back(unary());
        return Formula::conjunction(std::move(parts));
    }

    Formula unary() {
        if (accept("!")) return Formula::negation(unary());
        return primary();
    }

    Formula primary() {
        cur_.skip_blank(false);
        if (accept("(")) {
            Formula inner = implication();
            if (!accept(")")) cur_.fail("expected ')' but found " + describe(cur_));
            return inner;
        }
        const std::size_t line = cur_.line();
        const std::size_t column = cur_.column();
        if ((cur_.peek() == '0' || cur_.peek() == '1') && !ident_char(cur_.peek(1))) {
            return Formula::constant(cur_.advance() == '1');
        }
        if (!ident_start(cur_.peek())) cur_.fail("expected an atom, constant, '!' or '(' but found " + describe(cur_));
        const std::string name = cur_.identifier();
        const auto id = resolve_(name);
        if (!id) throw ParseError(line, column, "undeclared atom '" + name + "'");
        return Formula::atom(*id);
    }

    Cursor cur_;
    const AtomResolver& resolve_;
};

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])) != 0) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])) != 0) --end;
    return std::string(text.substr(begin, end - begin));
}

bool valid_identifier(std::string_view name) {
    return !name.empty() && ident_start(name.front()) && std::all_of(name.begin(), name.end(), ident_char);
}

void expect(Cursor& cur, char c) {
    cur.skip_blank(true);
    if (cur.peek() != c) cur.fail(std::string("expected '") + c + "' but found " + describe(cur));
    cur.advance();
}

std::vector<Declaration> read_adf_statements(std::string_view text) {
    std::vector<Declaration> out;
    Cursor cur(text, 1, 1);
    for (;;) {
        cur.skip_blank(true);
        if (cur.done()) break;
        Declaration decl;
        decl.line = cur.line();
        decl.column = cur.column();
        if (!ident_start(cur.peek())) cur.fail("expected 's(' or 'ac(' but found " + describe(cur));
        const std::string keyword = cur.identifier();
        if (keyword != "s" && keyword != "ac") {
            throw ParseError(decl.line, decl.column, "unknown statement '" + keyword + "'");
        }
        decl.kind = keyword == "s" ? Declaration::Kind::Atom : Declaration::Kind::Condition;
        expect(cur, '(');
        cur.skip_blank(true);
        if (!ident_start(cur.peek())) cur.fail("expected an atom name but found " + describe(cur));
        decl.name = cur.identifier();
        if (decl.kind == Declaration::Kind::Condition) {
            expect(cur, ',');
            cur.skip_blank(true);
            decl.formula_line = cur.line();
            decl.formula_column = cur.column();
            const std::size_t begin = cur.offset();
            int depth = 0;
            while (!cur.done() && !(depth == 0 && cur.peek() == ')')) {
                if (cur.peek() == '#' || cur.peek() == '.') break;
                if (cur.peek() == '(') ++depth;
                if (cur.peek() == ')') --depth;
                cur.advance();
            }
            decl.formula_text = std::string(text.substr(begin, cur.offset() - begin));
            if (depth != 0) cur.fail("unbalanced parentheses in acceptance condition");
        }
        expect(cur, ')');
        expect(cur, '.');
        out.push_back(std::move(decl));
    }
    return out;
}

std::vector<Declaration> read_bnet_lines(std::string_view text) {
    std::vector<Declaration> out;
    bool header_seen = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t newline = text.find('\n', start);
        const std::size_t stop = newline == std::string_view::npos ? text.size() : newline;
        std::string_view line = text.substr(start, stop - start);
        ++line_no;
        start = stop + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) {
            if (newline == std::string_view::npos) break;
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) {
            const std::size_t indent = line.find_first_not_of(" \t");
            throw ParseError(line_no, indent + 1, "expected '<target>, <formula>'");
        }
        const std::string target = trim(line.substr(0, comma));
        std::size_t formula_col = comma + 1;
        while (formula_col < line.size() && std::isspace(static_cast<unsigned char>(line[formula_col])) != 0) {
            ++formula_col;
        }
        const std::string formula = trim(line.substr(comma + 1));
        if (!header_seen) {
            std::string lowered_target = target;
            std::string lowered_formula = formula;
            for (auto* s : {&lowered_target, &lowered_formula}) {
                std::transform(s->begin(), s->end(), s->begin(),
                               [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            }
            if (lowered_target != "targets" || lowered_formula != "factors") {
                throw ParseError(line_no, 1, "expected the header 'targets, factors'");
            }
            header_seen = true;
            if (newline == std::string_view::npos) break;
            continue;
        }
        const std::size_t indent = line.find_first_not_of(" \t");
        if (!valid_identifier(target)) throw ParseError(line_no, indent + 1, "invalid target name '" + target + "'");
        if (formula.empty()) throw ParseError(line_no, formula_col + 1, "missing formula for '" + target + "'");
        Declaration decl;
        decl.kind = Declaration::Kind::Function;
        decl.name = target;
        decl.formula_text = formula;
        decl.line = line_no;
        decl.column = indent + 1;
        decl.formula_line = line_no;
        decl.formula_column = formula_col + 1;
        out.push_back(std::move(decl));
        if (newline == std::string_view::npos) break;
    }
    if (!header_seen) throw ParseError(1, 1, "expected the header 'targets, factors'");
    return out;
}

// Sorted rendered strings: the lexicographic order used by every output.
template <typename T, typename Render>
std::vector<std::string> sorted_strings(const std::vector<T>& items, Render render) {
    std::vector<std::string> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back(render(item));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Formula parse_formula(std::string_view text, const AtomResolver& resolve, std::size_t line, std::size_t column) {
    return FormulaParser(text, resolve, line, column).parse();
}

SourceDocument read_document(std::string_view text, ModelFormat format) {
    return SourceDocument{format, format == ModelFormat::Adf ? read_adf_statements(text) : read_bnet_lines(text)};
}

Adf parse_adf(std::string_view text) {
    const SourceDocument doc = read_document(text, ModelFormat::Adf);
    std::vector<std::string> atoms;
    std::map<std::string, AtomId, std::less<>> index;
    for (const Declaration& decl : doc.declarations) {
        if (decl.kind != Declaration::Kind::Atom) continue;
        if (!index.emplace(decl.name, static_cast<AtomId>(atoms.size())).second) {
            throw ParseError(decl.line, decl.column, "duplicate declaration of atom '" + decl.name + "'");
        }
        atoms.push_back(decl.name);
    }
    const AtomResolver resolve = [&index](std::string_view name) -> std::optional<AtomId> {
        const auto it = index.find(name);
        if (it == index.end()) return std::nullopt;
        return it->second;
    };
    std::vector<std::optional<Formula>> conditions(atoms.size());
    for (const Declaration& decl : doc.declarations) {
        if (decl.kind != Declaration::Kind::Condition) continue;
        const auto it = index.find(decl.name);
        if (it == index.end()) throw ParseError(decl.line, decl.column, "condition for undeclared atom '" + decl.name + "'");
        if (conditions[it->second]) {
            throw ParseError(decl.line, decl.column, "duplicate acceptance condition for '" + decl.name + "'");
        }
        if (trim(decl.formula_text).empty()) {
            throw ParseError(decl.formula_line, decl.formula_column, "empty acceptance condition for '" + decl.name + "'");
        }
        conditions[it->second] = parse_formula(decl.formula_text, resolve, decl.formula_line, decl.formula_column);
    }
    std::vector<Formula> resolved;
    resolved.reserve(atoms.size());
    for (const Declaration& decl : doc.declarations) {
        if (decl.kind == Declaration::Kind::Atom && !conditions[index.at(decl.name)]) {
            throw ParseError(decl.line, decl.column, "atom '" + decl.name + "' has no acceptance condition");
        }
    }
    for (auto& condition : conditions) resolved.push_back(std::move(*condition));
    return Adf(std::move(atoms), std::move(resolved));
}

BooleanNetwork parse_bnet(std::string_view text) {
    const SourceDocument doc = read_document(text, ModelFormat::Bnet);
    std::vector<std::string> variables;
    std::map<std::string, AtomId, std::less<>> index;
    for (const Declaration& decl : doc.declarations) {
        if (!index.emplace(decl.name, static_cast<AtomId>(variables.size())).second) {
            throw ParseError(decl.line, decl.column, "duplicate target '" + decl.name + "'");
        }
        variables.push_back(decl.name);
    }
    // Factors that are never targets become input nodes, numbered after the
    // targets in order of first use.
    const AtomResolver resolve = [&](std::string_view name) -> std::optional<AtomId> {
        const auto it = index.find(name);
        if (it != index.end()) return it->second;
        const auto id = static_cast<AtomId>(variables.size());
        index.emplace(std::string(name), id);
        variables.emplace_back(name);
        return id;
    };
    std::vector<Formula> functions;
    functions.reserve(doc.declarations.size());
    for (const Declaration& decl : doc.declarations) {
        functions.push_back(parse_formula(decl.formula_text, resolve, decl.formula_line, decl.formula_column));
    }
    for (std::size_t v = functions.size(); v < variables.size(); ++v) {
        functions.push_back(Formula::atom(static_cast<AtomId>(v)));
    }
    return BooleanNetwork(std::move(variables), std::move(functions));
}

std::string write_adf(const Adf& adf) {
    std::string out;
    for (const auto& atom : adf.atoms()) out += "s(" + atom + ").\n";
    for (AtomId a = 0; a < adf.size(); ++a) {
        out += "ac(" + adf.name(a) + ", " + format_formula(adf.condition(a), adf.atoms()) + ").\n";
    }
    return out;
}

std::string write_bnet(const BooleanNetwork& network) {
    std::string out = "targets, factors\n";
    for (AtomId v = 0; v < network.size(); ++v) {
        out += network.name(v) + ", " + format_formula(network.function(v), network.variables()) + "\n";
    }
    return out;
}

std::string write_stg_dot(const Stg& stg, std::span<const std::vector<State>> attractors) {
    std::vector<std::uint64_t> order(stg.state_count());
    for (std::uint64_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&stg](std::uint64_t a, std::uint64_t b) { return stg.state(a) < stg.state(b); });
    std::vector<bool> in_attractor(stg.state_count(), false);
    for (const auto& attractor : attractors) {
        for (const State& s : attractor) in_attractor[s.bits()] = true;
    }
    const auto id = [&stg](std::uint64_t index) {
        const std::string text = stg.state(index).to_string();
        return text.empty() ? std::string("\"\"") : text;
    };
    std::string out = "digraph stg {\n";
    for (std::uint64_t s : order) {
        out += "  " + id(s) + (in_attractor[s] ? " [peripheries=2]" : "") + ";\n";
    }
    for (std::uint64_t s : order) {
        std::vector<std::uint64_t> targets(stg.successors(s).begin(), stg.successors(s).end());
        std::sort(targets.begin(), targets.end(),
                  [&stg](std::uint64_t a, std::uint64_t b) { return stg.state(a) < stg.state(b); });
        for (std::uint64_t t : targets) out += "  " + id(s) + " -> " + id(t) + ";\n";
    }
    out += "}\n";
    return out;
}

LoadedModel load_model_text(std::string_view text, ModelFormat format) {
    LoadedModel model;
    model.format = format;
    if (format == ModelFormat::Adf) {
        model.adf = parse_adf(text);
        BnConversion conversion = adf_to_bn(model.adf);
        model.network = std::move(conversion.network);
        model.warnings = std::move(conversion.warnings);
    } else {
        model.network = parse_bnet(text);
        model.adf = bn_to_adf(model.network);
    }
    return model;
}

LoadedModel load_model(const std::filesystem::path& path, std::optional<ModelFormat> format) {
    if (!format) format = format_from_path(path);
    if (!format) throw Error("cannot tell the format of '" + path.string() + "'; use a .adf or .bnet extension");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_model_text(buffer.str(), *format);
}

std::string write_report_json(const AnalysisReport& report) {
    using Json = nlohmann::ordered_json;
    const auto adf_string = [](const Interp3& nu) { return nu.to_string(Interp3::Style::Adf); };
    const auto subspace_string = [](const Interp3& m) { return m.to_string(Interp3::Style::Subspace); };
    const auto state_string = [](const State& s) { return s.to_string(); };
    const auto state_sets = [&](const std::vector<std::vector<State>>& sets) {
        std::vector<std::vector<std::string>> rendered;
        for (const auto& set : sets) rendered.push_back(sorted_strings(set, state_string));
        std::sort(rendered.begin(), rendered.end());
        return rendered;
    };

    Json root = Json::object();
    if (report.adf != nullptr) root["atoms"] = report.adf->atoms();
    if (!report.semantics.empty()) {
        Json semantics = Json::object();
        for (const auto& [sigma, set] : report.semantics) {
            semantics[std::string(short_name(sigma))] = sorted_strings(set, adf_string);
        }
        root["semantics"] = std::move(semantics);
    }
    if (report.traps != nullptr) {
        const TrapReport& traps = *report.traps;
        Json section = Json::object();
        section["scheme"] = short_name(traps.scheme);
        section["trap_spaces"] = sorted_strings(traps.trap_spaces, subspace_string);
        section["minimal"] = sorted_strings(traps.minimal, subspace_string);
        section["maximal"] = sorted_strings(traps.maximal, subspace_string);
        section["attractors"] = state_sets(traps.attractors);
        section["stable_states"] = sorted_strings(traps.stable_states, state_string);
        root["traps"] = std::move(section);
    }
    if (report.existence != nullptr) {
        const ExistenceReport& e = *report.existence;
        Json section = Json::object();
        section["acyclic"] = e.acyclic;
        section["has_positive_cycle"] = e.has_positive_cycle;
        section["has_negative_cycle"] = e.has_negative_cycle;
        section["negative_closed_scc"] = e.negative_closed_scc;
        section["all_regulated"] = e.all_regulated;
        section["all_negatively_regulated"] = e.all_negatively_regulated;
        section["redundant_arc_on_cycle"] = e.redundant_arc_on_cycle;
        Json conclusions = Json::array();
        for (Conclusion c : e.conclusions) conclusions.push_back(to_string(c));
        section["conclusions"] = std::move(conclusions);
        section["fvs_size"] = e.fvs.size;
        if (report.adf != nullptr) {
            Json witness = Json::array();
            for (AtomId v : e.fvs.witness) witness.push_back(report.adf->name(v));
            section["fvs"] = std::move(witness);
        }
        section["exact_count"] = e.exact_count ? Json(*e.exact_count) : Json(nullptr);
        section["violations"] = e.violations;
        root["existence"] = std::move(section);
    } else if (!report.existence_error.empty()) {
        root["existence_error"] = report.existence_error;
    }
    if (report.classification != nullptr) {
        Json section = Json::object();
        section["bipolar"] = report.classification->bipolar;
        Json links = Json::array();
        for (const auto& [link, kind] : report.classification->per_link) {
            Json entry = Json::object();
            if (report.adf != nullptr) {
                entry["from"] = report.adf->name(link.from);
                entry["to"] = report.adf->name(link.to);
            } else {
                entry["from"] = link.from;
                entry["to"] = link.to;
            }
            entry["kind"] = to_string(kind);
            links.push_back(std::move(entry));
        }
        section["links"] = std::move(links);
        root["classification"] = std::move(section);
    }
    return root.dump(2) + "\n";
}

}  // namespace adfbn
