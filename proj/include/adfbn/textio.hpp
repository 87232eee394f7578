#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adfbn/dynamics.hpp"
#include "adfbn/formula.hpp"
#include "adfbn/model.hpp"
#include "adfbn/semantics.hpp"
#include "adfbn/structure.hpp"

namespace adfbn {

enum class ModelFormat { Adf, Bnet };

std::string_view to_string(ModelFormat format) noexcept;
std::optional<ModelFormat> parse_model_format(std::string_view text) noexcept;
/// `.adf` or `.bnet`; nullopt for anything else.
std::optional<ModelFormat> format_from_path(const std::filesystem::path& path);

/// Resolves an atom name to its index; nullopt for unknown names.
using AtomResolver = std::function<std::optional<AtomId>(std::string_view)>;

/// Parses the shared formula grammar. `line`/`column` locate the first
/// character of `text` in its source for error messages.
Formula parse_formula(std::string_view text, const AtomResolver& resolve, std::size_t line = 1,
                      std::size_t column = 1);

/// One statement of a model file with its source position.
struct Declaration {
    enum class Kind { Atom, Condition, Function };
    Kind kind = Kind::Atom;
    std::string name;
    std::string formula_text;
    std::size_t line = 0;
    std::size_t column = 0;
    std::size_t formula_line = 0;
    std::size_t formula_column = 0;
};

/// Statements of one model file in source order, before name resolution.
struct SourceDocument {
    ModelFormat format = ModelFormat::Adf;
    std::vector<Declaration> declarations;
};

SourceDocument read_document(std::string_view text, ModelFormat format);

/// `s(<atom>).` declarations and `ac(<atom>, <formula>).` conditions.
Adf parse_adf(std::string_view text);
/// `targets, factors` header followed by `<var>, <formula>` lines.
BooleanNetwork parse_bnet(std::string_view text);

std::string write_adf(const Adf& adf);
std::string write_bnet(const BooleanNetwork& network);

/// DOT rendering of a transition graph; attractor states get peripheries=2.
std::string write_stg_dot(const Stg& stg, std::span<const std::vector<State>> attractors);

/// A model as loaded from disk together with both of its faces.
struct LoadedModel {
    ModelFormat format = ModelFormat::Adf;
    Adf adf;
    BooleanNetwork network;
    std::vector<std::string> warnings;
};

LoadedModel load_model(const std::filesystem::path& path, std::optional<ModelFormat> format = std::nullopt);
LoadedModel load_model_text(std::string_view text, ModelFormat format);

/// Sections of a JSON analysis report; absent sections are omitted.
struct AnalysisReport {
    const Adf* adf = nullptr;
    std::vector<std::pair<Semantics, std::vector<Interp3>>> semantics;
    const TrapReport* traps = nullptr;
    const ExistenceReport* existence = nullptr;
    /// Set instead of `existence` when the report could not be produced.
    std::string existence_error;
    const Classification* classification = nullptr;
};

/// Deterministic JSON: atoms in declaration order, sorted sets,
/// interpretations as {0,1,u} strings and subspaces as {0,1,-} strings.
std::string write_report_json(const AnalysisReport& report);

}  // namespace adfbn
