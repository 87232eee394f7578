#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "adfbn/budget.hpp"
#include "adfbn/interpretation.hpp"
#include "adfbn/model.hpp"

namespace adfbn {

enum class Semantics { TwoValued, Admissible, Complete, Preferred, Grounded, Stable };

/// Short names used on the command line: 2v, adm, cmp, prf, grnd, stb.
std::string_view short_name(Semantics sigma) noexcept;
std::optional<Semantics> parse_semantics(std::string_view text) noexcept;

/// Every two-valued extension of `nu`, sorted. Refuses more than
/// budget.max_state_atoms undecided atoms.
std::vector<State> completions(const Interp3& nu, const Budget& budget = {});

/// Consensus operator: each atom gets eval3 of its condition.
Interp3 gamma(const Adf& adf, const Interp3& nu);

/// omega(s) == omega(C_s) for every atom.
bool is_two_valued_model(const Adf& adf, const State& omega);

/// Sub-framework on the true atoms of `omega`, with false atoms replaced by
/// FALSE in every remaining condition. Throws PreconditionError unless
/// `omega` is a two-valued model.
Adf reduct(const Adf& adf, const State& omega);

/// Least fixpoint of gamma, reached by iterating from all-undecided.
Interp3 grounded(const Adf& adf);

/// Exact semantics sets, sorted. 3^n scans for admissible/complete/preferred,
/// 2^n scans for two-valued/stable, Kleene iteration for grounded.
std::vector<Interp3> enumerate(const Adf& adf, Semantics sigma, const Budget& budget = {});

/// Elements with nothing strictly above them in the information order.
std::vector<Interp3> maximal_elements(std::vector<Interp3> set);
/// Elements with nothing strictly below them in the information order.
std::vector<Interp3> minimal_elements(std::vector<Interp3> set);

}  // namespace adfbn
