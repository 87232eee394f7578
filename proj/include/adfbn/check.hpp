#pragma once

#include <string>
#include <vector>

#include "adfbn/budget.hpp"
#include "adfbn/model.hpp"

namespace adfbn {

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Informational results describe expected differences and never fail.
    bool informational = false;
    std::string detail;
};

/// Runs every ADF/BN correspondence on one instance, computing both sides
/// of each equivalence independently.
std::vector<CheckResult> check_correspondences(const BooleanNetwork& network, const Budget& budget = {});

}  // namespace adfbn
