#pragma once

#include <set>
#include <string>
#include <vector>

#include "arakelov/context.hpp"

namespace arakelov {

struct CheckLine {
    std::string claim;
    std::string computed;
    std::string tolerance;
    bool pass = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<CheckLine> checks;
    std::string error;  // set if the run threw
    double seconds = 0.0;
    bool pass() const;
};

// Acceptance criteria 1..16.
int criterion_count();
std::string criterion_title(int id);
CriterionResult run_criterion(int id, const EvalContext& ctx);

// Criteria whose stated tolerance the reference data cannot meet; they are
// reported as FAIL but do not count as unexpected failures.
const std::set<int>& known_red_criteria();

// Named groups of criteria ("constants", "euler", "signs", ..., "all").
std::vector<std::string> suite_names();
std::vector<int> suite_criteria(const std::string& suite);

// "PASS [7] zero counting (12.3 s)" followed by one indented line per check.
std::string format_result(const CriterionResult& r, bool verbose);

}  // namespace arakelov
