#pragma once

#include <string>
#include <vector>

#include "criteria.hpp"

namespace galois {

// One reproduced result: the delegated criterion reports plus the
// certificates (primes, forms, class tables) that make it auditable.
struct CaseReport {
    std::string id;
    std::string title;
    std::vector<std::string> params;        // resolved "name = value" lines
    Verdict conclusion;
    std::vector<CriterionReport> reports;   // delegated evaluations, in run order
    std::vector<std::string> certificates;  // one auditable fact per line
    std::vector<std::string> notes;
    std::string str() const;
};

const std::vector<std::string>& case_ids();

// Positional string parameters; each case documents its own defaults.
// Unknown ids and malformed parameters throw (DomainError / ParseError).
CaseReport run_case_study(const std::string& id,
                          const std::vector<std::string>& params = {});

}  // namespace galois
