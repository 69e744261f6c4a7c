#pragma once

#include <string>
#include <vector>

#include "mysticum/errors.hpp"

namespace mysticum {

class UnknownSuiteError : public std::runtime_error {
 public:
  explicit UnknownSuiteError(const std::string& name)
      : std::runtime_error("unknown suite '" + name + "'") {}
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// The numbered verification batteries behind `verify`; each returns one or
// more named checks. They are exact except where a tolerance is stated.
std::vector<CheckResult> criterion_counterexample();        // 1
std::vector<CheckResult> criterion_incidence_audit();       // 2
std::vector<CheckResult> criterion_forward_theorem();       // 3
std::vector<CheckResult> criterion_special_parameter();     // 4
std::vector<CheckResult> criterion_converse_sampling();     // 5
std::vector<CheckResult> criterion_cs_structure();          // 6
std::vector<CheckResult> criterion_covariants();            // 7
std::vector<CheckResult> criterion_extension_degree();      // 8
std::vector<CheckResult> criterion_group_facts();           // 9

std::vector<std::string> suite_names();  // incidence csc cspoly covariants extensions all
SuiteResult run_suite(const std::string& name);

}  // namespace mysticum
