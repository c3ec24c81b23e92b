#pragma once

#include <string>
#include <vector>

#include "morseband/config.hpp"
#include "morseband/report.hpp"

namespace morseband::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;  // bound the value is compared against
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  report::Table table(const RunConfig& cfg, const std::string& suite) const;
};

// specfun, model, states, algebra, coherent, moments
const std::vector<std::string>& suite_names();

// `suite` is one of suite_names() or "all". Throws ConfigError on unknown names.
VerifyReport run(const std::string& suite, const RunConfig& cfg);

}  // namespace morseband::verify
