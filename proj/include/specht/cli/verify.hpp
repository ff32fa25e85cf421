#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace specht::cli {

struct SuiteOptions {
  std::optional<int> max_n;  // overrides each suite's default range
  bool include_reference = false;
  unsigned threads = 0;      // 0: hardware concurrency
};

struct SuiteResult {
  std::string name;
  int max_n = 0;
  std::size_t cases = 0;
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;  // evidence and reference-only output
  double seconds = 0;
  bool ok() const { return mismatches.empty(); }
};

// Known suite names, "all" excluded.
const std::vector<std::string>& suite_names();
int default_max_n(const std::string& suite);
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});
// "all" expands to every suite.
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& options = {});

// A single check: nullopt on agreement, otherwise what went wrong.
using CaseFn = std::function<std::optional<std::string>()>;
struct Case {
  std::string label;
  CaseFn run;
};
// Runs the cases on worker threads; mismatches come back in case order,
// exceptions count as mismatches.
std::vector<std::string> run_cases(const std::vector<Case>& cases, unsigned threads);

}  // namespace specht::cli
