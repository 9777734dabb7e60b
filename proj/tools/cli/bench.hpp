#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/cli.hpp"

namespace tuttekit::cli {

struct BenchReport {
  std::string structured_name;  // the family-specific route
  std::string oracle_name;      // empty when the oracle was skipped
  std::string skip_reason;
  std::vector<double> structured_seconds;
  std::vector<double> oracle_seconds;

  double structured_median() const;
  std::optional<double> oracle_median() const;
  std::optional<double> speedup() const;
};

// Times the structured Tutte computation for `spec` against a brute-force
// oracle on the generated graph, `reps` times each. The oracle is skipped
// when the graph is past its edge budget.
BenchReport run_bench(const FamilySpec& spec, unsigned reps, const Settings& settings);

Output cmd_bench(const FamilySpec& spec, unsigned reps, const Settings& settings);

}  // namespace tuttekit::cli
