#pragma once

#include <string>
#include <vector>

#include "cli/cli.hpp"

namespace tuttekit::cli {

enum class Scope { farey, koch, exp, polys, all };

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string scope;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // failure or skip reason
};

// Runs every check in `scope` up to generation `max_n`. Output is a pure
// function of the arguments: fixed seeds, no timings.
std::vector<CheckResult> run_checks(Scope scope, unsigned max_n, const Settings& settings);

Output cmd_verify(Scope scope, unsigned max_n, const Settings& settings);

}  // namespace tuttekit::cli
