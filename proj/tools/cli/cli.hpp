#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuttekit/limits.hpp"

namespace tuttekit::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitCheckFailed = 3;

enum class Family { farey, koch, exp };

struct FamilySpec {
  Family family = Family::farey;
  unsigned n = 0;
  std::optional<unsigned> m;  // koch only
};

enum class Format { text, json };

struct Settings {
  Limits limits;
  // Largest degree of an expanded univariate polynomial.
  std::uint64_t max_degree = 8192;
  // Largest exact scalar result, in bits.
  std::uint64_t max_bits = 1'000'000;
};

// What a command produced; the dispatcher prints one of the two forms.
struct Output {
  std::string text;
  nlohmann::json json;
  int status = kExitOk;
};

std::string family_name(Family f);

// Throws DomainError when m is given for a family other than koch, or
// missing for koch.
void validate(const FamilySpec& spec);

Output cmd_tutte(const FamilySpec& spec, bool expand, const Settings& settings);

Output cmd_invariant(const FamilySpec& spec, const std::string& kind,
                     const std::optional<std::string>& point, bool expand,
                     const Settings& settings);

Output cmd_graph(const FamilySpec& spec, const Settings& settings);

// Runs the command line. `args` excludes the program name; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tuttekit::cli
