#include "cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "tuttekit/errors.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/farey.hpp"
#include "tuttekit/generators.hpp"
#include "tuttekit/oracle.hpp"

namespace tuttekit::cli {

namespace {

template <typename F>
double seconds(F&& work) {
  const auto start = std::chrono::steady_clock::now();
  work();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return elapsed.count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : (v[mid - 1] + v[mid]) / 2;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f s", s);
  return buf;
}

MultiGraph bench_graph(const FamilySpec& spec, const Limits& limits) {
  switch (spec.family) {
    case Family::farey: return farey_graph(spec.n, limits).graph;
    case Family::koch: return koch_graph(*spec.m, spec.n, limits).graph;
    case Family::exp: return exp_graph(spec.n, limits);
  }
  return {};
}

}  // namespace

double BenchReport::structured_median() const { return median(structured_seconds); }

std::optional<double> BenchReport::oracle_median() const {
  if (oracle_seconds.empty()) return std::nullopt;
  return median(oracle_seconds);
}

std::optional<double> BenchReport::speedup() const {
  const auto oracle = oracle_median();
  if (!oracle) return std::nullopt;
  return *oracle / std::max(structured_median(), 1e-9);
}

BenchReport run_bench(const FamilySpec& spec, unsigned reps, const Settings& settings) {
  validate(spec);
  if (reps == 0) throw DomainError("--reps must be positive");
  const Limits& limits = settings.limits;
  BenchReport report;

  std::function<void()> structured;
  if (spec.family == Family::farey) {
    report.structured_name = "split recursion";
    structured = [&] { farey_tutte(spec.n, limits); };
  } else {
    report.structured_name = "power form expansion";
    const PowerForm pf =
        spec.family == Family::koch ? koch_tutte(*spec.m, spec.n) : exp_tutte(spec.n);
    structured = [pf, &limits] { powerform_expand(pf, limits); };
  }

  MultiGraph g;
  try {
    g = bench_graph(spec, limits);
    if (g.num_edges() > limits.subset_max_edges) {
      report.skip_reason = std::to_string(g.num_edges()) + " edges exceed the subset budget of " +
                           std::to_string(limits.subset_max_edges);
    } else {
      report.oracle_name = "subgraph-sum oracle";
    }
  } catch (const BudgetExceeded& e) {
    report.skip_reason = e.what();
  }

  for (unsigned rep = 0; rep < reps; ++rep) {
    report.structured_seconds.push_back(seconds(structured));
    if (!report.oracle_name.empty()) {
      report.oracle_seconds.push_back(seconds([&] { tutte_subgraph_sum(g, limits); }));
    }
  }
  return report;
}

Output cmd_bench(const FamilySpec& spec, unsigned reps, const Settings& settings) {
  const BenchReport report = run_bench(spec, reps, settings);
  std::ostringstream text;
  std::string label = family_name(spec.family);
  if (spec.m) label += " m=" + std::to_string(*spec.m);
  label += " n=" + std::to_string(spec.n);
  text << "bench " << label << ": " << report.structured_name << " vs "
       << (report.oracle_name.empty() ? "oracle" : report.oracle_name) << '\n';

  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < report.structured_seconds.size(); ++i) {
    text << "rep " << i + 1 << "  structured " << format_seconds(report.structured_seconds[i])
         << "  oracle ";
    nlohmann::json row = {{"rep", i + 1}, {"structured_seconds", report.structured_seconds[i]}};
    if (report.oracle_seconds.empty()) {
      text << "skipped";
      row["oracle_seconds"] = nullptr;
    } else {
      text << format_seconds(report.oracle_seconds[i]);
      row["oracle_seconds"] = report.oracle_seconds[i];
    }
    text << '\n';
    rows.push_back(std::move(row));
  }

  text << "median  structured " << format_seconds(report.structured_median()) << "  oracle ";
  nlohmann::json summary = {{"family", family_name(spec.family)},
                            {"n", spec.n},
                            {"reps", reps},
                            {"rows", std::move(rows)},
                            {"structured", report.structured_name},
                            {"structured_median_seconds", report.structured_median()}};
  if (spec.m) summary["m"] = *spec.m;
  if (const auto oracle = report.oracle_median()) {
    char speedup[32];
    std::snprintf(speedup, sizeof speedup, "%.1fx", *report.speedup());
    text << format_seconds(*oracle) << "  speedup " << speedup << '\n';
    summary["oracle"] = report.oracle_name;
    summary["oracle_median_seconds"] = *oracle;
    summary["speedup"] = *report.speedup();
  } else {
    text << "skipped (" << report.skip_reason << ")\n";
    summary["oracle"] = nullptr;
    summary["oracle_skip_reason"] = report.skip_reason;
  }
  return {text.str(), std::move(summary)};
}

}  // namespace tuttekit::cli
