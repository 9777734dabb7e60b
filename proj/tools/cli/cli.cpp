#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <new>
#include <ostream>

#include "cli/bench.hpp"
#include "cli/verify.hpp"
#include "tuttekit/errors.hpp"

namespace tuttekit::cli {

namespace {

struct Common {
  Format format = Format::text;
  std::string out_path;
  Settings settings;
};

void add_common(CLI::App* sub, Common& c) {
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  sub->add_option("--format", c.format, "Output format: text or json")
      ->transform(CLI::CheckedTransformer(formats).description(""))
      ->type_name("text|json")
      ->envname("TUTTEKIT_FORMAT");
  sub->add_option("--out", c.out_path, "Write output to this file instead of stdout");

  Limits& l = c.settings.limits;
  const char* budgets = "Budgets";
  sub->add_option("--max-poly-n", l.farey_poly_max_n,
                  "Largest Farey generation for full polynomials")
      ->envname("TUTTEKIT_MAX_POLY_N")
      ->capture_default_str()
      ->group(budgets);
  sub->add_option("--max-graph-n", l.farey_graph_max_n, "Largest Farey graph generation")
      ->envname("TUTTEKIT_MAX_GRAPH_N")
      ->capture_default_str()
      ->group(budgets);
  sub->add_option("--pow-cells", l.pow_cells, "Largest (degX+1)*(degY+1) of an expanded power")
      ->envname("TUTTEKIT_POW_CELLS")
      ->capture_default_str()
      ->group(budgets);
  sub->add_option("--vertex-cap", l.vertex_cap, "Largest generated graph, in vertices")
      ->envname("TUTTEKIT_VERTEX_CAP")
      ->capture_default_str()
      ->group(budgets);
  sub->add_option("--delcon-nodes", l.delcon_max_nodes, "Deletion-contraction node cap")
      ->envname("TUTTEKIT_DELCON_NODES")
      ->capture_default_str()
      ->group(budgets);
  sub->add_option("--max-degree", c.settings.max_degree,
                  "Largest degree of an expanded univariate polynomial")
      ->envname("TUTTEKIT_MAX_DEGREE")
      ->capture_default_str()
      ->group(budgets);
  sub->add_option("--max-bits", c.settings.max_bits,
                  "Largest exact number printed as digits, in bits")
      ->envname("TUTTEKIT_MAX_BITS")
      ->capture_default_str()
      ->group(budgets);
}

void add_family(CLI::App* sub, FamilySpec& spec, std::optional<unsigned>& m) {
  const std::map<std::string, Family> families{
      {"farey", Family::farey}, {"koch", Family::koch}, {"exp", Family::exp}};
  sub->add_option("--family", spec.family, "Graph family: farey, koch or exp")
      ->transform(CLI::CheckedTransformer(families).description(""))
      ->type_name("farey|koch|exp")
      ->required();
  sub->add_option("--n", spec.n, "Generation")->required();
  sub->add_option("--m", m, "Koch parameter m (koch only)");
}

void emit_error(const char* kind, const std::string& message, Format format, std::ostream& out,
                std::ostream& err) {
  if (format == Format::json) {
    out << nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
  } else {
    err << "tuttekit: " << kind << " error: " << message << '\n';
  }
}

void write(const Output& result, const Common& c, std::ostream& out) {
  std::string body = c.format == Format::json ? result.json.dump(2) : result.text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (c.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open '" + c.out_path + "' for writing");
  file << body;
  if (!file.flush()) throw DomainError("cannot write '" + c.out_path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Tutte polynomials and graph invariants for the Farey, Koch and "
               "exponential graph families.",
               "tuttekit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tuttekit 0.1.0");

  Common common;
  FamilySpec spec;
  std::optional<unsigned> m;
  bool expand = false;
  std::string kind;
  std::optional<std::string> point;
  Scope scope = Scope::all;
  unsigned max_n = 3;
  unsigned reps = 3;

  auto* tutte = app.add_subcommand("tutte", "Print the Tutte polynomial of a family member");
  add_family(tutte, spec, m);
  tutte->add_flag("--expand", expand, "Expand Koch/exp power forms (subject to --pow-cells)");
  add_common(tutte, common);

  auto* invariant = app.add_subcommand("invariant", "Print a graph invariant");
  add_family(invariant, spec, m);
  invariant
      ->add_option("--kind", kind,
                   "spanning-trees, cssg, forests, chromatic, reliability or eval")
      ->check(CLI::IsMember(
                  {"spanning-trees", "cssg", "forests", "chromatic", "reliability", "eval"})
                  .description(""))
      ->type_name("KIND")
      ->required();
  invariant->add_option("--point", point, "Evaluation point x0,y0 for --kind eval");
  invariant->add_flag("--expand", expand, "Expand Koch/exp power forms");
  add_common(invariant, common);

  auto* graph = app.add_subcommand("graph", "Print a family member as an edge list or JSON");
  add_family(graph, spec, m);
  add_common(graph, common);

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against brute force");
  const std::map<std::string, Scope> scopes{{"farey", Scope::farey}, {"koch", Scope::koch},
                                            {"exp", Scope::exp},     {"polys", Scope::polys},
                                            {"all", Scope::all}};
  verify->add_option("--scope", scope, "farey, koch, exp, polys or all")
      ->transform(CLI::CheckedTransformer(scopes).description(""))
      ->type_name("SCOPE")
      ->default_str("all");
  verify->add_option("--max-n", max_n, "Largest generation to check")->capture_default_str();
  add_common(verify, common);

  auto* bench = app.add_subcommand("bench", "Time the structured route against an oracle");
  add_family(bench, spec, m);
  bench->add_option("--reps", reps, "Repetitions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(bench, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  spec.m = m;
  common.settings.limits.render_max_bits = common.settings.max_bits;

  try {
    Output result;
    if (tutte->parsed()) {
      result = cmd_tutte(spec, expand, common.settings);
    } else if (invariant->parsed()) {
      result = cmd_invariant(spec, kind, point, expand, common.settings);
    } else if (graph->parsed()) {
      result = cmd_graph(spec, common.settings);
    } else if (verify->parsed()) {
      result = cmd_verify(scope, max_n, common.settings);
    } else {
      result = cmd_bench(spec, reps, common.settings);
    }
    write(result, common, out);
    return result.status;
  } catch (const BudgetExceeded& e) {
    emit_error("budget", e.what(), common.format, out, err);
    return kExitBudget;
  } catch (const std::bad_alloc&) {
    emit_error("budget", "out of memory", common.format, out, err);
    return kExitBudget;
  } catch (const DomainError& e) {
    emit_error("usage", e.what(), common.format, out, err);
    return kExitUsage;
  }
}

}  // namespace tuttekit::cli
