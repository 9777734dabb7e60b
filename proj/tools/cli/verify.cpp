#include "cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tuttekit/errors.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/farey.hpp"
#include "tuttekit/generators.hpp"
#include "tuttekit/oracle.hpp"
#include "tuttekit/sampling.hpp"
#include "tuttekit/serialize.hpp"

namespace tuttekit::cli {

namespace {

using nlohmann::json;

// Largest graph handed to the matrix-tree determinant during verification.
constexpr std::uint32_t kMatrixTreeVertices = 129;
// Node cap for deletion-contraction during verification.
constexpr std::uint64_t kDelConNodes = 2'000'000;

class Suite {
 public:
  Suite(std::vector<CheckResult>& out, std::string scope, const Settings& settings)
      : out_(out), scope_(std::move(scope)), settings_(settings) {}

  const Limits& limits() const { return settings_.limits; }
  const Settings& settings() const { return settings_; }

  // A check passes when `body` returns true. BudgetExceeded turns it into a
  // skip; any other exception is a failure.
  void check(const std::string& name, const std::function<bool()>& body) {
    CheckResult r{scope_, name, CheckStatus::pass, {}};
    try {
      if (!body()) {
        r.status = CheckStatus::fail;
        r.detail = "values differ";
      }
    } catch (const BudgetExceeded& e) {
      r.status = CheckStatus::skip;
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

  void skip(const std::string& name, const std::string& reason) {
    out_.push_back({scope_, name, CheckStatus::skip, reason});
  }

 private:
  std::vector<CheckResult>& out_;
  std::string scope_;
  const Settings& settings_;
};

std::string at(unsigned n, const std::string& what) {
  return "n=" + std::to_string(n) + ": " + what;
}

BiPoly oracle_tutte(const MultiGraph& g, const Limits& limits) {
  if (g.num_edges() <= limits.subset_max_edges) return tutte_subgraph_sum(g, limits);
  Limits capped = limits;
  capped.delcon_max_nodes = std::min(limits.delcon_max_nodes, kDelConNodes);
  return tutte_del_con(g, capped);
}

BigInt matrix_tree(const MultiGraph& g, const Limits& limits) {
  if (g.num_vertices() > kMatrixTreeVertices) {
    throw BudgetExceeded("matrix-tree check limited to " + std::to_string(kMatrixTreeVertices) +
                         " vertices");
  }
  return spanning_tree_count_matrix(g, limits);
}

// Guards the univariate closed forms, whose cost grows with their degree.
void require_degree(std::uint64_t degree, const Settings& settings) {
  if (degree > settings.max_degree) {
    throw BudgetExceeded("degree " + std::to_string(degree) + " exceeds " +
                         std::to_string(settings.max_degree));
  }
}

UniPoly chromatic_from_tutte(const BiPoly& t, const GraphMetrics& m) {
  return substitute_x_affine(t, 1, -1).shifted(m.components).scaled(m.rank % 2 == 0 ? 1 : -1);
}

bool counts_colourings(const UniPoly& chromatic, const MultiGraph& g) {
  for (unsigned colors = 0; colors <= 4; ++colors) {
    if (chromatic(colors) != proper_colorings_brute(g, colors)) return false;
  }
  return true;
}

void farey_checks(Suite& s, unsigned max_n) {
  const Limits& limits = s.limits();
  for (unsigned n = 0; n <= max_n; ++n) {
    if (n > limits.farey_graph_max_n) {
      s.skip(at(n, "Farey checks"), "generation past the graph cap");
      continue;
    }
    const MarkedGraph marked = farey_graph(n, limits);
    const MultiGraph& g = marked.graph;
    const GraphMetrics m = metrics(g);

    s.check(at(n, "order 2^n+1 and size 2^(n+1)-1"), [&] {
      return g.num_vertices() == (1u << n) + 1 && g.num_edges() == (std::size_t{2} << n) - 1;
    });
    s.check(at(n, "two-copy and edge-growth constructions agree on order, size, rank"), [&] {
      const MultiGraph alt = farey_graph_alt(n, limits);
      return alt.num_vertices() == g.num_vertices() && alt.num_edges() == g.num_edges() &&
             metrics(alt) == m;
    });

    if (n > limits.farey_poly_max_n) {
      s.skip(at(n, "polynomial checks"), "generation past the polynomial cap");
    } else {
      const BiPoly t = farey_tutte(n, limits);
      s.check(at(n, "split recursion equals subgraph-sum expansion"),
              [&] { return t == tutte_subgraph_sum(g, limits); });
      s.check(at(n, "split recursion equals deletion-contraction"), [&] {
        Limits capped = limits;
        capped.delcon_max_nodes = std::min(limits.delcon_max_nodes, kDelConNodes);
        return t == tutte_del_con(g, capped);
      });
      if (n <= 3) {
        s.check(at(n, "edge-growth construction has the same Tutte polynomial"),
                [&] { return t == tutte_subgraph_sum(farey_graph_alt(n, limits), limits); });
      }
      s.check(at(n, "Tutte coefficients are non-negative"), [&] {
        return std::all_of(t.terms().begin(), t.terms().end(),
                           [](const BiPoly::Term& term) { return term.coeff > 0; });
      });
      s.check(at(n, "point recursion equals the expanded polynomial at fixed points"), [&] {
        const std::pair<Rational, Rational> points[] = {
            {2, 3}, {make_rational(-1, 2), make_rational(5, 3)}, {0, 0}, {-3, 2}, {1, -1}};
        for (const auto& [x0, y0] : points) {
          if (farey_eval(n, x0, y0, limits) != evaluate(t, x0, y0)) return false;
        }
        return true;
      });
      s.check(at(n, "T(1,y) cancelled product equals the polynomial at x=1"),
              [&] { return farey_t1y(n, limits) == partial_eval_x(t, 1); });
      s.check(at(n, "T(x,0) = x(x+1)^(2^n-1) equals the polynomial at y=0"),
              [&] { return farey_t_x0(n, limits) == restrict_y_zero(t); });
      s.check(at(n, "chromatic closed form equals the Tutte substitution"),
              [&] { return farey_chromatic(n, limits) == chromatic_from_tutte(t, m); });
    }

    s.check(at(n, "spanning trees: closed form equals matrix-tree count"),
            [&] { return farey_nst(n, limits) == matrix_tree(g, limits); });
    s.check(at(n, "spanning trees: closed form equals T(1,1)"),
            [&] { return farey_nst(n, limits) == farey_eval(n, 1, 1, limits); });
    s.check(at(n, "connected spanning subgraphs: closed form equals enumeration"),
            [&] { return farey_ncssg(n, limits) == cssg_count_brute(g, limits); });
    s.check(at(n, "connected spanning subgraphs: closed form equals T(1,2)"),
            [&] { return farey_ncssg(n, limits) == farey_eval(n, 1, 2, limits); });
    s.check(at(n, "T(2,2) = 2^|E|"), [&] {
      return farey_eval(n, 2, 2, limits) == pow(BigInt(2), g.num_edges());
    });
    const std::uint64_t vertices = g.num_vertices();
    const std::uint64_t edges = g.num_edges();
    s.check(at(n, "T(1,2) of the cancelled product has no singularity"), [&] {
      require_degree(vertices, s.settings());
      return farey_t1y(n, limits)(2) == farey_ncssg(n, limits);
    });
    s.check(at(n, "chromatic closed form counts proper colourings"),
            [&] { return counts_colourings(farey_chromatic(n, limits), g); });
    s.check(at(n, "reliability from T(1,1/q) equals subset enumeration"),
            [&] { return farey_reliability(n, limits) == reliability_brute(g, limits); });
    s.check(at(n, "reliability is 0 at p=0 and 1 at p=1"), [&] {
      require_degree(edges, s.settings());
      const UniPoly r = farey_reliability(n, limits);
      return r(0) == 0 && r(1) == 1;
    });
    if (n >= 1) {
      s.check(at(n, "reliability product form agrees at p in {1/3, 2/3, 3/4, -1/5, 5/4}"), [&] {
        require_degree(edges, s.settings());
        const UniPoly r = farey_reliability(n, limits);
        for (const Rational& p : {make_rational(1, 3), make_rational(2, 3), make_rational(3, 4),
                                  make_rational(-1, 5), make_rational(5, 4)}) {
          if (farey_reliability_product_form(n, p) != r(p)) return false;
        }
        return true;
      });
      s.check(at(n, "ratio a_n(1,y) equals T_n(1,y)/T_(n-1)(1,y)^2 for y in {1,...,5}"), [&] {
        for (long y = 1; y <= 5; ++y) {
          const Rational prev = farey_eval(n - 1, 1, y, limits);
          if (farey_ratio(n, y) != farey_eval(n, 1, y, limits) / (prev * prev)) return false;
        }
        return true;
      });
      s.check(at(n, "ratio recurrence a_(n+1) = (2+y) - 2y/a_n for y in {1,3,4,5}"), [&] {
        for (long y : {1, 3, 4, 5}) {
          if (farey_ratio(n + 1, y) != (2 + y) - Rational(2 * y) / farey_ratio(n, y)) {
            return false;
          }
        }
        return true;
      });
      s.check(at(n, "ratio a_n(1,2) = 2(n+1)/n"),
              [&] { return farey_ratio(n, 2) == make_rational(2 * (n + 1), n); });
    }
  }
}

// Koch and exponential networks share every check: both are trees of
// `copies` triangles with Tutte polynomial (x^2+x+y)^copies.
void triangle_tree_checks(Suite& s, const std::string& label, const MultiGraph& g,
                          const PowerForm& pf, const BigInt& copies) {
  const Limits& limits = s.limits();
  s.check(label + ": order 2t+1 and size 3t for t triangles", [&] {
    return BigInt(g.num_vertices()) == 2 * copies + 1 && BigInt(g.num_edges()) == 3 * copies;
  });
  s.check(label + ": Tutte power form has exponent t", [&] {
    return pf.base == triangle_tutte() && pf.exponent == copies;
  });
  s.check(label + ": counts are 3^t, 4^t and 7^t", [&] {
    return powerform_eval(pf, 1, 1) == CountForm{3, copies} &&
           powerform_eval(pf, 1, 2) == CountForm{4, copies} &&
           powerform_eval(pf, 2, 1) == CountForm{7, copies};
  });
  s.check(label + ": expanded power form equals the oracle",
          [&] { return powerform_expand(pf, limits) == oracle_tutte(g, limits); });
  s.check(label + ": spanning trees 3^t equal the matrix-tree count",
          [&] { return powerform_eval(pf, 1, 1).value() == matrix_tree(g, limits); });
  s.check(label + ": connected spanning subgraphs 4^t equal enumeration",
          [&] { return powerform_eval(pf, 1, 2).value() == cssg_count_brute(g, limits); });
  s.check(label + ": chromatic lambda((lambda-1)(lambda-2))^t counts colourings", [&] {
    return counts_colourings(triangle_tree_chromatic(copies).expand(s.settings().max_degree), g);
  });
  s.check(label + ": reliability (3p^2-2p^3)^t equals enumeration", [&] {
    return triangle_tree_reliability(copies).expand(s.settings().max_degree) ==
           reliability_brute(g, limits);
  });
}

void koch_checks(Suite& s, unsigned max_n) {
  for (unsigned m = 1; m <= 2; ++m) {
    for (unsigned n = 0; n <= max_n; ++n) {
      const std::string label = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      MultiGraph g;
      try {
        g = koch_graph(m, n, s.limits()).graph;
      } catch (const BudgetExceeded& e) {
        s.skip(label + ": Koch checks", e.what());
        continue;
      }
      triangle_tree_checks(s, label, g, koch_tutte(m, n), pow(BigInt(3 * m + 1), n));
    }
  }
}

void exp_checks(Suite& s, unsigned max_n) {
  for (unsigned n = 0; n <= max_n; ++n) {
    const std::string label = "n=" + std::to_string(n);
    MultiGraph g;
    try {
      g = exp_graph(n, s.limits());
    } catch (const BudgetExceeded& e) {
      s.skip(label + ": exponential network checks", e.what());
      continue;
    }
    BigInt copies = (pow(BigInt(3), n + 1) - 1) / 2;
    triangle_tree_checks(s, label, g, exp_tutte(n), copies);
  }
}

void poly_checks(Suite& s) {
  using sampling::Rng;
  s.check("ring laws on 100 random polynomial triples", [] {
    Rng rng(101);
    for (int i = 0; i < 100; ++i) {
      const BiPoly a = sampling::random_bipoly(rng);
      const BiPoly b = sampling::random_bipoly(rng);
      const BiPoly c = sampling::random_bipoly(rng);
      if (a + b != b + a || a * b != b * a) return false;
      if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) return false;
      if (a * (b + c) != a * b + a * c || square(a) != a * BiPoly(a)) return false;
    }
    return true;
  });
  s.check("evaluation respects sums and products at random rational points", [] {
    Rng rng(102);
    for (int i = 0; i < 100; ++i) {
      const BiPoly a = sampling::random_bipoly(rng);
      const BiPoly b = sampling::random_bipoly(rng);
      const Rational x0 = sampling::random_rational(rng);
      const Rational y0 = sampling::random_rational(rng);
      if (evaluate(a * b, x0, y0) != evaluate(a, x0, y0) * evaluate(b, x0, y0)) return false;
      if (evaluate(a + b, x0, y0) != evaluate(a, x0, y0) + evaluate(b, x0, y0)) return false;
    }
    return true;
  });
  s.check("powers commute with evaluation", [] {
    Rng rng(103);
    for (int i = 0; i < 50; ++i) {
      const BiPoly a = sampling::random_bipoly(rng, 3, 4, 5);
      const auto k = static_cast<long>(rng.below(7));
      const Rational x0 = sampling::random_rational(rng, 4, 3);
      const Rational y0 = sampling::random_rational(rng, 4, 3);
      if (evaluate(pow(a, k), x0, y0) != pow(evaluate(a, x0, y0), k)) return false;
    }
    return true;
  });
  s.check("canonical JSON is independent of term order", [] {
    Rng rng(104);
    for (int i = 0; i < 50; ++i) {
      const BiPoly a = sampling::random_bipoly(rng);
      std::vector<BiPoly::Term> terms = a.terms();
      std::reverse(terms.begin(), terms.end());
      if (to_json(BiPoly::from_terms(terms)).dump() != to_json(a).dump()) return false;
      if (bipoly_from_json(json::parse(to_json(a).dump())) != a) return false;
    }
    return true;
  });
  s.check("subgraph sum equals deletion-contraction on 200 random multigraphs", [] {
    Rng rng(105);
    for (int i = 0; i < 200; ++i) {
      const MultiGraph g = sampling::random_connected_multigraph(rng, 7, 10);
      if (tutte_subgraph_sum(g) != tutte_del_con(g)) return false;
    }
    return true;
  });
  s.check("one-point join multiplies Tutte polynomials (100 random pairs)", [] {
    Rng rng(106);
    for (int i = 0; i < 100; ++i) {
      const MultiGraph g = sampling::random_connected_multigraph(rng, 5, 6);
      const MultiGraph h = sampling::random_connected_multigraph(rng, 5, 6);
      const auto u = static_cast<VertexId>(rng.below(g.num_vertices()));
      const auto v = static_cast<VertexId>(rng.below(h.num_vertices()));
      if (tutte_subgraph_sum(one_point_join(g, u, h, v)) !=
          tutte_subgraph_sum(g) * tutte_subgraph_sum(h)) {
        return false;
      }
    }
    return true;
  });
  s.check("T(1,1), T(1,2), T(2,2) match matrix-tree, enumeration and 2^|E|", [] {
    Rng rng(107);
    for (int i = 0; i < 50; ++i) {
      const MultiGraph g = sampling::random_connected_multigraph(rng, 7, 11);
      const BiPoly t = tutte_subgraph_sum(g);
      if (evaluate(t, 1, 1) != spanning_tree_count_matrix(g)) return false;
      if (evaluate(t, 1, 2) != cssg_count_brute(g)) return false;
      if (evaluate(t, 2, 2) != pow(BigInt(2), g.num_edges())) return false;
    }
    return true;
  });
  s.check("q^n(G) T(1,1/q) is a polynomial and recombines to the reliability", [] {
    Rng rng(108);
    for (int i = 0; i < 50; ++i) {
      const MultiGraph g = sampling::random_connected_multigraph(rng, 7, 11);
      const GraphMetrics m = metrics(g);
      const UniPoly in_q = reciprocal_transform(partial_eval_x(tutte_subgraph_sum(g), 1),
                                                static_cast<std::uint32_t>(m.nullity));
      if (substitute_one_minus(in_q, Variable::p).shifted(m.rank) != reliability_brute(g)) {
        return false;
      }
    }
    return true;
  });
  s.check("Potts conversion equals subset enumeration (50 graphs, 5 points each)", [] {
    Rng rng(109);
    for (int i = 0; i < 50; ++i) {
      const MultiGraph g = sampling::random_multigraph(rng, 7, 10);
      const BiPoly t = tutte_subgraph_sum(g);
      const GraphMetrics m = metrics(g);
      const TutteEvaluator tutte_at = [&](const Rational& x0, const Rational& y0) {
        return evaluate(t, x0, y0);
      };
      for (int j = 0; j < 5; ++j) {
        const Rational q = sampling::random_rational(rng);
        const Rational v = sampling::random_nonzero_rational(rng);
        if (potts_partition(tutte_at, m.components, g.num_vertices(), q, v) !=
            potts_partition_brute(g, q, v)) {
          return false;
        }
      }
    }
    return true;
  });
}

const char* status_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

}  // namespace

std::vector<CheckResult> run_checks(Scope scope, unsigned max_n, const Settings& settings) {
  std::vector<CheckResult> out;
  if (scope == Scope::polys || scope == Scope::all) {
    Suite s(out, "polys", settings);
    poly_checks(s);
  }
  if (scope == Scope::farey || scope == Scope::all) {
    Suite s(out, "farey", settings);
    farey_checks(s, max_n);
  }
  if (scope == Scope::koch || scope == Scope::all) {
    Suite s(out, "koch", settings);
    koch_checks(s, max_n);
  }
  if (scope == Scope::exp || scope == Scope::all) {
    Suite s(out, "exp", settings);
    exp_checks(s, max_n);
  }
  return out;
}

Output cmd_verify(Scope scope, unsigned max_n, const Settings& settings) {
  const std::vector<CheckResult> results = run_checks(scope, max_n, settings);
  std::ostringstream text;
  json checks = json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : results) {
    ++counts[static_cast<int>(r.status)];
    text << status_label(r.status) << "  " << r.scope << "  " << r.name;
    if (!r.detail.empty()) text << "  (" << r.detail << ")";
    text << '\n';
    checks.push_back({{"scope", r.scope},
                      {"name", r.name},
                      {"status", status_label(r.status)},
                      {"detail", r.detail}});
  }
  const std::size_t passed = counts[0], failed = counts[1], skipped = counts[2];
  text << (failed == 0 ? "PASS" : "FAIL") << "  summary: " << passed << " passed, " << failed
       << " failed, " << skipped << " skipped\n";
  Output out{text.str(),
             {{"checks", std::move(checks)},
              {"passed", passed},
              {"failed", failed},
              {"skipped", skipped}},
             failed == 0 ? kExitOk : kExitCheckFailed};
  return out;
}

}  // namespace tuttekit::cli
