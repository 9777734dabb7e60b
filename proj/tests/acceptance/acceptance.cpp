#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cli/bench.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/farey.hpp"
#include "tuttekit/generators.hpp"
#include "tuttekit/oracle.hpp"
#include "tuttekit/sampling.hpp"

namespace {

using namespace tuttekit;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Farey polynomials are shared by several criteria; the n=8 build time feeds
// the performance floor.
class FareyCache {
 public:
  const BiPoly& tutte(unsigned n) {
    auto it = polys_.find(n);
    if (it == polys_.end()) {
      const auto start = Clock::now();
      it = polys_.emplace(n, farey_tutte(n)).first;
      seconds_[n] = since(start);
    }
    return it->second;
  }

  double seconds(unsigned n) {
    tutte(n);
    return seconds_.at(n);
  }

 private:
  std::map<unsigned, BiPoly> polys_;
  std::map<unsigned, double> seconds_;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok(bool pass, std::string detail = {}) { return {pass, std::move(detail)}; }

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("threw: ") + e.what()};
  }
  const double elapsed = since(start);
  if (!out.pass) ++failures;
  std::printf("%s  %2d  %s  (%s%s%.2f s)\n", out.pass ? "PASS" : "FAIL", id, title,
              out.detail.c_str(), out.detail.empty() ? "" : "; ", elapsed);
  std::fflush(stdout);
}

UniPoly chromatic_from_tutte(const BiPoly& t, const GraphMetrics& m) {
  return substitute_x_affine(t, 1, -1).shifted(m.components).scaled(m.rank % 2 == 0 ? 1 : -1);
}

}  // namespace

int main() {
  FareyCache cache;

  criterion(1, "split recursion equals subgraph-sum and deletion-contraction, n<=3", [&] {
    for (unsigned n = 0; n <= 3; ++n) {
      const MultiGraph g = farey_graph(n).graph;
      const BiPoly& t = cache.tutte(n);
      const std::string at = " at n=" + std::to_string(n);
      if (t != tutte_subgraph_sum(g)) return ok(false, "subgraph sum differs" + at);
      if (t != tutte_del_con(g)) return ok(false, "deletion-contraction differs" + at);
    }
    return ok(true);
  });

  criterion(2, "spanning trees: closed form equals matrix-tree, n<=7", [&] {
    if (farey_nst(1) != 3 || farey_nst(2) != 21 || farey_nst(3) != 945) {
      return ok(false, "spot values 3, 21, 945");
    }
    for (unsigned n = 0; n <= 7; ++n) {
      if (farey_nst(n) != spanning_tree_count_matrix(farey_graph(n).graph)) {
        return ok(false, "n=" + std::to_string(n));
      }
    }
    return ok(true);
  });

  criterion(3, "connected spanning subgraphs: enumeration n<=3, T(1,2) n<=20", [&] {
    const BigInt spots[] = {4, 48, 6144};
    for (unsigned n = 1; n <= 3; ++n) {
      const BigInt brute = cssg_count_brute(farey_graph(n).graph);
      if (brute != spots[n - 1] || farey_ncssg(n) != brute) {
        return ok(false, "enumeration at n=" + std::to_string(n));
      }
    }
    for (unsigned n = 0; n <= 20; ++n) {
      if (farey_ncssg(n) != farey_eval(n, 1, 2)) {
        return ok(false, "T(1,2) at n=" + std::to_string(n));
      }
    }
    return ok(true);
  });

  criterion(4, "T(1,y) cancelled product equals the polynomial at x=1, n<=8", [&] {
    for (unsigned n = 0; n <= 8; ++n) {
      const UniPoly t1y = farey_t1y(n);
      if (t1y != partial_eval_x(cache.tutte(n), 1)) return ok(false, "n=" + std::to_string(n));
      if (t1y(2) != farey_ncssg(n)) return ok(false, "y=2 at n=" + std::to_string(n));
    }
    return ok(true);
  });

  criterion(5, "ratio recurrence and closed forms, n<=20", [&] {
    for (long y : {1L, 3L, 4L, 5L}) {
      for (unsigned n = 1; n <= 20; ++n) {
        const Rational a = farey_ratio(n, y);
        if (farey_ratio(n + 1, y) != Rational(2 + y) - Rational(2 * y) / a) {
          return ok(false, "recurrence at y=" + std::to_string(y) + " n=" + std::to_string(n));
        }
      }
    }
    for (unsigned n = 1; n <= 20; ++n) {
      if (farey_ratio(n, 2) != make_rational(2 * (n + 1), n)) {
        return ok(false, "y=2 closed form at n=" + std::to_string(n));
      }
    }
    for (long y = 1; y <= 5; ++y) {
      for (unsigned n = 1; n <= 8; ++n) {
        const Rational prev = farey_eval(n - 1, 1, y);
        if (farey_ratio(n, y) != farey_eval(n, 1, y) / (prev * prev)) {
          return ok(false, "definition at y=" + std::to_string(y) + " n=" + std::to_string(n));
        }
      }
    }
    return ok(true);
  });

  criterion(6, "chromatic closed form equals the Tutte substitution, n<=8", [&] {
    for (unsigned n = 0; n <= 8; ++n) {
      const GraphMetrics m = metrics(farey_graph(n).graph);
      if (farey_chromatic(n) != chromatic_from_tutte(cache.tutte(n), m)) {
        return ok(false, "n=" + std::to_string(n));
      }
    }
    const BigInt colourings = proper_colorings_brute(farey_graph(2).graph, 3);
    if (colourings != 6 || farey_chromatic(2)(3) != 6) return ok(false, "3-colourings of G_2");
    return ok(true);
  });

  criterion(7, "reliability: enumeration n<=3, endpoints n<=12, product form n<=8", [&] {
    for (unsigned n = 0; n <= 3; ++n) {
      if (farey_reliability(n) != reliability_brute(farey_graph(n).graph)) {
        return ok(false, "enumeration at n=" + std::to_string(n));
      }
    }
    for (unsigned n = 0; n <= 12; ++n) {
      const UniPoly r = farey_reliability(n);
      if (r(0) != 0 || r(1) != 1) return ok(false, "endpoints at n=" + std::to_string(n));
    }
    sampling::Rng rng(12);
    std::vector<Rational> points;
    while (points.size() < 5) {
      const Rational p = sampling::random_rational(rng);
      if (p != make_rational(1, 2)) points.push_back(p);
    }
    for (unsigned n = 1; n <= 8; ++n) {
      const UniPoly r = farey_reliability(n);
      for (const Rational& p : points) {
        if (farey_reliability_product_form(n, p) != r(p)) {
          return ok(false, "product form at n=" + std::to_string(n) + " p=" + p.get_str());
        }
      }
    }
    return ok(true);
  });

  criterion(8, "T(x,0) = x(x+1)^(2^n-1) equals the polynomial at y=0, n<=8", [&] {
    for (unsigned n = 0; n <= 8; ++n) {
      const BiPoly expected = BiPoly::x() * pow(BiPoly::x() + BiPoly(1), (1u << n) - 1);
      if (farey_t_x0(n) != expected || restrict_y_zero(cache.tutte(n)) != expected) {
        return ok(false, "n=" + std::to_string(n));
      }
    }
    return ok(true);
  });

  criterion(9, "Koch and exponential power forms, spanning trees and count forms", [&] {
    if (powerform_expand(koch_tutte(1, 1)) != tutte_del_con(koch_graph(1, 1).graph)) {
      return ok(false, "koch m=1 n=1 expansion");
    }
    if (powerform_expand(exp_tutte(1)) != tutte_del_con(exp_graph(1))) {
      return ok(false, "exp n=1 expansion");
    }
    if (spanning_tree_count_matrix(koch_graph(1, 1).graph) != 81 ||
        powerform_eval(koch_tutte(1, 1), 1, 1).value() != 81) {
      return ok(false, "koch m=1 n=1 spanning trees");
    }
    for (unsigned n = 0; n <= 5; ++n) {
      for (unsigned m = 1; m <= 3; ++m) {
        const BigInt copies = pow(BigInt(3 * m + 1), n);
        const PowerForm pf = koch_tutte(m, n);
        if (powerform_eval(pf, 1, 1) != CountForm{3, copies} ||
            powerform_eval(pf, 1, 2) != CountForm{4, copies} ||
            powerform_eval(pf, 2, 1) != CountForm{7, copies}) {
          return ok(false, "koch counts at m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
      }
      const BigInt triangles = (pow(BigInt(3), n + 1) - 1) / 2;
      const PowerForm pf = exp_tutte(n);
      if (powerform_eval(pf, 1, 1) != CountForm{3, triangles} ||
          powerform_eval(pf, 1, 2) != CountForm{4, triangles} ||
          powerform_eval(pf, 2, 1) != CountForm{7, triangles}) {
        return ok(false, "exp counts at n=" + std::to_string(n));
      }
    }
    return ok(true);
  });

  criterion(10, "one-point join multiplies Tutte polynomials, 100 random pairs", [&] {
    sampling::Rng rng(10);
    for (int trial = 0; trial < 100; ++trial) {
      const MultiGraph g = sampling::random_connected_multigraph(rng, 6, 6);
      const MultiGraph h = sampling::random_connected_multigraph(rng, 6, 6);
      const auto u = static_cast<VertexId>(rng.below(g.num_vertices()));
      const auto v = static_cast<VertexId>(rng.below(h.num_vertices()));
      if (tutte_subgraph_sum(one_point_join(g, u, h, v)) !=
          tutte_subgraph_sum(g) * tutte_subgraph_sum(h)) {
        return ok(false, "trial " + std::to_string(trial));
      }
    }
    return ok(true);
  });

  criterion(11, "Potts partition from Tutte equals the subset sum, 50 graphs x 5 points", [&] {
    sampling::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const MultiGraph g = sampling::random_multigraph(rng, 8, 10);
      const BiPoly t = tutte_subgraph_sum(g);
      const GraphMetrics m = metrics(g);
      const TutteEvaluator at = [&](const Rational& x0, const Rational& y0) {
        return evaluate(t, x0, y0);
      };
      for (int point = 0; point < 5; ++point) {
        const Rational q = sampling::random_rational(rng);
        const Rational v = sampling::random_nonzero_rational(rng);
        if (potts_partition(at, m.components, g.num_vertices(), q, v) !=
            potts_partition_brute(g, q, v)) {
          return ok(false, "trial " + std::to_string(trial));
        }
      }
    }
    return ok(true);
  });

  criterion(12, "performance floor", [&] {
    const double tutte8 = cache.seconds(8);
    const auto start = Clock::now();
    const Rational trees16 = farey_eval(16, 1, 1);
    const double eval16 = since(start);
    const cli::BenchReport bench = cli::run_bench({cli::Family::farey, 3, std::nullopt}, 5, {});
    const double speedup = bench.speedup().value_or(0);

    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "farey_tutte(8) %.2f s < 60, farey_eval(16,1,1) %.3f s < 10, "
                  "speedup %.0fx >= 100",
                  tutte8, eval16, speedup);
    return ok(tutte8 < 60 && eval16 < 10 && trees16 == farey_nst(16) && speedup >= 100, detail);
  });

  std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
