#include <gtest/gtest.h>

#include <set>

#include "tuttekit/errors.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/generators.hpp"
#include "tuttekit/oracle.hpp"
#include "tuttekit/sampling.hpp"

namespace tuttekit {
namespace {

using sampling::Rng;

const BiPoly kX = BiPoly::x();
const BiPoly kY = BiPoly::y();
const BiPoly kTriangleTutte = kX * kX + kX + kY;

const MultiGraph kEdge(2, {{0, 1}});
const MultiGraph kLoop(1, {{0, 0}});
const MultiGraph kPath3(3, {{0, 1}, {1, 2}});
const MultiGraph kTriangle(3, {{0, 1}, {1, 2}, {0, 2}});
const MultiGraph kBowtie(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
const MultiGraph kK4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

TEST(SubsetIterator, VisitsEveryMaskOnce) {
  std::set<std::uint32_t> seen;
  for (SubsetIterator it(5); !it.done(); it.next()) seen.insert(it.mask());
  EXPECT_EQ(seen.size(), 32u);
  EXPECT_EQ(*seen.rbegin(), 31u);

  SubsetIterator empty(0);
  EXPECT_EQ(empty.total(), 1u);
  EXPECT_THROW(SubsetIterator(26), BudgetExceeded);
  EXPECT_THROW(SubsetIterator(12, 10), BudgetExceeded);
}

TEST(TutteSubgraphSum, Examples) {
  EXPECT_EQ(tutte_subgraph_sum(kEdge), kX);
  EXPECT_EQ(tutte_subgraph_sum(kLoop), kY);
  EXPECT_EQ(tutte_subgraph_sum(kTriangle), kTriangleTutte);
  EXPECT_EQ(tutte_subgraph_sum(MultiGraph(4)), BiPoly(1));
}

TEST(TutteSubgraphSum, RefusesLargeGraphs) {
  EXPECT_THROW(tutte_subgraph_sum(farey_graph(4).graph), BudgetExceeded);
}

TEST(TutteDelCon, Examples) {
  EXPECT_EQ(tutte_del_con(kPath3), kX * kX);
  EXPECT_EQ(tutte_del_con(kTriangle), kTriangleTutte);
  EXPECT_EQ(tutte_del_con(kBowtie), kTriangleTutte * kTriangleTutte);
  // Two parallel edges: x + y.
  EXPECT_EQ(tutte_del_con(MultiGraph(2, {{0, 1}, {1, 0}})), kX + kY);
}

TEST(TutteDelCon, RespectsBudgets) {
  Limits small;
  small.delcon_max_nodes = 50;
  EXPECT_THROW(tutte_del_con(farey_graph(3).graph, small), BudgetExceeded);
  EXPECT_THROW(tutte_del_con(farey_graph(5).graph), BudgetExceeded);  // 63 edges
}

TEST(SpanningTreeCountMatrix, Examples) {
  EXPECT_EQ(spanning_tree_count_matrix(kTriangle), 3);
  EXPECT_EQ(spanning_tree_count_matrix(kK4), 16);
  EXPECT_EQ(spanning_tree_count_matrix(farey_graph(2).graph), 21);
  EXPECT_EQ(spanning_tree_count_matrix(MultiGraph(2, {{0, 1}, {0, 1}, {1, 1}})), 2);
  EXPECT_EQ(spanning_tree_count_matrix(MultiGraph(1)), 1);
  EXPECT_THROW(spanning_tree_count_matrix(MultiGraph(3, {{0, 1}})), DomainError);
}

TEST(CssgCountBrute, Examples) {
  EXPECT_EQ(cssg_count_brute(kEdge), 1);
  EXPECT_EQ(cssg_count_brute(kTriangle), 4);
  EXPECT_EQ(cssg_count_brute(farey_graph(2).graph), 48);
}

TEST(ReliabilityBrute, Examples) {
  EXPECT_EQ(reliability_brute(kEdge), UniPoly::monomial(Variable::p, 1));
  EXPECT_EQ(reliability_brute(kTriangle),
            UniPoly::from_coeffs(Variable::p, {{2, 3}, {3, -2}}));
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiGraph g = sampling::random_connected_multigraph(rng, 6, 10);
    EXPECT_EQ(reliability_brute(g)(1), 1);
  }
}

TEST(ProperColoringsBrute, Examples) {
  EXPECT_EQ(proper_colorings_brute(kTriangle, 3), 6);
  EXPECT_EQ(proper_colorings_brute(kTriangle, 2), 0);
  EXPECT_EQ(proper_colorings_brute(kK4, 4), 24);
  EXPECT_EQ(proper_colorings_brute(kLoop, 5), 0);
  EXPECT_EQ(proper_colorings_brute(MultiGraph(3), 2), 8);
}

TEST(PottsPartitionBrute, Examples) {
  EXPECT_EQ(potts_partition_brute(kTriangle, 2, 1), 28);
  EXPECT_EQ(potts_partition_brute(kEdge, 3, 1), 12);
}

// ---------------------------------------------------------------------------
// Properties

TEST(OracleProperty, SubgraphSumEqualsDeletionContraction) {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = sampling::random_connected_multigraph(rng, 7, 10);
    ASSERT_EQ(tutte_subgraph_sum(g), tutte_del_con(g)) << "trial " << trial;
  }
}

TEST(OracleProperty, DisconnectedInputsAgreeToo) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = sampling::random_multigraph(rng, 7, 9);
    ASSERT_EQ(tutte_subgraph_sum(g), tutte_del_con(g)) << "trial " << trial;
  }
}

TEST(OracleProperty, SpecialEvaluations) {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = sampling::random_connected_multigraph(rng, 7, 11);
    const BiPoly t = tutte_subgraph_sum(g);
    EXPECT_EQ(evaluate(t, 1, 1), spanning_tree_count_matrix(g));
    EXPECT_EQ(evaluate(t, 1, 2), cssg_count_brute(g));
    EXPECT_EQ(evaluate(t, 2, 2), pow(BigInt(2), g.num_edges()));
  }
}

TEST(OracleProperty, ReciprocalTransformOfTutteIsAPolynomial) {
  Rng rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = sampling::random_connected_multigraph(rng, 7, 11);
    const UniPoly t1y = partial_eval_x(tutte_subgraph_sum(g), 1);
    const auto nullity = static_cast<std::uint32_t>(metrics(g).nullity);
    const UniPoly transformed = reciprocal_transform(t1y, nullity);
    EXPECT_LE(transformed.degree(), nullity);
    for (const auto& [deg, c] : transformed.coeffs()) EXPECT_GT(c, 0);
  }
}

TEST(OracleProperty, ReliabilityFromTutte) {
  // R(p) = p^r (1-p)^n' T(1, 1/(1-p)), recombined as polynomials.
  Rng rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = sampling::random_connected_multigraph(rng, 7, 11);
    const GraphMetrics m = metrics(g);
    const UniPoly t1y = partial_eval_x(tutte_subgraph_sum(g), 1);
    const UniPoly in_q = reciprocal_transform(t1y, static_cast<std::uint32_t>(m.nullity));
    const UniPoly via_tutte = substitute_one_minus(in_q, Variable::p).shifted(m.rank);
    EXPECT_EQ(via_tutte, reliability_brute(g)) << "trial " << trial;
  }
}

TEST(OracleProperty, OnePointJoinMultiplies) {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = sampling::random_connected_multigraph(rng, 5, 6);
    const MultiGraph h = sampling::random_connected_multigraph(rng, 5, 6);
    const VertexId u = static_cast<VertexId>(rng.below(g.num_vertices()));
    const VertexId v = static_cast<VertexId>(rng.below(h.num_vertices()));
    EXPECT_EQ(tutte_subgraph_sum(one_point_join(g, u, h, v)),
              tutte_subgraph_sum(g) * tutte_subgraph_sum(h));
  }
}

TEST(OracleProperty, ChromaticFromTutte) {
  // P(lambda) = (-1)^r lambda^k T(1 - lambda, 0), checked against colourings.
  Rng rng(48);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiGraph g = sampling::random_connected_multigraph(rng, 6, 9);
    const GraphMetrics m = metrics(g);
    const UniPoly sub = substitute_x_affine(tutte_subgraph_sum(g), 1, -1);
    const UniPoly chromatic = sub.shifted(m.components).scaled(m.rank % 2 == 0 ? 1 : -1);
    for (unsigned colors = 0; colors <= 4; ++colors) {
      EXPECT_EQ(chromatic(colors), proper_colorings_brute(g, colors));
    }
  }
}

TEST(OracleProperty, PottsFromTutte) {
  Rng rng(49);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiGraph g = sampling::random_multigraph(rng, 6, 10);
    const BiPoly t = tutte_subgraph_sum(g);
    const GraphMetrics m = metrics(g);
    const TutteEvaluator at = [&](const Rational& x0, const Rational& y0) {
      return evaluate(t, x0, y0);
    };
    for (int point = 0; point < 5; ++point) {
      const Rational q = sampling::random_rational(rng);
      const Rational v = sampling::random_nonzero_rational(rng);
      EXPECT_EQ(potts_partition(at, m.components, g.num_vertices(), q, v),
                potts_partition_brute(g, q, v));
    }
  }
}

}  // namespace
}  // namespace tuttekit
