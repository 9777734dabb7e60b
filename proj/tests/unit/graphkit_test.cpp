#include <gtest/gtest.h>

#include <sstream>

#include "tuttekit/errors.hpp"
#include "tuttekit/generators.hpp"
#include "tuttekit/graph.hpp"
#include "tuttekit/graph_io.hpp"
#include "tuttekit/oracle.hpp"
#include "tuttekit/sampling.hpp"

namespace tuttekit {
namespace {

using sampling::Rng;

const MultiGraph kEdge(2, {{0, 1}});
const MultiGraph kTriangle(3, {{0, 1}, {1, 2}, {0, 2}});

TEST(MultiGraph, RejectsOutOfRangeEndpoints) {
  EXPECT_THROW(MultiGraph(2, {{0, 2}}), DomainError);
  MultiGraph g(1);
  EXPECT_THROW(g.add_edge(0, 1), DomainError);
  g.add_edge(0, 0);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(FareyGraph, Sizes) {
  const MarkedGraph g0 = farey_graph(0);
  EXPECT_EQ(g0.graph.num_vertices(), 2u);
  EXPECT_EQ(g0.graph.num_edges(), 1u);
  EXPECT_EQ(g0.graph.edges()[0], (Edge{g0.mark_x, g0.mark_y}));
  EXPECT_FALSE(g0.mark_z.has_value());

  const MarkedGraph g1 = farey_graph(1);
  EXPECT_EQ(g1.graph.num_vertices(), 3u);
  EXPECT_EQ(g1.graph.num_edges(), 3u);
  EXPECT_TRUE(g1.mark_z.has_value());

  const MarkedGraph g3 = farey_graph(3);
  EXPECT_EQ(g3.graph.num_vertices(), 9u);
  EXPECT_EQ(g3.graph.num_edges(), 15u);
}

TEST(FareyGraph, SizesHoldUpToCap) {
  for (unsigned n = 0; n <= 20; ++n) {
    const MarkedGraph g = farey_graph(n);
    EXPECT_EQ(g.graph.num_vertices(), (1u << n) + 1) << n;
    EXPECT_EQ(g.graph.num_edges(), (std::size_t{2} << n) - 1) << n;
    // The newest edge joins the outer hubs.
    EXPECT_EQ(g.graph.edges().back(), (Edge{g.mark_x, g.mark_y})) << n;
    EXPECT_NE(g.mark_x, g.mark_y);
    if (g.mark_z) {
      EXPECT_NE(*g.mark_z, g.mark_x);
      EXPECT_NE(*g.mark_z, g.mark_y);
    }
  }
  EXPECT_THROW(farey_graph(21), BudgetExceeded);
}

TEST(FareyGraph, AlternativeConstructionAgrees) {
  EXPECT_EQ(farey_graph_alt(0).num_vertices(), 2u);
  EXPECT_EQ(farey_graph_alt(0).num_edges(), 1u);
  EXPECT_EQ(metrics(farey_graph_alt(1)), metrics(kTriangle));
  EXPECT_EQ(farey_graph_alt(1).num_edges(), 3u);
  const MultiGraph alt2 = farey_graph_alt(2);
  EXPECT_EQ(alt2.num_vertices(), 5u);
  EXPECT_EQ(alt2.num_edges(), 7u);

  for (unsigned n = 0; n <= 12; ++n) {
    const MultiGraph alt = farey_graph_alt(n);
    const MultiGraph rec = farey_graph(n).graph;
    EXPECT_EQ(alt.num_vertices(), rec.num_vertices());
    EXPECT_EQ(alt.num_edges(), rec.num_edges());
    EXPECT_EQ(metrics(alt), metrics(rec));
  }
  for (unsigned n = 0; n <= 3; ++n) {
    EXPECT_EQ(tutte_subgraph_sum(farey_graph_alt(n)), tutte_subgraph_sum(farey_graph(n).graph))
        << n;
  }
}

TEST(KochGraph, Sizes) {
  const MarkedGraph k10 = koch_graph(1, 0);
  EXPECT_EQ(k10.graph.num_vertices(), 3u);
  EXPECT_EQ(k10.graph.num_edges(), 3u);
  EXPECT_EQ(koch_graph(1, 1).graph.num_vertices(), 9u);
  EXPECT_EQ(koch_graph(1, 1).graph.num_edges(), 12u);
  EXPECT_EQ(koch_graph(2, 1).graph.num_vertices(), 15u);
  EXPECT_EQ(koch_graph(2, 1).graph.num_edges(), 21u);

  for (unsigned m = 1; m <= 4; ++m) {
    std::uint64_t copies = 1;
    for (unsigned n = 0; n <= 5; ++n, copies *= 3 * m + 1) {
      const MarkedGraph k = koch_graph(m, n);
      EXPECT_EQ(k.graph.num_vertices(), 2 * copies + 1);
      EXPECT_EQ(k.graph.num_edges(), 3 * copies);
      EXPECT_EQ(metrics(k.graph).components, 1u);
    }
  }
  EXPECT_THROW(koch_graph(1, 20), BudgetExceeded);
  EXPECT_THROW(koch_graph(0, 1), DomainError);
}

TEST(ExpGraph, Sizes) {
  EXPECT_EQ(metrics(exp_graph(0)), metrics(kTriangle));
  EXPECT_EQ(exp_graph(1).num_vertices(), 9u);
  EXPECT_EQ(exp_graph(1).num_edges(), 12u);
  EXPECT_EQ(exp_graph(2).num_vertices(), 27u);
  EXPECT_EQ(exp_graph(2).num_edges(), 39u);

  std::uint64_t pow3 = 3;
  for (unsigned n = 0; n <= 10; ++n, pow3 *= 3) {
    const MultiGraph s = exp_graph(n);
    EXPECT_EQ(s.num_vertices(), pow3);
    EXPECT_EQ(s.num_edges(), 3 * (pow3 - 1) / 2);
    EXPECT_EQ(metrics(s).components, 1u);
  }
  EXPECT_THROW(exp_graph(20), BudgetExceeded);
}

TEST(Generators, AreDeterministic) {
  auto dump = [](const MultiGraph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
  };
  EXPECT_EQ(dump(farey_graph(6).graph), dump(farey_graph(6).graph));
  EXPECT_EQ(dump(farey_graph_alt(6)), dump(farey_graph_alt(6)));
  EXPECT_EQ(dump(koch_graph(2, 3).graph), dump(koch_graph(2, 3).graph));
  EXPECT_EQ(dump(exp_graph(4)), dump(exp_graph(4)));
}

TEST(OnePointJoin, Examples) {
  const MultiGraph path = one_point_join(kEdge, 1, kEdge, 0);
  EXPECT_EQ(path, MultiGraph(3, {{0, 1}, {1, 2}}));

  const MultiGraph tri_edge = one_point_join(kTriangle, 2, kEdge, 0);
  EXPECT_EQ(tri_edge.num_vertices(), 4u);
  EXPECT_EQ(tri_edge.num_edges(), 4u);

  const MultiGraph bowtie = one_point_join(kTriangle, 0, kTriangle, 0);
  EXPECT_EQ(bowtie.num_vertices(), 5u);
  EXPECT_EQ(bowtie.num_edges(), 6u);

  EXPECT_THROW(one_point_join(kEdge, 2, kEdge, 0), DomainError);
  EXPECT_THROW(one_point_join(kEdge, 0, kEdge, 5), DomainError);
}

TEST(Metrics, Examples) {
  EXPECT_EQ(metrics(kEdge), (GraphMetrics{1, 1, 0}));
  EXPECT_EQ(metrics(kTriangle), (GraphMetrics{1, 2, 1}));
  EXPECT_EQ(metrics(MultiGraph(2, {{1, 1}})), (GraphMetrics{2, 0, 1}));
  EXPECT_EQ(metrics(MultiGraph()), (GraphMetrics{0, 0, 0}));
}

TEST(GraphkitProperty, JoinIsAdditiveOnMetrics) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = sampling::random_multigraph(rng, 6, 8);
    const MultiGraph h = sampling::random_multigraph(rng, 6, 8);
    const VertexId u = static_cast<VertexId>(rng.below(g.num_vertices()));
    const VertexId v = static_cast<VertexId>(rng.below(h.num_vertices()));
    const GraphMetrics mg = metrics(g);
    const GraphMetrics mh = metrics(h);
    const GraphMetrics mj = metrics(one_point_join(g, u, h, v));
    EXPECT_EQ(mj.components, mg.components + mh.components - 1);
    EXPECT_EQ(mj.rank, mg.rank + mh.rank);
    EXPECT_EQ(mj.nullity, mg.nullity + mh.nullity);
  }
}

TEST(GraphkitProperty, MetricsIgnoreEdgeOrder) {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = sampling::random_multigraph(rng, 8, 12);
    std::vector<Edge> edges = g.edges();
    for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.below(i)]);
    const GraphMetrics m = metrics(g);
    EXPECT_EQ(metrics(MultiGraph(g.num_vertices(), edges)), m);
    EXPECT_EQ(m.components + m.rank, g.num_vertices());
  }
}

TEST(EdgeList, RoundTrip) {
  const MarkedGraph g = farey_graph(3);
  std::stringstream buffer;
  write_edge_list(buffer, g);
  const EdgeListFile back = read_edge_list(buffer);
  EXPECT_EQ(back.graph, g.graph);
  EXPECT_EQ(back.marks, (std::vector<VertexId>{g.mark_x, g.mark_y, *g.mark_z}));

  std::stringstream plain;
  write_edge_list(plain, kTriangle);
  EXPECT_EQ(plain.str(), "3 3\n0 1\n1 2\n0 2\n");
  EXPECT_TRUE(read_edge_list(plain).marks.empty());
}

TEST(EdgeList, MalformedInput) {
  std::istringstream short_list("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_list), DomainError);
  std::istringstream bad_vertex("2 1\n0 3\n");
  EXPECT_THROW(read_edge_list(bad_vertex), DomainError);
  std::istringstream garbage("two one\n");
  EXPECT_THROW(read_edge_list(garbage), DomainError);
}

}  // namespace
}  // namespace tuttekit
