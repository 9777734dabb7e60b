#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tuttekit {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled multigraph on vertices [0, num_vertices). Loops and parallel
/// edges are allowed; edge order is part of the value.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Throws DomainError if an edge endpoint is out of range.
  explicit MultiGraph(std::uint32_t num_vertices, std::vector<Edge> edges = {});

  std::uint32_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  VertexId add_vertex() { return num_vertices_++; }
  void add_edge(VertexId u, VertexId v);

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::uint32_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

/// A graph with its special (hub) vertices.
struct MarkedGraph {
  MultiGraph graph;
  VertexId mark_x = 0;
  VertexId mark_y = 0;
  std::optional<VertexId> mark_z;

  friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;
};

struct GraphMetrics {
  std::uint32_t components = 0;
  std::uint32_t rank = 0;
  std::uint64_t nullity = 0;

  friend bool operator==(const GraphMetrics&, const GraphMetrics&) = default;
};

/// Components, rank |V|-k and nullity |E|-rank. A loop touches one vertex.
GraphMetrics metrics(const MultiGraph& g);

/// Disjoint union of g and h with h's vertex v identified with g's vertex u.
/// g keeps its ids; h's remaining vertices follow in order.
MultiGraph one_point_join(const MultiGraph& g, VertexId u, const MultiGraph& h, VertexId v);

/// Union-find with union by size and path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::uint32_t n);
  VertexId find(VertexId v);
  /// Returns true if the two sets were distinct.
  bool unite(VertexId a, VertexId b);
  std::uint32_t count() const noexcept { return count_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> size_;
  std::uint32_t count_;
};

}  // namespace tuttekit
