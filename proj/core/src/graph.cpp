#include "tuttekit/graph.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "tuttekit/errors.hpp"

namespace tuttekit {

MultiGraph::MultiGraph(std::uint32_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices) {
  edges_.reserve(edges.size());
  for (const auto& e : edges) add_edge(e.u, e.v);
}

void MultiGraph::add_edge(VertexId u, VertexId v) {
  if (u >= num_vertices_ || v >= num_vertices_) {
    throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") out of range for " + std::to_string(num_vertices_) + " vertices");
  }
  edges_.push_back({u, v});
}

DisjointSets::DisjointSets(std::uint32_t n) : parent_(n), size_(n, 1), count_(n) {
  std::iota(parent_.begin(), parent_.end(), VertexId{0});
}

VertexId DisjointSets::find(VertexId v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool DisjointSets::unite(VertexId a, VertexId b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --count_;
  return true;
}

GraphMetrics metrics(const MultiGraph& g) {
  DisjointSets sets(g.num_vertices());
  for (const auto& e : g.edges()) sets.unite(e.u, e.v);
  GraphMetrics m;
  m.components = sets.count();
  m.rank = g.num_vertices() - m.components;
  m.nullity = g.num_edges() - m.rank;
  return m;
}

MultiGraph one_point_join(const MultiGraph& g, VertexId u, const MultiGraph& h, VertexId v) {
  if (u >= g.num_vertices()) throw DomainError("join vertex not in first graph");
  if (v >= h.num_vertices()) throw DomainError("join vertex not in second graph");
  const std::uint32_t offset = g.num_vertices();
  auto rename = [&](VertexId w) -> VertexId {
    if (w == v) return u;
    return offset + (w < v ? w : w - 1);
  };
  MultiGraph out(g.num_vertices() + h.num_vertices() - 1, g.edges());
  for (const auto& e : h.edges()) out.add_edge(rename(e.u), rename(e.v));
  return out;
}

}  // namespace tuttekit
