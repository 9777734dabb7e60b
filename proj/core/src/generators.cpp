#include "tuttekit/generators.hpp"

#include <string>
#include <vector>

#include "saturating.hpp"
#include "tuttekit/errors.hpp"

namespace tuttekit {

namespace {

// base^exp saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) acc = detail::saturating_mul(acc, base);
  return acc;
}

void check_vertices(std::uint64_t needed, const Limits& limits, const char* what) {
  if (needed > limits.vertex_cap) {
    throw BudgetExceeded(std::string(what) + " needs " + std::to_string(needed) +
                         " vertices, cap is " + std::to_string(limits.vertex_cap));
  }
}

void check_farey(unsigned n, const Limits& limits) {
  if (n > limits.farey_graph_max_n) {
    throw BudgetExceeded("Farey generation " + std::to_string(n) + " exceeds cap " +
                         std::to_string(limits.farey_graph_max_n));
  }
  check_vertices(saturating_pow(2, n) + 1, limits, "Farey graph");
}

}  // namespace

MarkedGraph farey_graph(unsigned n, const Limits& limits) {
  check_farey(n, limits);
  MarkedGraph cur{MultiGraph(2, {{0, 1}}), 0, 1, std::nullopt};
  for (unsigned step = 1; step <= n; ++step) {
    const MultiGraph& prev = cur.graph;
    const std::uint32_t offset = prev.num_vertices();
    const VertexId hub_x = cur.mark_x;
    const VertexId hub_y = cur.mark_y;
    // Copy-2 ids: its X hub becomes copy 1's Y hub, the rest shift past copy 1.
    auto copy2 = [&](VertexId w) -> VertexId {
      if (w == hub_x) return hub_y;
      return offset + (w < hub_x ? w : w - 1);
    };
    MultiGraph next(2 * offset - 1);
    for (const auto& e : prev.edges()) next.add_edge(e.u, e.v);
    for (const auto& e : prev.edges()) next.add_edge(copy2(e.u), copy2(e.v));
    const VertexId new_y = copy2(hub_y);
    next.add_edge(hub_x, new_y);
    cur = MarkedGraph{std::move(next), hub_x, new_y, hub_y};
  }
  return cur;
}

MultiGraph farey_graph_alt(unsigned n, const Limits& limits) {
  check_farey(n, limits);
  MultiGraph g(2, {{0, 1}});
  std::vector<Edge> fresh{{0, 1}};
  for (unsigned step = 1; step <= n; ++step) {
    std::vector<Edge> spawned;
    spawned.reserve(2 * fresh.size());
    for (const auto& e : fresh) {
      const VertexId w = g.add_vertex();
      g.add_edge(e.u, w);
      g.add_edge(e.v, w);
      spawned.push_back({e.u, w});
      spawned.push_back({e.v, w});
    }
    fresh = std::move(spawned);
  }
  return g;
}

MarkedGraph koch_graph(unsigned m, unsigned n, const Limits& limits) {
  if (m == 0) throw DomainError("Koch parameter m must be positive");
  const std::uint64_t copies = 3ull * m + 1;
  const std::uint64_t blocks = saturating_pow(copies, n);
  const std::uint64_t needed = detail::saturating_add(detail::saturating_mul(blocks, 2), 1);
  check_vertices(needed, limits, "Koch network");

  MarkedGraph cur{MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}}), 0, 1, VertexId{2}};
  for (unsigned step = 1; step <= n; ++step) {
    const MultiGraph prev = cur.graph;
    const VertexId hubs[3] = {cur.mark_x, cur.mark_y, *cur.mark_z};
    const VertexId attach = cur.mark_x;  // hub of each peripheral copy that is merged
    MultiGraph& next = cur.graph;
    for (unsigned c = 0; c < 3 * m; ++c) {
      const VertexId target = hubs[c / m];
      const std::uint32_t offset = next.num_vertices();
      for (std::uint32_t i = 1; i < prev.num_vertices(); ++i) next.add_vertex();
      auto rename = [&](VertexId w) -> VertexId {
        if (w == attach) return target;
        return offset + (w < attach ? w : w - 1);
      };
      for (const auto& e : prev.edges()) next.add_edge(rename(e.u), rename(e.v));
    }
  }
  return cur;
}

MultiGraph exp_graph(unsigned n, const Limits& limits) {
  check_vertices(saturating_pow(3, n + 1), limits, "exponential network");
  MultiGraph g(3, {{0, 1}, {1, 2}, {2, 0}});
  for (unsigned step = 1; step <= n; ++step) {
    const std::uint32_t existing = g.num_vertices();
    for (VertexId v = 0; v < existing; ++v) {
      const VertexId a = g.add_vertex();
      const VertexId b = g.add_vertex();
      g.add_edge(v, a);
      g.add_edge(v, b);
      g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace tuttekit
