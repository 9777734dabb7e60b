#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tuttekit/bipoly.hpp"
#include "tuttekit/graph.hpp"
#include "tuttekit/rational.hpp"

namespace tuttekit::sampling {

// Deterministic generator; modulo reduction keeps draws identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(hi - lo + 1)); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Random rational num/den with |num| <= max_num, 1 <= den <= max_den.
inline Rational random_rational(Rng& rng, long max_num = 9, long max_den = 7) {
  return make_rational(rng.between(-max_num, max_num), rng.between(1, max_den));
}

inline Rational random_nonzero_rational(Rng& rng, long max_num = 9, long max_den = 7) {
  Rational r;
  do {
    r = random_rational(rng, max_num, max_den);
  } while (r == 0);
  return r;
}

inline BiPoly random_bipoly(Rng& rng, std::uint32_t max_deg = 4, std::size_t max_terms = 6,
                            long max_coeff = 20) {
  std::vector<BiPoly::Term> terms;
  const std::size_t count = rng.below(max_terms + 1);
  for (std::size_t i = 0; i < count; ++i) {
    terms.push_back({static_cast<std::uint32_t>(rng.below(max_deg + 1)),
                     static_cast<std::uint32_t>(rng.below(max_deg + 1)),
                     BigInt(rng.between(-max_coeff, max_coeff))});
  }
  return BiPoly::from_terms(std::move(terms));
}

// Connected multigraph: a random spanning tree plus extra edges, which may be
// loops or parallels; the edge list is shuffled.
inline MultiGraph random_connected_multigraph(Rng& rng, std::uint32_t max_vertices,
                                              std::uint32_t max_edges) {
  const std::uint32_t vertex_limit = std::min(max_vertices, max_edges + 1);
  const auto vertices = static_cast<std::uint32_t>(rng.between(1, vertex_limit));
  std::vector<Edge> edges;
  for (VertexId v = 1; v < vertices; ++v) {
    edges.push_back({static_cast<VertexId>(rng.below(v)), v});
  }
  const auto total = static_cast<std::uint32_t>(rng.between(vertices - 1, max_edges));
  while (edges.size() < total) {
    edges.push_back({static_cast<VertexId>(rng.below(vertices)),
                     static_cast<VertexId>(rng.below(vertices))});
  }
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.below(i)]);
  return MultiGraph(vertices, std::move(edges));
}

// Arbitrary multigraph, possibly disconnected, with isolated vertices.
inline MultiGraph random_multigraph(Rng& rng, std::uint32_t max_vertices,
                                    std::uint32_t max_edges) {
  const auto vertices = static_cast<std::uint32_t>(rng.between(1, max_vertices));
  const auto count = static_cast<std::uint32_t>(rng.between(0, max_edges));
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < count; ++i) {
    edges.push_back({static_cast<VertexId>(rng.below(vertices)),
                     static_cast<VertexId>(rng.below(vertices))});
  }
  return MultiGraph(vertices, std::move(edges));
}

}  // namespace tuttekit::sampling
