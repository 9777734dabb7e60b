#pragma once

#include <cstdint>

#include "tuttekit/bipoly.hpp"
#include "tuttekit/graph.hpp"
#include "tuttekit/limits.hpp"
#include "tuttekit/unipoly.hpp"

namespace tuttekit {

/// Walks every edge subset of a graph exactly once, as bit masks.
class SubsetIterator {
 public:
  static constexpr unsigned kMaxEdges = 25;

  /// Throws BudgetExceeded when edge_count > min(kMaxEdges, max_edges).
  explicit SubsetIterator(std::size_t edge_count, unsigned max_edges = kMaxEdges);

  bool done() const noexcept { return cursor_ >= total(); }
  std::uint32_t mask() const noexcept { return static_cast<std::uint32_t>(cursor_); }
  void next() noexcept { ++cursor_; }
  std::uint64_t total() const noexcept { return std::uint64_t{1} << edge_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

 private:
  std::size_t edge_count_;
  std::uint64_t cursor_ = 0;
};

/// Tutte polynomial as the sum over all spanning subgraphs H of
/// (x-1)^(r(G)-r(H)) (y-1)^(n(H)). At most 25 edges.
BiPoly tutte_subgraph_sum(const MultiGraph& g, const Limits& limits = {});

/// Tutte polynomial by deletion-contraction: loops give a factor y, bridges a
/// factor x (contracted), and the first remaining edge in list order is
/// branched on. Throws BudgetExceeded past `delcon_max_edges` edges or
/// `delcon_max_nodes` recursion nodes.
BiPoly tutte_del_con(const MultiGraph& g, const Limits& limits = {});

/// Number of spanning trees from a reduced Laplacian (parallel edges counted
/// with multiplicity, loops ignored), via fraction-free Bareiss elimination.
/// Throws DomainError for a disconnected graph.
BigInt spanning_tree_count_matrix(const MultiGraph& g, const Limits& limits = {});

/// Number of edge subsets whose spanning subgraph is connected.
BigInt cssg_count_brute(const MultiGraph& g, const Limits& limits = {});

/// All-terminal reliability: sum over connected spanning subsets A of
/// p^|A| (1-p)^(|E|-|A|), expanded in p.
UniPoly reliability_brute(const MultiGraph& g, const Limits& limits = {});

/// Potts partition function sum over A of q^k(A) v^|A|.
Rational potts_partition_brute(const MultiGraph& g, const Rational& q, const Rational& v,
                               const Limits& limits = {});

/// Proper vertex colourings with `colors` colours, by backtracking.
/// Loops admit no proper colouring. Capped at colors^|V| <= 2^32.
BigInt proper_colorings_brute(const MultiGraph& g, unsigned colors);

}  // namespace tuttekit
