#pragma once

#include <cstddef>
#include <cstdint>

namespace tuttekit {

/// Resource caps shared by the library. Every expensive operation takes a
/// `Limits` and throws `BudgetExceeded` instead of running away.
struct Limits {
  /// Maximum (degX+1)*(degY+1) of an expanded power.
  std::uint64_t pow_cells = 10'000'000;
  /// Largest generation for full-polynomial Farey recursions.
  unsigned farey_poly_max_n = 10;
  /// Largest generation accepted by the Farey graph generators.
  unsigned farey_graph_max_n = 20;
  /// Largest generation for point-evaluated Farey recursions.
  unsigned farey_eval_max_n = 64;
  /// Largest generation for the univariate closed forms.
  unsigned farey_closed_form_max_n = 16;
  /// Vertex cap for every graph generator.
  std::uint64_t vertex_cap = 2'000'000;
  /// Edge cap for brute-force subset enumeration.
  unsigned subset_max_edges = 25;
  /// Edge cap for deletion-contraction.
  unsigned delcon_max_edges = 40;
  /// Recursion-node cap for deletion-contraction.
  std::uint64_t delcon_max_nodes = 100'000'000;
  /// Vertex cap for the matrix-tree determinant.
  std::uint64_t matrix_tree_max_vertices = 5000;
  /// Size (in bits) above which a CountForm is not rendered as digits.
  std::uint64_t render_max_bits = 1'000'000;
};

}  // namespace tuttekit
