#pragma once

#include <cstdint>

#include "tuttekit/graph.hpp"
#include "tuttekit/limits.hpp"

namespace tuttekit {

/// Farey graph G_n by the two-copy construction: copy 1 keeps its ids, copy 2
/// follows with its X hub merged into copy 1's Y hub (that vertex becomes Z),
/// and a new last edge joins the outer hubs X (copy 1's X) and Y (copy 2's Y).
/// |V| = 2^n + 1, |E| = 2^(n+1) - 1.
MarkedGraph farey_graph(unsigned n, const Limits& limits = {});

/// Farey graph by the iterative rule: every edge created in the previous
/// step receives a new vertex adjacent to both of its endpoints.
MultiGraph farey_graph_alt(unsigned n, const Limits& limits = {});

/// Koch network K_{m,n}: (3m+1)^n triangles glued at hub vertices.
///
/// K_{m,0} is a triangle with hubs X=0, Y=1, Z=2. K_{m,n} takes K_{m,n-1} as
/// the central copy (ids unchanged, its hubs stay the hubs) and appends 3m
/// peripheral copies in order; copies 1..m have their X hub merged into the
/// central X, copies m+1..2m into the central Y, copies 2m+1..3m into Z.
MarkedGraph koch_graph(unsigned m, unsigned n, const Limits& limits = {});

/// Exponential small-world network S_n: S_0 is a triangle; each step gives
/// every existing vertex (in id order) two new neighbours that form a
/// triangle with it. |V| = 3^(n+1), |E| = 3(3^(n+1) - 1)/2.
MultiGraph exp_graph(unsigned n, const Limits& limits = {});

}  // namespace tuttekit
