#pragma once

#include <iosfwd>
#include <vector>

#include "tuttekit/graph.hpp"

namespace tuttekit {

// Edge-list text format:
//
//   V E
//   u v        (E lines, 0-based ids)
//   # marks X Y [Z]   (marked graphs only)

void write_edge_list(std::ostream& out, const MultiGraph& g);
void write_edge_list(std::ostream& out, const MarkedGraph& g);

struct EdgeListFile {
  MultiGraph graph;
  std::vector<VertexId> marks;  // empty when the file carries no marks line
};

/// Throws DomainError on malformed input.
EdgeListFile read_edge_list(std::istream& in);

}  // namespace tuttekit
