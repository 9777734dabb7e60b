#include "tuttekit/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tuttekit/errors.hpp"

namespace tuttekit {

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(std::ostream& out, const MarkedGraph& g) {
  write_edge_list(out, g.graph);
  out << "# marks " << g.mark_x << ' ' << g.mark_y;
  if (g.mark_z) out << ' ' << *g.mark_z;
  out << '\n';
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

EdgeListFile read_edge_list(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw DomainError("edge list: missing header");
  std::istringstream header(line);
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  if (!(header >> vertices >> edges) || vertices > UINT32_MAX) {
    throw DomainError("edge list: bad header '" + line + "'");
  }

  EdgeListFile file;
  file.graph = MultiGraph(static_cast<std::uint32_t>(vertices));
  for (std::uint64_t i = 0; i < edges; ++i) {
    if (!next_content_line(in, line)) throw DomainError("edge list: truncated");
    std::istringstream row(line);
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!(row >> u >> v) || u >= vertices || v >= vertices) {
      throw DomainError("edge list: bad edge '" + line + "'");
    }
    file.graph.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  while (next_content_line(in, line)) {
    std::istringstream row(line);
    std::string hash, keyword;
    row >> hash >> keyword;
    if (hash != "#") throw DomainError("edge list: trailing data '" + line + "'");
    if (keyword != "marks") continue;
    std::uint64_t id = 0;
    while (row >> id) {
      if (id >= vertices) throw DomainError("edge list: mark out of range");
      file.marks.push_back(static_cast<VertexId>(id));
    }
  }
  return file;
}

}  // namespace tuttekit
