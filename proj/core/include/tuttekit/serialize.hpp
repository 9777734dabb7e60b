#pragma once

#include <nlohmann/json.hpp>

#include "tuttekit/bipoly.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/graph.hpp"
#include "tuttekit/unipoly.hpp"

namespace tuttekit {

// JSON shapes (numbers as decimal strings, never floats):
//   BiPoly       {"vars": ["x","y"], "terms": [[degX, degY, "coeff"], ...]}
//   UniPoly      {"var": "lambda", "terms": [[degree, "num/den"], ...]}
//   PowerForm    {"base": <BiPoly>, "exponent": "decimal"}
//   CountForm    {"base": "decimal", "exponent": "decimal"}
//   UniPowerForm {"prefactor": <UniPoly>, "base": <UniPoly>, "exponent": "decimal"}
//   MultiGraph   {"numVertices": V, "edges": [[u, v], ...]}
//   MarkedGraph  MultiGraph fields plus "marks": {"X": id, "Y": id[, "Z": id]}
//
// The readers throw DomainError on malformed documents.

nlohmann::json to_json(const BiPoly& p);
nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const PowerForm& pf);
nlohmann::json to_json(const CountForm& cf);
nlohmann::json to_json(const UniPowerForm& pf);
nlohmann::json to_json(const MultiGraph& g);
nlohmann::json to_json(const MarkedGraph& g);

BiPoly bipoly_from_json(const nlohmann::json& j);
UniPoly unipoly_from_json(const nlohmann::json& j);
PowerForm powerform_from_json(const nlohmann::json& j);
CountForm countform_from_json(const nlohmann::json& j);
UniPowerForm unipowerform_from_json(const nlohmann::json& j);
MultiGraph graph_from_json(const nlohmann::json& j);
MarkedGraph marked_graph_from_json(const nlohmann::json& j);

}  // namespace tuttekit
