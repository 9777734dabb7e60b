#include "tuttekit/serialize.hpp"

#include <string>

#include "tuttekit/errors.hpp"

namespace tuttekit {

using nlohmann::json;

namespace {

// Runs a reader, turning library exceptions about shape into DomainError.
template <typename F>
auto guarded(const char* what, F&& read) {
  try {
    return read();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::uint32_t as_degree(const json& j) {
  const auto d = j.get<std::int64_t>();
  if (d < 0 || d > UINT32_MAX) throw DomainError("degree out of range");
  return static_cast<std::uint32_t>(d);
}

BigInt as_exponent(const json& j) {
  BigInt e = parse_bigint(j.get<std::string>());
  if (e < 0) throw DomainError("exponent must be non-negative");
  return e;
}

}  // namespace

json to_json(const BiPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({t.deg_x, t.deg_y, t.coeff.get_str()});
  return {{"vars", {"x", "y"}}, {"terms", std::move(terms)}};
}

BiPoly bipoly_from_json(const json& j) {
  return guarded("BiPoly", [&] {
    if (j.at("vars") != json({"x", "y"})) throw DomainError("BiPoly vars must be [\"x\",\"y\"]");
    std::vector<BiPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw DomainError("BiPoly term must have 3 entries");
      terms.push_back({as_degree(t[0]), as_degree(t[1]), parse_bigint(t[2].get<std::string>())});
    }
    return BiPoly::from_terms(std::move(terms));
  });
}

json to_json(const UniPoly& p) {
  json terms = json::array();
  for (const auto& [deg, c] : p.coeffs()) terms.push_back({deg, to_string(c)});
  return {{"var", std::string(tag_name(p.var()))}, {"terms", std::move(terms)}};
}

UniPoly unipoly_from_json(const json& j) {
  return guarded("UniPoly", [&] {
    const Variable var = variable_from_tag(j.at("var").get<std::string>());
    std::vector<UniPoly::Coeff> coeffs;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 2) throw DomainError("UniPoly term must have 2 entries");
      coeffs.emplace_back(as_degree(t[0]), parse_rational(t[1].get<std::string>()));
    }
    return UniPoly::from_coeffs(var, std::move(coeffs));
  });
}

json to_json(const PowerForm& pf) {
  return {{"base", to_json(pf.base)}, {"exponent", pf.exponent.get_str()}};
}

PowerForm powerform_from_json(const json& j) {
  return guarded("PowerForm", [&] {
    return PowerForm{bipoly_from_json(j.at("base")),
                     as_exponent(j.at("exponent"))};
  });
}

json to_json(const CountForm& cf) {
  return {{"base", cf.base.get_str()}, {"exponent", cf.exponent.get_str()}};
}

CountForm countform_from_json(const json& j) {
  return guarded("CountForm", [&] {
    return CountForm{parse_bigint(j.at("base").get<std::string>()),
                     as_exponent(j.at("exponent"))};
  });
}

json to_json(const UniPowerForm& pf) {
  return {{"prefactor", to_json(pf.prefactor)},
          {"base", to_json(pf.base)},
          {"exponent", pf.exponent.get_str()}};
}

UniPowerForm unipowerform_from_json(const json& j) {
  return guarded("UniPowerForm", [&] {
    return UniPowerForm{unipoly_from_json(j.at("prefactor")), unipoly_from_json(j.at("base")),
                        as_exponent(j.at("exponent"))};
  });
}

json to_json(const MultiGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"numVertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

MultiGraph graph_from_json(const json& j) {
  return guarded("graph", [&] {
    MultiGraph g(as_degree(j.at("numVertices")));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DomainError("edge must have 2 entries");
      g.add_edge(as_degree(e[0]), as_degree(e[1]));
    }
    return g;
  });
}

json to_json(const MarkedGraph& g) {
  json out = to_json(g.graph);
  out["marks"] = {{"X", g.mark_x}, {"Y", g.mark_y}};
  if (g.mark_z) out["marks"]["Z"] = *g.mark_z;
  return out;
}

MarkedGraph marked_graph_from_json(const json& j) {
  return guarded("marked graph", [&] {
    MarkedGraph g{graph_from_json(j), 0, 0, std::nullopt};
    const auto& marks = j.at("marks");
    g.mark_x = as_degree(marks.at("X"));
    g.mark_y = as_degree(marks.at("Y"));
    if (marks.contains("Z")) g.mark_z = as_degree(marks.at("Z"));
    const auto n = g.graph.num_vertices();
    if (g.mark_x >= n || g.mark_y >= n || (g.mark_z && *g.mark_z >= n)) {
      throw DomainError("mark out of range");
    }
    return g;
  });
}

}  // namespace tuttekit
