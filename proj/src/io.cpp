#include "medianforge/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "medianforge/errors.hpp"

namespace medianforge::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  return a;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) out.push_back(string_of(item, what));
  return out;
}

Json names(const Graph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

Json names(const Graph& g, const VertexSet& s) { return names(g, members(s)); }

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
  return {{"vertices", g.names()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  auto vertices = strings_of(array_field(j, "vertices"), "vertex");
  std::vector<NamedEdge> edges;
  for (const auto& e : array_field(j, "edges")) {
    auto pair = strings_of(e, "edge");
    if (pair.size() != 2) throw InputError("edge must list exactly two vertices");
    edges.emplace_back(std::move(pair[0]), std::move(pair[1]));
  }
  return Graph(std::move(vertices), edges);
}

Json to_json(const Wallspace& ws) {
  Json walls = Json::array();
  for (std::size_t w = 0; w < ws.walls().size(); ++w) {
    auto [a, b] = ws.wall_names(w);
    walls.push_back(Json::array({Json(a), Json(b)}));
  }
  return {{"points", ws.points()}, {"walls", std::move(walls)}};
}

Wallspace wallspace_from_json(const Json& j) {
  auto points = strings_of(array_field(j, "points"), "point");
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> walls;
  for (const auto& w : array_field(j, "walls")) {
    if (!w.is_array() || w.size() != 2) throw InputError("wall must be a pair of blocks");
    walls.emplace_back(strings_of(w[0], "block member"), strings_of(w[1], "block member"));
  }
  return Wallspace(std::move(points), walls);
}

Json to_json(const PLCircleHomeo& g) {
  Json b = Json::array();
  Json v = Json::array();
  for (const auto& x : g.breakpoints()) b.push_back(to_string(x));
  for (const auto& y : g.values()) v.push_back(to_string(y));
  return {{"breakpoints", std::move(b)}, {"values", std::move(v)}};
}

PLCircleHomeo homeo_from_json(const Json& j) {
  std::vector<Rational> b;
  std::vector<Rational> v;
  for (const auto& s : strings_of(array_field(j, "breakpoints"), "breakpoint")) b.push_back(parse_rational(s));
  for (const auto& s : strings_of(array_field(j, "values"), "value")) v.push_back(parse_rational(s));
  return PLCircleHomeo(std::move(b), std::move(v));
}

Json to_json(const Graph& g, const ActionGenerators& gens) {
  Json list = Json::array();
  for (const auto& a : gens) {
    Json map = Json::object();
    for (Vertex v = 0; v < g.order(); ++v) map[g.name(v)] = g.name(a(v));
    list.push_back(std::move(map));
  }
  return {{"generators", std::move(list)}};
}

ActionGenerators action_from_json(const Graph& g, const Json& j) {
  ActionGenerators gens;
  for (const auto& item : array_field(j, "generators")) {
    if (!item.is_object()) throw InputError("generator must be an object mapping vertex names");
    std::map<std::string, std::string> perm;
    for (const auto& [from, to] : item.items()) perm.emplace(from, string_of(to, "generator image"));
    gens.push_back(check_automorphism(g, perm));
  }
  return gens;
}

Json to_json(const Hyperplanes& h) {
  const Graph& g = h.graph();
  Json out = Json::array();
  for (const auto& p : h.all()) {
    const Edge& id = g.edges()[p.id];
    Json edges = Json::array();
    for (auto e : p.edges) edges.push_back({g.name(g.edges()[e].u), g.name(g.edges()[e].v)});
    out.push_back({{"id", {g.name(id.u), g.name(id.v)}},
                   {"edges", std::move(edges)},
                   {"halfspaces", Json::array({names(g, p.side_a), names(g, p.side_b)})}});
  }
  return out;
}

Json to_json(const CubeComplex& c) {
  Json cells = Json::object();
  for (int k = 2; k <= c.dimension(); ++k) {
    Json layer = Json::array();
    for (const auto& cell : c.cells(k)) layer.push_back(names(c.base(), cell.vertices));
    cells[std::to_string(k)] = std::move(layer);
  }
  return {{"f_vector", c.f_vector()}, {"cells", std::move(cells)}};
}

Json to_json(const Graph& g, const MedianReport& r) {
  Json out{{"median", r.verdict}};
  if (r.witness) {
    out["witness"] = {{"triple", names(g, std::vector<Vertex>(r.witness->triple.begin(), r.witness->triple.end()))},
                      {"medians", names(g, r.witness->candidates)}};
  }
  return out;
}

Json to_json(const Graph& g, const LocalReport& r) {
  Json c1{{"verdict", to_string(r.condition1.verdict)}, {"method", r.condition1.method}};
  if (r.condition1.witness_cycle) c1["witness_cycle"] = names(g, *r.condition1.witness_cycle);
  Json c2{{"holds", r.condition2}};
  if (r.condition2_witness) {
    const auto& w = *r.condition2_witness;
    c2["witness"] = {{"vertex", g.name(w.center)}, {"neighbors", names(g, std::vector<Vertex>{w.a, w.b})}, {"opposite", names(g, w.opposite)}};
  }
  Json c3{{"holds", r.condition3}};
  if (r.condition3_witness) {
    const auto& w = *r.condition3_witness;
    c3["witness"] = {{"vertex", g.name(w.center)}, {"neighbors", names(g, std::vector<Vertex>{w.a, w.b, w.c})}};
  }
  return {{"condition1", std::move(c1)}, {"condition2", std::move(c2)}, {"condition3", std::move(c3)}};
}

Json to_json(const Hyperplanes& h, const EmbeddingTable& t) {
  const Graph& g = h.graph();
  Json planes = Json::array();
  for (auto id : t.planes) planes.push_back({g.name(g.edges()[id].u), g.name(g.edges()[id].v)});
  Json coords = Json::object();
  for (Vertex v = 0; v < g.order(); ++v) coords[g.name(v)] = coordinate_string(t.coordinates[v]);
  return {{"basepoint", g.name(t.basepoint)}, {"hyperplanes", std::move(planes)}, {"coordinates", std::move(coords)}};
}

Json to_json(const GrowthReport& r) {
  Json out{{"sing_counts", r.sing_counts}, {"growth", to_string(r.growth)}};
  if (r.k) out["k"] = *r.k;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

std::string export_dot(const Graph& g, const Hyperplanes* coloring) {
  static constexpr std::array<const char*, 12> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                         "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                                         "#bcbd22", "#17becf", "#393b79", "#637939"};
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << quoted(g.name(v)) << ";\n";
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edges()[e];
    out << "  " << quoted(g.name(edge.u)) << " -- " << quoted(g.name(edge.v));
    if (coloring) {
      const std::size_t plane = coloring->of_edge(e);
      out << " [color=\"" << kPalette[plane % kPalette.size()] << "\", hyperplane=" << plane << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace medianforge::io
