#include "dejonq/graph_io.hpp"

#include <fstream>

namespace dejonq {

namespace {

long long require_int(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer())
    throw parse_error(std::string("missing integer field '") + key + "'");
  return obj[key].get<long long>();
}

}  // namespace

DualGraph graph_from_json(const Json& doc) {
  if (!doc.is_object()) throw parse_error("graph document must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw parse_error("graph document needs a 'vertices' array");

  std::vector<GraphVertex> vertices;
  for (const auto& v : doc["vertices"])
    vertices.push_back({static_cast<int>(require_int(v, "id")),
                        require_int(v, "genus")});

  std::vector<GraphEdge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw parse_error("'edges' must be an array");
    for (const auto& e : doc["edges"])
      edges.push_back({static_cast<int>(require_int(e, "id")),
                       static_cast<int>(require_int(e, "u")),
                       static_cast<int>(require_int(e, "v"))});
  }

  std::vector<Marking> markings;
  if (doc.contains("markings")) {
    if (!doc["markings"].is_array())
      throw parse_error("'markings' must be an array");
    for (const auto& m : doc["markings"]) {
      Marking mk;
      mk.vertex = static_cast<int>(require_int(m, "vertex"));
      mk.a = require_int(m, "a");
      mk.delta = m.contains("delta") ? require_int(m, "delta") : 1;
      markings.push_back(mk);
    }
  }

  std::map<int, long long> multidegree;
  if (doc.contains("multidegree")) {
    if (!doc["multidegree"].is_object())
      throw parse_error("'multidegree' must be an object");
    for (const auto& [key, value] : doc["multidegree"].items()) {
      if (!value.is_number_integer())
        throw parse_error("multidegree values must be integers");
      try {
        multidegree[std::stoi(key)] = value.get<long long>();
      } catch (const std::exception&) {
        throw parse_error("multidegree key '" + key + "' is not a vertex id");
      }
    }
  }

  try {
    return DualGraph(std::move(vertices), std::move(edges), std::move(markings),
                     std::move(multidegree));
  } catch (const parse_error&) {
    throw;
  }
}

DualGraph graph_from_string(const std::string& text) {
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw parse_error("invalid JSON");
  return graph_from_json(doc);
}

DualGraph graph_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open graph file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return graph_from_string(text);
}

Json graph_to_json(const DualGraph& graph) {
  Json doc = Json::object();
  doc["vertices"] = Json::array();
  for (const auto& v : graph.vertices())
    doc["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  doc["edges"] = Json::array();
  for (const auto& e : graph.edges())
    doc["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
  doc["markings"] = Json::array();
  for (const auto& m : graph.markings())
    doc["markings"].push_back({{"vertex", m.vertex}, {"a", m.a}, {"delta", m.delta}});
  doc["multidegree"] = Json::object();
  for (const auto& [vid, deg] : graph.multidegree())
    doc["multidegree"][std::to_string(vid)] = deg;
  return doc;
}

Json twist_to_json(const Twist& twist) {
  Json arr = Json::array();
  for (const auto& [key, value] : twist.values)
    arr.push_back({{"edge", key.first}, {"vertex", key.second}, {"value", value}});
  return arr;
}

Json solution_to_json(const TwistSolution& solution) {
  Json doc = Json::object();
  doc["status"] = solution.status == TwistSolution::Status::Feasible
                      ? "feasible"
                      : "infeasible";
  Json vars = Json::array();
  for (const auto& v : solution.variables)
    vars.push_back({{"u", v.u},
                    {"v", v.v},
                    {"multiplicity", v.multiplicity},
                    {"edges", v.edge_ids}});
  doc["variables"] = vars;
  if (solution.status == TwistSolution::Status::Feasible) {
    doc["particular"] = solution.particular;
    doc["basis"] = solution.basis;
    doc["certificate"] = nullptr;
  } else {
    doc["particular"] = nullptr;
    doc["basis"] = Json::array();
    Json cert = Json::object();
    if (solution.certificate) {
      cert["kind"] = solution.certificate->kind;
      cert["vertices"] = solution.certificate->vertex_ids;
      cert["coefficients"] = solution.certificate->coefficients;
      cert["excess"] = solution.certificate->excess;
      cert["modulus"] = solution.certificate->modulus;
    }
    doc["certificate"] = cert;
  }
  return doc;
}

}  // namespace dejonq
