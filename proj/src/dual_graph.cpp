#include "dejonq/dual_graph.hpp"

#include <algorithm>
#include <string>

namespace dejonq {

DualGraph::DualGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges,
                     std::vector<Marking> markings,
                     std::map<int, long long> multidegree)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      markings_(std::move(markings)),
      multidegree_(std::move(multidegree)) {
  validate();
}

void DualGraph::validate() const {
  if (vertices_.empty()) throw parse_error("graph has no vertices");
  std::set<int> vids, eids;
  for (const auto& v : vertices_) {
    if (!vids.insert(v.id).second)
      throw parse_error("duplicate vertex id " + std::to_string(v.id));
    if (v.genus < 0) throw parse_error("negative genus on vertex " + std::to_string(v.id));
  }
  for (const auto& e : edges_) {
    if (!eids.insert(e.id).second)
      throw parse_error("duplicate edge id " + std::to_string(e.id));
    if (!vids.count(e.u) || !vids.count(e.v))
      throw parse_error("edge " + std::to_string(e.id) + " references missing vertex");
  }
  for (const auto& m : markings_) {
    if (!vids.count(m.vertex))
      throw parse_error("marking references missing vertex " + std::to_string(m.vertex));
    if (m.a < 1 || m.delta < 1)
      throw parse_error("marking multiplicities must be positive");
  }
  for (const auto& [vid, deg] : multidegree_) {
    (void)deg;
    if (!vids.count(vid))
      throw parse_error("multidegree references missing vertex " + std::to_string(vid));
  }
}

bool DualGraph::has_vertex(int id) const {
  return std::any_of(vertices_.begin(), vertices_.end(),
                     [&](const GraphVertex& v) { return v.id == id; });
}

long long DualGraph::genus_of(int vertex_id) const {
  for (const auto& v : vertices_)
    if (v.id == vertex_id) return v.genus;
  throw parse_error("unknown vertex id " + std::to_string(vertex_id));
}

long long DualGraph::degree_of(int vertex_id) const {
  auto it = multidegree_.find(vertex_id);
  return it == multidegree_.end() ? 0 : it->second;
}

long long DualGraph::total_degree() const {
  long long t = 0;
  for (const auto& [vid, deg] : multidegree_) t += deg;
  return t;
}

long long DualGraph::node_valence(int vertex_id) const {
  long long n = 0;
  for (const auto& e : edges_) {
    if (e.u == vertex_id) ++n;
    if (e.v == vertex_id) ++n;
  }
  return n;
}

long long DualGraph::marking_count(int vertex_id) const {
  long long n = 0;
  for (const auto& m : markings_)
    if (m.vertex == vertex_id) ++n;
  return n;
}

long long DualGraph::marked_point_count(int vertex_id) const {
  long long n = 0;
  for (const auto& m : markings_)
    if (m.vertex == vertex_id) n += m.delta;
  return n;
}

long long DualGraph::marking_weight(int vertex_id) const {
  long long w = 0;
  for (const auto& m : markings_)
    if (m.vertex == vertex_id) w += m.a * m.delta;
  return w;
}

long long DualGraph::total_marking_weight() const {
  long long w = 0;
  for (const auto& m : markings_) w += m.a * m.delta;
  return w;
}

bool DualGraph::connected() const {
  std::set<int> all;
  for (const auto& v : vertices_) all.insert(v.id);
  return subcurve_connected(all);
}

bool DualGraph::is_tree() const {
  if (!connected()) return false;
  for (const auto& e : edges_)
    if (e.u == e.v) return false;
  return edges_.size() + 1 == vertices_.size();
}

bool DualGraph::is_destabilising(int vertex_id) const {
  return genus_of(vertex_id) == 0 &&
         node_valence(vertex_id) + marked_point_count(vertex_id) == 2;
}

bool DualGraph::is_exceptional(int vertex_id) const {
  return is_destabilising(vertex_id) && marking_count(vertex_id) == 0;
}

long long DualGraph::arithmetic_genus() const {
  long long g = 1 + static_cast<long long>(edges_.size());
  for (const auto& v : vertices_) g += v.genus - 1;
  return g;
}

bool DualGraph::subcurve_connected(const std::set<int>& sub) const {
  if (sub.empty()) return false;
  std::set<int> seen;
  std::vector<int> stack{*sub.begin()};
  seen.insert(*sub.begin());
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (const auto& e : edges_) {
      int other = -1;
      if (e.u == cur && sub.count(e.v)) other = e.v;
      if (e.v == cur && sub.count(e.u)) other = e.u;
      if (other >= 0 && seen.insert(other).second) stack.push_back(other);
    }
  }
  return seen.size() == sub.size();
}

long long DualGraph::subcurve_genus(const std::set<int>& sub) const {
  long long g = 1;
  for (int vid : sub) g += genus_of(vid) - 1;
  for (const auto& e : edges_)
    if (sub.count(e.u) && sub.count(e.v)) ++g;
  return g;
}

long long DualGraph::subcurve_attach_count(const std::set<int>& sub) const {
  long long k = 0;
  for (const auto& e : edges_) {
    bool inu = sub.count(e.u) > 0, inv = sub.count(e.v) > 0;
    if (inu != inv) ++k;
  }
  return k;
}

long long DualGraph::subcurve_degree(const std::set<int>& sub) const {
  long long t = 0;
  for (int vid : sub) t += degree_of(vid);
  return t;
}

long long DualGraph::subcurve_marking_count(const std::set<int>& sub) const {
  long long n = 0;
  for (const auto& m : markings_)
    if (sub.count(m.vertex)) ++n;
  return n;
}

bool DualGraph::is_rational_tail(const std::set<int>& sub) const {
  return sub.size() < vertices_.size() && subcurve_connected(sub) &&
         subcurve_genus(sub) == 0 && subcurve_attach_count(sub) == 1;
}

bool DualGraph::is_rational_bridge(const std::set<int>& sub) const {
  return sub.size() < vertices_.size() && subcurve_connected(sub) &&
         subcurve_genus(sub) == 0 && subcurve_attach_count(sub) == 2;
}

std::vector<std::set<int>> DualGraph::enumerate_rational_subcurves(
    long long attach) const {
  if (vertices_.size() > 22)
    throw error("subcurve enumeration limited to graphs with <= 22 vertices");
  // Only genus-0 vertices can participate in a rational subcurve.
  std::vector<int> rational;
  for (const auto& v : vertices_)
    if (v.genus == 0) rational.push_back(v.id);
  std::vector<std::set<int>> out;
  const std::size_t n = rational.size();
  for (std::size_t mask = 1; mask < (1ULL << n); ++mask) {
    std::set<int> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) sub.insert(rational[i]);
    if (sub.size() == vertices_.size()) continue;
    if (!subcurve_connected(sub)) continue;
    if (subcurve_genus(sub) != 0) continue;
    if (subcurve_attach_count(sub) != attach) continue;
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<std::set<int>> DualGraph::rational_tails() const {
  return enumerate_rational_subcurves(1);
}

std::vector<std::set<int>> DualGraph::rational_bridges() const {
  return enumerate_rational_subcurves(2);
}

std::vector<int> DualGraph::edges_between(int a, int b) const {
  std::vector<int> ids;
  for (const auto& e : edges_)
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) ids.push_back(e.id);
  return ids;
}

}  // namespace dejonq
