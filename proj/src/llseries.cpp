#include "dejonq/llseries.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace dejonq {

VanishingSequence::VanishingSequence(std::vector<long long> o) : orders(std::move(o)) {
  if (orders.empty()) throw shape_error("vanishing sequence must be non-empty");
  if (orders.front() < 0) throw shape_error("vanishing orders must be non-negative");
  for (std::size_t i = 1; i < orders.size(); ++i)
    if (orders[i] <= orders[i - 1])
      throw shape_error("vanishing sequence must be strictly increasing");
}

VanishingSequence VanishingSequence::arithmetic(long long first, long long r) {
  std::vector<long long> o;
  for (long long i = 0; i <= r; ++i) o.push_back(first + i);
  return VanishingSequence(std::move(o));
}

RamificationSequence::RamificationSequence(std::vector<long long> a)
    : alphas(std::move(a)) {
  if (alphas.empty()) throw shape_error("ramification sequence must be non-empty");
  if (alphas.front() < 0)
    throw shape_error("ramification entries must be non-negative");
  for (std::size_t i = 1; i < alphas.size(); ++i)
    if (alphas[i] < alphas[i - 1])
      throw shape_error("ramification sequence must be non-decreasing");
}

RamificationSequence RamificationSequence::constant(long long value, long long r) {
  return RamificationSequence(std::vector<long long>(r + 1, value));
}

RamificationSequence ramification_from_vanishing(const VanishingSequence& v) {
  std::vector<long long> a;
  a.reserve(v.orders.size());
  for (std::size_t i = 0; i < v.orders.size(); ++i)
    a.push_back(v.orders[i] - static_cast<long long>(i));
  return RamificationSequence(std::move(a));
}

Compatibility refined_compatible(const VanishingSequence& vy,
                                 const VanishingSequence& vz, long long d) {
  if (vy.size() != vz.size())
    throw shape_error("vanishing sequences have different lengths");
  const std::size_t n = vy.size();
  bool all_equal = true;
  for (std::size_t i = 0; i < n; ++i) {
    long long sum = vy.orders[i] + vz.orders[n - 1 - i];
    if (sum < d) return Compatibility::Incompatible;
    if (sum > d) all_equal = false;
  }
  return all_equal ? Compatibility::Refined : Compatibility::Crude;
}

long long eh_existence_lhs(long long genus, long long d, long long r,
                           const RamificationSequence& alpha) {
  if (static_cast<long long>(alpha.size()) != r + 1)
    throw shape_error("ramification sequence must have r+1 entries");
  long long lhs = 0;
  for (long long a : alpha.alphas) lhs += std::max(a + genus - d + r, 0LL);
  return lhs;
}

bool eh_existence(long long genus, long long d, long long r,
                  const RamificationSequence& alpha) {
  return eh_existence_lhs(genus, d, r, alpha) <= genus;
}

long long tree_genus(const DualGraph& graph) {
  if (!graph.connected()) throw precondition_error("graph is not connected");
  return graph.arithmetic_genus();
}

long long tree_section_budget(long long r, long long edge_count,
                              long long vertex_count) {
  if (vertex_count < 1) throw precondition_error("vertex count must be positive");
  return r + 1 + edge_count - vertex_count;
}

long long AspectDivisor::total_degree() const {
  long long t = 0;
  for (const auto& [a, deg] : interior) t += a * deg;
  for (const auto& [edge, coeff] : node_parts) t += coeff;
  return t;
}

std::vector<AspectDivisor> aspect_divisors(const DualGraph& tree,
                                           const std::vector<int>& part_to_vertex,
                                           const DJProblem& p) {
  if (!tree.is_tree()) throw precondition_error("graph must be a tree");
  if (part_to_vertex.size() != p.parts())
    throw shape_error("one component assignment per part is required");
  for (int vid : part_to_vertex)
    if (!tree.has_vertex(vid))
      throw shape_error("assignment references missing vertex " + std::to_string(vid));

  std::map<int, long long> weight;  // mu-weight specialized per vertex
  for (const auto& v : tree.vertices()) weight[v.id] = 0;
  for (std::size_t i = 0; i < part_to_vertex.size(); ++i)
    weight[part_to_vertex[i]] += p.mu1[i] * p.mu2[i];

  // Far-side weight of every oriented edge: drop the edge, sum the weights of
  // the component on the other side.
  auto far_weight = [&](const GraphEdge& cut, int near) {
    std::set<int> seen;
    int far = (cut.u == near) ? cut.v : cut.u;
    std::vector<int> stack{far};
    seen.insert(far);
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (const auto& e : tree.edges()) {
        if (e.id == cut.id) continue;
        int other = -1;
        if (e.u == cur) other = e.v;
        if (e.v == cur) other = e.u;
        if (other >= 0 && seen.insert(other).second) stack.push_back(other);
      }
    }
    long long w = 0;
    for (int vid : seen) w += weight[vid];
    return w;
  };

  std::vector<AspectDivisor> out;
  for (const auto& v : tree.vertices()) {
    AspectDivisor asp;
    asp.vertex = v.id;
    for (std::size_t i = 0; i < part_to_vertex.size(); ++i)
      if (part_to_vertex[i] == v.id) asp.interior.emplace_back(p.mu1[i], p.mu2[i]);
    for (const auto& e : tree.edges()) {
      if (e.u != v.id && e.v != v.id) continue;
      long long coeff = far_weight(e, v.id);
      if (coeff < 0)
        throw infeasible_error("negative node coefficient at edge " +
                               std::to_string(e.id));
      asp.node_parts.emplace_back(e.id, coeff);
    }
    if (asp.total_degree() != p.d)
      throw consistency_error("aspect degree mismatch on vertex " +
                              std::to_string(v.id));
    out.push_back(std::move(asp));
  }
  return out;
}

}  // namespace dejonq
