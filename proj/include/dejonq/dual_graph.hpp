#pragma once

#include <map>
#include <set>
#include <vector>

#include "dejonq/errors.hpp"

namespace dejonq {

// Dual graph of a nodal curve: vertices are irreducible components with their
// geometric genus, edges are nodes (parallel edges and self-nodes allowed),
// markings are divisor parts (multiplicity a, part degree delta) sitting on a
// component, and the multidegree assigns a line-bundle degree per component.
struct GraphVertex {
  int id = 0;
  long long genus = 0;
};

struct GraphEdge {
  int id = 0;
  int u = 0;
  int v = 0;
};

struct Marking {
  int vertex = 0;
  long long a = 1;
  long long delta = 1;
};

class DualGraph {
 public:
  DualGraph() = default;
  DualGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges,
            std::vector<Marking> markings = {},
            std::map<int, long long> multidegree = {});

  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<Marking>& markings() const { return markings_; }
  const std::map<int, long long>& multidegree() const { return multidegree_; }

  bool has_vertex(int id) const;
  long long genus_of(int vertex_id) const;
  long long degree_of(int vertex_id) const;  // multidegree entry, 0 if absent
  long long total_degree() const;

  // Number of node preimages on the component: incident edges with self-nodes
  // counted twice.
  long long node_valence(int vertex_id) const;
  long long marking_count(int vertex_id) const;
  // Number of marked points on the component: a degree-delta part is delta
  // points.
  long long marked_point_count(int vertex_id) const;
  // Sum of a * delta over markings on the component.
  long long marking_weight(int vertex_id) const;
  long long total_marking_weight() const;

  bool connected() const;
  bool is_tree() const;  // connected, acyclic, no self-nodes

  // Destabilising: a rational component whose node preimages plus markings
  // number exactly two.  Exceptional: destabilising and unmarked.
  bool is_destabilising(int vertex_id) const;
  bool is_exceptional(int vertex_id) const;

  // Arithmetic genus of the full curve: sum (g_v - 1) + #edges + 1.
  long long arithmetic_genus() const;

  // Subcurve queries over a set of vertex ids.
  bool subcurve_connected(const std::set<int>& sub) const;
  long long subcurve_genus(const std::set<int>& sub) const;
  // Edges joining the subcurve to its complement (= #(Y' . complement)).
  long long subcurve_attach_count(const std::set<int>& sub) const;
  long long subcurve_degree(const std::set<int>& sub) const;
  long long subcurve_marking_count(const std::set<int>& sub) const;
  // Rational (arithmetic genus 0) proper connected subcurve with the given
  // number of attaching nodes: 1 for a tail, 2 for a bridge.
  bool is_rational_tail(const std::set<int>& sub) const;
  bool is_rational_bridge(const std::set<int>& sub) const;

  // All connected proper subcurves that are rational tails / bridges.
  // Only supported for graphs small enough to enumerate vertex subsets.
  std::vector<std::set<int>> rational_tails() const;
  std::vector<std::set<int>> rational_bridges() const;

  std::vector<int> edges_between(int a, int b) const;  // edge ids, a != b

 private:
  void validate() const;
  std::vector<std::set<int>> enumerate_rational_subcurves(long long attach) const;

  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<Marking> markings_;
  std::map<int, long long> multidegree_;
};

}  // namespace dejonq
