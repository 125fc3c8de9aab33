#pragma once

#include <vector>

#include "dejonq/counts.hpp"
#include "dejonq/dual_graph.hpp"

namespace dejonq {

// Orders with which the nonzero sections of a series vanish at a point:
// r+1 strictly increasing integers in [0, d].
struct VanishingSequence {
  std::vector<long long> orders;

  VanishingSequence() = default;
  explicit VanishingSequence(std::vector<long long> o);

  // (first, first+1, .., first+r): the constant-ramification sequences the
  // degeneration constructions use.
  static VanishingSequence arithmetic(long long first, long long r);

  std::size_t size() const { return orders.size(); }
};

// alpha_i = a_i - i: non-decreasing, non-negative.
struct RamificationSequence {
  std::vector<long long> alphas;

  RamificationSequence() = default;
  explicit RamificationSequence(std::vector<long long> a);

  static RamificationSequence constant(long long value, long long r);

  std::size_t size() const { return alphas.size(); }
};

RamificationSequence ramification_from_vanishing(const VanishingSequence& v);

// Node compatibility of two aspects of a degree-d limit series:
//   a_i(Y) + a_{r-i}(Z) = d for every i  ->  refined,
//   >= d everywhere with some strict      ->  crude,
//   any violation                          ->  incompatible.
enum class Compatibility { Refined, Crude, Incompatible };

Compatibility refined_compatible(const VanishingSequence& vy,
                                 const VanishingSequence& vz, long long d);

// Pointed existence condition: a general pointed curve of the given genus
// carries a degree-d dimension-r series with ramification at least alpha at
// the point iff sum_i max(alpha_i + genus - d + r, 0) <= genus.
bool eh_existence(long long genus, long long d, long long r,
                  const RamificationSequence& alpha);

// The two sides of the condition above; useful when a construction needs to
// verify that the bound is attained with equality.
long long eh_existence_lhs(long long genus, long long d, long long r,
                           const RamificationSequence& alpha);

// Arithmetic genus sum (g_v - 1) + #edges + 1 of a connected graph.
long long tree_genus(const DualGraph& graph);

// Per-component section budget on a nodal curve: sum r_v = r + 1 + E - V.
long long tree_section_budget(long long r, long long edge_count,
                              long long vertex_count);

// One component's share of a degree-d divisor on a tree curve: the parts that
// specialize to the component, plus a coefficient at every node preimage that
// restores total degree d.
struct AspectDivisor {
  int vertex = 0;
  // (multiplicity a_i, degree of the part on this component).
  std::vector<std::pair<long long, long long>> interior;
  // (edge id, node coefficient).
  std::vector<std::pair<int, long long>> node_parts;

  long long total_degree() const;
};

// Specializes the parts of p onto the components of a tree and computes every
// node coefficient as the total part weight on the far side of the node
// (equivalently d minus the weight on the near side), which is the unique
// assignment making each aspect divisor have total degree d.
// part_to_vertex[i] is the vertex id carrying part i.
std::vector<AspectDivisor> aspect_divisors(const DualGraph& tree,
                                           const std::vector<int>& part_to_vertex,
                                           const DJProblem& p);

}  // namespace dejonq
