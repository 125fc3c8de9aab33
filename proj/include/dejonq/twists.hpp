#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dejonq/dual_graph.hpp"

namespace dejonq {

// Integer twist function on (node, incident component) pairs.  Self-nodes
// carry no twist.  The three axioms:
//   (1) antisymmetry across every node,
//   (2) all nodes joining the same pair of components carry equal values,
//   (3) for components C, C', CH, CH' with nodes q_C in C.CH, q_C' in C'.CH',
//       q in C.C', qh in CH.CH': if T(q_C,C) = T(q_C',C') = 0 then
//       T(q,C) = T(qh,CH).
struct Twist {
  // (edge id, vertex id) -> value.
  std::map<std::pair<int, int>, long long> values;

  long long at(int edge_id, int vertex_id) const;
};

struct TwistViolation {
  int axiom = 0;
  std::string detail;
};

struct TwistValidation {
  bool valid = true;
  std::vector<TwistViolation> violations;
};

// Checks that T is defined on every (node, side) pair between distinct
// components (shape error otherwise) and reports every axiom violation.
TwistValidation validate_twist(const DualGraph& graph, const Twist& twist);

// Quasi-stability: every destabilising component is exceptional, rational
// tails contain no exceptional component, and every rational bridge contains
// at most one exceptional component.  Rational components with fewer than two
// special points fail outright (the curve is not even semi-stable).
bool is_quasi_stable(const DualGraph& graph);

// Which degree the dualizing-type weight w_{Y'} uses in the balanced
// inequality: the literal 2(g_{Y'} - 2), or the conventional restricted
// dualizing degree 2 g_{Y'} - 2 + k_{Y'}.
enum class BalancedConvention { LiteralWeight, DualizingWeight };

// Balanced-multidegree test for one connected subcurve:
//   exceptional component        -> degree 1,
//   rational bridge              -> degree in {0, 1},
//   rational tail                -> degree -1,
//   core subcurves (no component inside a tail or bridge)
//     -> |deg - d (w - t) / (2g-2) - t| <= (k - t - 2b)/2,
// where t counts attached rational tails and b the degree-zero rational
// bridges meeting the subcurve twice.  Requires g >= 2.
bool is_balanced(const DualGraph& graph, const std::set<int>& subcurve,
                 long long d, long long g,
                 BalancedConvention convention = BalancedConvention::LiteralWeight);

// Runs is_balanced over every connected proper subcurve plus the exceptional
// components (small graphs only).
bool is_balanced_all(const DualGraph& graph, long long d, long long g,
                     BalancedConvention convention = BalancedConvention::LiteralWeight);

// One unknown per adjacent component pair: by axioms (1)-(2), every node
// between u and v carries the same value x from the u side and -x from the
// v side.
struct TwistVariable {
  int u = 0;  // orientation: stored value is T(node, u)
  int v = 0;
  long long multiplicity = 0;  // number of parallel nodes
  std::vector<int> edge_ids;
};

// Certificate that no integer twist matches the multidegree: an integer
// combination of component equations (a cut, in the simple cases) whose
// right-hand side is not divisible by the induced left-hand factor.
struct InfeasibilityCertificate {
  std::string kind;  // "imbalance" or "divisibility"
  std::vector<int> vertex_ids;
  std::vector<long long> coefficients;
  long long excess = 0;
  long long modulus = 0;
};

struct TwistSolution {
  enum class Status { Feasible, Infeasible };
  Status status = Status::Infeasible;
  std::vector<TwistVariable> variables;
  std::vector<long long> particular;             // one value per variable
  std::vector<std::vector<long long>> basis;     // integer kernel basis
  std::optional<InfeasibilityCertificate> certificate;

  // Materialize particular + sum coeffs[j] * basis[j] as a twist function.
  Twist twist_at(const std::vector<long long>& coeffs) const;
  Twist particular_twist() const;
};

// Solves, for every component C,
//   deg_C = sum_{markings on C} a * delta + sum_{nodes q on C} T(q, C)
// over integer twists satisfying axioms (1)-(2); axiom (3) is a conditional
// constraint that the affine description cannot carry, so callers screen
// family members through validate_twist (it holds automatically on graphs
// without four-cycles).  On trees the solution is unique when it exists.
TwistSolution solve_twists(const DualGraph& graph);

// Degree-level feasibility: a twist solving the system exists.
bool admits_dej_divisor(const DualGraph& graph);

// All twists in the solution family with every variable in [lo, hi] that
// also pass the full axiom check, in deterministic order.
std::vector<Twist> enumerate_solutions(const DualGraph& graph,
                                       const TwistSolution& sol, long long lo,
                                       long long hi);

// Structure of a one-parameter twist family on a chain-like curve: a unique
// maximal-genus spine incident to exactly two twist variables.  The two spine
// twists are affine in the family parameter; their sum is constant, and the
// family splits into the generic stratum (both nonzero) and the parameter
// values where exactly one vanishes.
struct SpineEndAnalysis {
  bool applicable = false;
  int spine = 0;
  long long end_sum = 0;  // T(end1, spine) + T(end2, spine), parameter-free
  // Affine forms T(end_i, spine) = constant + slope * parameter.
  long long const1 = 0, slope1 = 0;
  long long const2 = 0, slope2 = 0;
  std::optional<long long> zero_param1, zero_param2;  // integer vanishing points
  bool both_zero_possible = false;
};

SpineEndAnalysis analyze_spine_ends(const DualGraph& graph,
                                    const TwistSolution& sol);

}  // namespace dejonq
