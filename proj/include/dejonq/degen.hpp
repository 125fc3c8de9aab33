#pragma once

#include <string>
#include <vector>

#include "dejonq/counts.hpp"
#include "dejonq/llseries.hpp"

namespace dejonq {

// One component of a two-component degeneration: the underlying series
// (before base points), the base-point multiplicity at the node, and the
// vanishing sequence of the degree-d aspect there.
struct DegenComponent {
  long long genus = 0;
  long long series_degree = 0;  // degree of the series with base points removed
  long long base_mult = 0;      // multiplicity of the node as a base point
  VanishingSequence aspect_vanishing;
  long long rho = 0;         // Brill-Noether number of the underlying series
  long long speciality = 0;  // g_j - series_degree + r
};

struct DegenerationData {
  long long g = 0, r = 0, d = 0;
  long long s = 0;  // index of speciality g - d + r of the target series
  DegenComponent c1, c2;
};

// Two general curves glued at a point carrying a rho = 0 series of speciality
// s: component 1 of genus (s-1)(r+1) with a degree g-s series and node base
// multiplicity r, component 2 of genus r+1 with its canonical series and node
// base multiplicity d-2r.  Verifies refined compatibility and the pointed
// existence bounds (attained with equality) before returning.
DegenerationData build_rho_zero_degeneration(long long r, long long s);

// Genus-(g-1) component with a degree d-1 series plus an elliptic component
// with a degree r+1 series; drops the Brill-Noether number by one and keeps
// the speciality.  Requires brill_noether(g, r, d) >= 1.
DegenerationData build_rho_step_degeneration(long long g, long long r, long long d);

// One entry of the weight case analysis: a divisor split described by the
// mu-weight w1 and part count n1 landing on component 1.
struct CaseEntry {
  long long weight_c1 = 0;
  long long n1 = 0;
  bool rejected = false;       // base-multiplicity gate fails at a node
  std::string boundary;        // "low" | "interior" | "high" | "outside"
  long long node_coeff_c1 = 0;  // node coefficient minus base multiplicity
  long long node_coeff_c2 = 0;
  long long len1 = 0, len2 = 0;  // sub-divisor lengths per component
  long long dim1 = 0, dim2 = 0;  // expected dimensions of the sub-problems
  int corrections = 0;           // -1 per component pinned at the node
  long long total = 0;           // dim1 + dim2 - corrections
  bool feasible = false;         // both sub-dimensions non-negative
};

struct CaseAnalysis {
  long long expdim = 0;  // N - d + r of the input problem
  std::vector<CaseEntry> cases;
  bool has_feasible = false;
  long long max_total = 0;  // over feasible cases
};

// Enumerates every realizable (weight, length) split of the divisor parts
// across the two components, applies the base-multiplicity gate, and computes
// the per-component dimension bookkeeping.  Throws consistency_error if any
// admissible case were to exceed N - d + r.
CaseAnalysis enumerate_case_analysis(const DegenerationData& degen,
                                     const DJProblem& p);

// Exact sign analysis of the quadratic N^2 - (2s+r+1) N + c for one choice of
// the constant term c.
struct QuadraticVariant {
  long long constant_term = 0;
  long long discriminant = 0;
  bool has_real_roots = false;
  bool given_in_interval = false;      // quadratic(N) < 0
  bool upper_root_below_bound = false;  // every root < d - r + 1
  bool contradiction = false;           // no N >= d-r+1 makes the quadratic negative
};

struct SmoothnessReport {
  long long g = 0, r = 0, d = 0, length = 0, s = 0;
  QuadraticVariant variant_s_s1;  // constant term s(s+1)
  QuadraticVariant variant_s_sr;  // constant term s(s+r)
  bool sqrt_bound = false;        // disc <= (2s+r-3)^2 for the s(s+r) variant
  bool genus_chain = false;       // g >= (r+1)s >= 2s+r+1
  bool final_inequality = false;  // (2-r)(s-1) < 0
  bool case2_contradiction = false;  // (d-r)(g-r-1) > g
  bool contradiction_achieved = false;
};

// Requires r >= 3, s = g-d+r >= 2, N > d-r.  Evaluates the full inequality
// chain in integer arithmetic for both constant-term readings of the
// quadratic and reports each link separately.
SmoothnessReport smoothness_inequality_check(long long g, long long r,
                                             long long d, long long N);

enum class TransversalityCase {
  NonSpecial,       // g - d + r <= 0
  Canonical,        // d = 2g-2, r = g-1
  RankOne,          // r = 1
  RankTwo,          // r = 2
  SpecialityOne,    // g - d + r = 1
  RequiresDegeneration,
};

struct TransversalityReport {
  TransversalityCase branch = TransversalityCase::RequiresDegeneration;
  long long s = 0;
  // Populated for the rank-two branch: the collinear-cycle locus has
  // dimension N + zn_dim_offset before the d degree conditions are imposed.
  long long zn_dim_offset = 0;
  long long condition_count = 0;
};

std::string to_string(TransversalityCase c);

// Classifies whether the transversality statement holds without any
// degeneration argument, and through which special case.
TransversalityReport transversality_special_cases(long long g, long long r,
                                                  long long d);

struct SignedPartitionExtension {
  long long d_prime = 0;   // d + sum of the negative magnitudes
  long long h0 = 0;        // sections of the twisted bundle, by the case table
  long long r_prime = 0;   // h0 - 1
  long long n = 0;         // total number of points
  long long expdim = 0;    // n - d' + r'
  long long positive_bound = 0;  // n1 - d' + r'
  std::string h0_case;     // canonical | noncanonical-critical | large-degree | small-degree
};

// Reduction of a signed-multiplicity problem to a positive one of degree d':
// h0 follows the four-way degree case split (canonical flag decides the
// d' = 2g-2 tie).  mu holds positive entries a_i and negative entries -b_i
// in any order; their sum must be d.
SignedPartitionExtension negative_partition_extend(long long g, long long r,
                                                   long long d,
                                                   const std::vector<long long>& mu,
                                                   bool canonical);

enum class NonexistenceVerdict {
  CertifiedEmptyNonSpecial,  // g - d + r = 0: Picard image argument applies
  CertifiedEmptyImageDim,    // g - d + r < 0 and N < g: image dimension too small
  RequiresInduction,         // N >= g: needs the chain-curve induction
};

std::string to_string(NonexistenceVerdict v);

// Base cases of the non-existence statement; requires N - d + r < 0.
NonexistenceVerdict nonexistence_base_case(long long g, long long r, long long d,
                                           long long N);

}  // namespace dejonq
