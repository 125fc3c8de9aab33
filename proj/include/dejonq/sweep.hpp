#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dejonq/counts.hpp"

namespace dejonq {

struct Range {
  long long lo = 0;
  long long hi = 0;  // inclusive
};

// One row of a parameter sweep.  Rows with nonzero expected dimension carry
// no counts; rows whose computation threw carry the message instead.
struct SweepRow {
  DJProblem problem;
  long long expdim = 0;
  bool counted = false;
  Int ordered = 0;
  Int symmetry = 0;
  Int count = 0;
  std::string error;
};

// r = 1, mu1 = (2, 1, .., 1), mu2 all ones; the normalized count must equal
// 2d + 2g - 2 on general curves.
std::vector<DJProblem> hurwitz_family(Range g, Range d);

// Canonical parameters d = 2g-2, r = g-1, mu1 = (2,..,2), mu2 all ones; the
// normalized count must equal 2^{g-1} (2^g - 1).
std::vector<DJProblem> theta_family(Range g);

// Every valid (mu1, mu2) pair for each (g, r, d) in the grid, parts listed in
// non-increasing (a, delta) order, capped at max_parts parts per problem.
std::vector<DJProblem> grid_family(Range g, Range r, Range d, long long max_parts);

// Evaluates the rows in deterministic problem order; the parallel flag picks
// the OpenMP kernel, which must produce the identical table.
std::vector<SweepRow> run_sweep(const std::vector<DJProblem>& problems,
                                bool parallel);

}  // namespace dejonq
