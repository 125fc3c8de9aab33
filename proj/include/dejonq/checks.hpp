#pragma once

#include <string>
#include <vector>

#include "dejonq/dual_graph.hpp"

namespace dejonq {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double millis = 0.0;
};

// Named verification suites:
//   classical     flex / Hurwitz / theta counts against their closed forms
//   series        ring laws plus the naive-expansion oracle
//   agreement     generating-function route == restricted-class route
//   degeneration  two-component case analyses hit N-d+r exactly
//   smoothness    integer inequality chain over the stated (r, s) grid
//   twists        solver vs brute-force enumeration, chain fixture structure
//   negative      signed-partition reduction consistency and the h0 table
std::vector<std::string> check_suite_names();

std::vector<CheckResult> run_check_suite(const std::string& suite, bool parallel);

// Every suite in order; "all" on the CLI maps here.
std::vector<CheckResult> run_all_checks(bool parallel);

// The chain-curve fixture: a genus g-1 spine joined at both ends of a chain
// of n+1 rational components, one exceptional, markings mu on the others,
// spine degree d-1 and degree 1 on the exceptional component.
DualGraph chain_fixture(long long genus, const std::vector<long long>& mu,
                        std::size_t exceptional_position);

}  // namespace dejonq
