#include <doctest.h>

#include <numeric>

#include "dejonq/checks.hpp"
#include "dejonq/parallel.hpp"
#include "dejonq/sweep.hpp"

using namespace dejonq;

namespace {

std::string render(const std::vector<SweepRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    out += std::to_string(row.problem.g) + "," + std::to_string(row.expdim) + ",";
    out += row.counted ? to_string(row.count) : ("!" + row.error);
    out += "\n";
  }
  return out;
}

}  // namespace

TEST_SUITE("parallel") {
  TEST_CASE("parallel_for writes every slot once") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), true, [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 1000);
    CHECK(*std::min_element(hits.begin(), hits.end()) == 1);
  }

  TEST_CASE("openmp sweep equals the serial reference") {
    auto problems = hurwitz_family({0, 5}, {2, 7});
    auto theta = theta_family({2, 7});
    problems.insert(problems.end(), theta.begin(), theta.end());
    auto grid = grid_family({0, 3}, {0, 3}, {2, 6}, 6);
    problems.insert(problems.end(), grid.begin(), grid.end());

    auto serial = run_sweep(problems, false);
    auto parallel = run_sweep(problems, true);
    REQUIRE(serial.size() == parallel.size());
    CHECK(render(serial) == render(parallel));
  }

  TEST_CASE("check suites give identical verdicts on both paths") {
    for (const std::string suite : {"agreement", "smoothness"}) {
      auto serial = run_check_suite(suite, false);
      auto parallel = run_check_suite(suite, true);
      REQUIRE(serial.size() == parallel.size());
      for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].name == parallel[i].name);
        CHECK(serial[i].pass == parallel[i].pass);
        CHECK(serial[i].detail == parallel[i].detail);
      }
    }
  }
}
