// Serial vs OpenMP comparison for the sweep kernels.  Each task runs both
// paths on identical inputs, verifies the outputs agree, and reports the
// timings.  Thread count comes from OMP_NUM_THREADS.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dejonq/checks.hpp"
#include "dejonq/counts.hpp"
#include "dejonq/degen.hpp"
#include "dejonq/parallel.hpp"
#include "dejonq/sweep.hpp"

namespace {

using dejonq::Int;

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct Task {
  std::string name;
  // Returns a digest of the result so the two paths can be compared.
  std::function<Int(bool parallel)> run;
};

Int digest_rows(const std::vector<dejonq::SweepRow>& rows) {
  Int h = 0;
  for (const auto& row : rows)
    h = h * 1000003 + (row.counted ? row.count : Int(-1));
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;

  std::vector<Task> tasks;

  tasks.push_back({"classical-families", [](bool parallel) {
                     auto problems = dejonq::hurwitz_family({0, 8}, {2, 9});
                     auto theta = dejonq::theta_family({2, 11});
                     problems.insert(problems.end(), theta.begin(), theta.end());
                     return digest_rows(dejonq::run_sweep(problems, parallel));
                   }});

  tasks.push_back({"grid-d8", [](bool parallel) {
                     auto problems =
                         dejonq::grid_family({0, 6}, {0, 4}, {2, 8}, 8);
                     return digest_rows(dejonq::run_sweep(problems, parallel));
                   }});

  tasks.push_back({"case-analysis-sweep", [](bool parallel) {
                     Int h = 0;
                     std::vector<std::pair<long long, long long>> grid;
                     for (long long r = 1; r <= 6; ++r)
                       for (long long s = 2; s <= 6; ++s) grid.emplace_back(r, s);
                     std::vector<long long> partial(grid.size(), 0);
                     dejonq::parallel_for(grid.size(), parallel, [&](std::size_t i) {
                       auto [r, s] = grid[i];
                       auto dd = dejonq::build_rho_zero_degeneration(r, s);
                       if (dd.d - dd.r > 12) return;
                       auto problems = dejonq::grid_family(
                           {dd.g, dd.g}, {dd.r, dd.r}, {dd.d, dd.d}, 12);
                       long long acc = 0;
                       for (const auto& p : problems) {
                         if (dejonq::expected_dimension(p) < 0) continue;
                         if (p.length() > 12) continue;
                         auto ca = dejonq::enumerate_case_analysis(dd, p);
                         acc = acc * 31 + ca.max_total + ca.cases.size();
                       }
                       partial[i] = acc;
                     });
                     for (long long v : partial)
                       h = h * 1000003 + dejonq::make_int(v);
                     return h;
                   }});

  std::printf("%-22s %10s %10s %8s  (threads: %d, reps: %d)\n", "task",
              "serial ms", "openmp ms", "speedup", dejonq::worker_count(), reps);
  for (auto& task : tasks) {
    Int serial_digest = 0, parallel_digest = 0;
    double best_serial = 1e300, best_parallel = 1e300;
    for (int i = 0; i < reps; ++i) {
      best_serial =
          std::min(best_serial, time_ms([&] { serial_digest = task.run(false); }));
      best_parallel = std::min(best_parallel,
                               time_ms([&] { parallel_digest = task.run(true); }));
    }
    bool same = serial_digest == parallel_digest;
    std::printf("%-22s %10.1f %10.1f %7.2fx  %s\n", task.name.c_str(), best_serial,
                best_parallel, best_serial / best_parallel,
                same ? "" : "OUTPUT MISMATCH");
    if (!same) return 1;
  }
  return 0;
}
