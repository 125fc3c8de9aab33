#include "dejonq/sweep.hpp"

#include <algorithm>
#include <functional>

#include "dejonq/errors.hpp"
#include "dejonq/parallel.hpp"

namespace dejonq {

std::vector<DJProblem> hurwitz_family(Range g, Range d) {
  std::vector<DJProblem> out;
  for (long long gv = g.lo; gv <= g.hi; ++gv)
    for (long long dv = d.lo; dv <= d.hi; ++dv) {
      if (dv < 2) continue;
      std::vector<long long> mu1(dv - 1, 1), mu2(dv - 1, 1);
      mu1[0] = 2;
      out.emplace_back(gv, 1, dv, std::move(mu1), std::move(mu2));
    }
  return out;
}

std::vector<DJProblem> theta_family(Range g) {
  std::vector<DJProblem> out;
  for (long long gv = std::max(g.lo, 2LL); gv <= g.hi; ++gv) {
    std::vector<long long> mu1(gv - 1, 2), mu2(gv - 1, 1);
    out.emplace_back(gv, gv - 1, 2 * gv - 2, std::move(mu1), std::move(mu2));
  }
  return out;
}

namespace {

// Multisets of pairs (a, delta) with sum a*delta = remaining, each pair
// lexicographically <= bound, appended to mu1/mu2 in non-increasing order.
void enumerate_pairs(long long remaining, std::pair<long long, long long> bound,
                     long long parts_left, std::vector<long long>& mu1,
                     std::vector<long long>& mu2,
                     const std::function<void()>& emit) {
  if (remaining == 0) {
    if (!mu1.empty()) emit();
    return;
  }
  if (parts_left == 0) return;
  for (long long a = std::min(bound.first, remaining); a >= 1; --a) {
    long long dmax = remaining / a;
    if (a == bound.first) dmax = std::min(dmax, bound.second);
    for (long long delta = dmax; delta >= 1; --delta) {
      mu1.push_back(a);
      mu2.push_back(delta);
      enumerate_pairs(remaining - a * delta, {a, delta}, parts_left - 1, mu1, mu2,
                      emit);
      mu1.pop_back();
      mu2.pop_back();
    }
  }
}

}  // namespace

std::vector<DJProblem> grid_family(Range g, Range r, Range d, long long max_parts) {
  std::vector<DJProblem> out;
  for (long long gv = g.lo; gv <= g.hi; ++gv)
    for (long long rv = r.lo; rv <= r.hi; ++rv)
      for (long long dv = std::max(d.lo, 1LL); dv <= d.hi; ++dv) {
        std::vector<long long> mu1, mu2;
        enumerate_pairs(dv, {dv, dv}, std::min(max_parts, dv), mu1, mu2, [&] {
          out.emplace_back(gv, rv, dv, mu1, mu2);
        });
      }
  return out;
}

std::vector<SweepRow> run_sweep(const std::vector<DJProblem>& problems,
                                bool parallel) {
  std::vector<SweepRow> rows(problems.size());
  parallel_for(problems.size(), parallel, [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.problem = problems[i];
    row.expdim = expected_dimension(row.problem);
    if (row.expdim != 0) return;
    try {
      row.ordered = dejonquieres_count_ordered(row.problem);
      row.symmetry = symmetry_factor(row.problem.mu1, row.problem.mu2);
      row.count = dejonquieres_count(row.problem);
      row.counted = true;
    } catch (const error& e) {
      row.error = e.what();
    }
  });
  return rows;
}

}  // namespace dejonq
