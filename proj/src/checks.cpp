#include "dejonq/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "dejonq/counts.hpp"
#include "dejonq/degen.hpp"
#include "dejonq/llseries.hpp"
#include "dejonq/parallel.hpp"
#include "dejonq/sweep.hpp"
#include "dejonq/twists.hpp"

namespace dejonq {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CheckResult timed(const std::string& name, const std::function<std::string()>& body) {
  CheckResult r;
  r.name = name;
  auto start = Clock::now();
  try {
    std::string failure = body();
    r.pass = failure.empty();
    r.detail = failure.empty() ? "ok" : failure;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.millis = elapsed_ms(start);
  return r;
}

// ---------------------------------------------------------------------------
// Naive expansion oracle: untruncated map-based polynomials, truncated only
// when compared.  Kept independent of TruncatedSeries on purpose.

using NaivePoly = std::map<std::vector<int>, Int>;

NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

NaivePoly naive_pow(const NaivePoly& base, long long e, std::size_t nvars) {
  NaivePoly r{{std::vector<int>(nvars, 0), Int(1)}};
  for (long long i = 0; i < e; ++i) r = naive_mul(r, base);
  return r;
}

Series truncate_naive(const NaivePoly& p, const std::vector<int>& caps) {
  Series s(caps);
  for (const auto& [m, c] : p) {
    bool keep = true;
    for (std::size_t i = 0; i < caps.size(); ++i)
      if (m[i] > caps[i]) {
        keep = false;
        break;
      }
    if (keep) s.add_term(MultiIndex(m), c);
  }
  return s;
}

Series random_series(std::mt19937_64& rng, const std::vector<int>& caps,
                     bool unit_constant) {
  Series s(caps);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> nterms(1, 6);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    MultiIndex m = MultiIndex::zero(caps.size());
    for (std::size_t i = 0; i < caps.size(); ++i)
      m.e[i] = std::uniform_int_distribution<int>(0, caps[i])(rng);
    s.add_term(m, Int(coeff(rng)));
  }
  if (unit_constant) {
    Int c0 = s.constant_term();
    s.add_term(MultiIndex::zero(caps.size()), Int(1) - c0);
  }
  return s;
}

NaivePoly to_naive(const Series& s) {
  NaivePoly p;
  for (const auto& [m, c] : s.terms()) p[m.e] = c;
  return p;
}

// ---------------------------------------------------------------------------
// Random problems with expected dimension exactly zero: r = sum (a_i - 1) d_i
// is automatically in [0, d].

DJProblem random_zero_dim_problem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kdist(1, 4), adist(1, 4), ddist(1, 3),
      gdist(0, 12);
  while (true) {
    int k = kdist(rng);
    std::vector<long long> mu1, mu2;
    long long d = 0, n = 0;
    for (int i = 0; i < k; ++i) {
      mu1.push_back(adist(rng));
      mu2.push_back(ddist(rng));
      d += mu1.back() * mu2.back();
      n += mu2.back();
    }
    long long r = d - n;
    if (static_cast<long long>(mu1.size()) > d) continue;
    return DJProblem(gdist(rng), r, d, std::move(mu1), std::move(mu2));
  }
}

// ---------------------------------------------------------------------------
// Brute-force twist oracle.

std::vector<Twist> brute_force_twists(const DualGraph& graph, long long lo,
                                      long long hi) {
  std::vector<const GraphEdge*> live;
  for (const auto& e : graph.edges())
    if (e.u != e.v) live.push_back(&e);
  std::vector<Twist> found;
  std::vector<long long> value(live.size(), lo);

  auto satisfies_degrees = [&](const Twist& t) {
    for (const auto& v : graph.vertices()) {
      long long lhs = graph.marking_weight(v.id);
      for (const auto* e : live)
        if (e->u == v.id || e->v == v.id) lhs += t.at(e->id, v.id);
      if (lhs != graph.degree_of(v.id)) return false;
    }
    return true;
  };

  while (true) {
    Twist t;
    for (std::size_t i = 0; i < live.size(); ++i) {
      t.values[{live[i]->id, live[i]->u}] = value[i];
      t.values[{live[i]->id, live[i]->v}] = -value[i];
    }
    if (satisfies_degrees(t) && validate_twist(graph, t).valid)
      found.push_back(std::move(t));

    std::size_t pos = 0;
    while (pos < live.size() && value[pos] == hi) value[pos++] = lo;
    if (pos == live.size()) break;
    ++value[pos];
  }
  std::sort(found.begin(), found.end(),
            [](const Twist& a, const Twist& b) { return a.values < b.values; });
  return found;
}

DualGraph random_small_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vdist(1, 4), gdist(0, 2);
  int n = vdist(rng);
  std::vector<GraphVertex> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back({i, gdist(rng)});

  std::vector<GraphEdge> edges;
  int eid = 0;
  for (int i = 1; i < n; ++i) {  // random spanning tree
    int parent = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.push_back({eid++, parent, i});
  }
  int extra = std::uniform_int_distribution<int>(0, n == 1 ? 0 : 2)(rng);
  while (extra-- > 0 && edges.size() < 5) {
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v) continue;
    edges.push_back({eid++, u, v});
  }

  std::vector<Marking> markings;
  int nmarks = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < nmarks; ++i)
    markings.push_back({std::uniform_int_distribution<int>(0, n - 1)(rng),
                        std::uniform_int_distribution<int>(1, 3)(rng), 1});

  // Half the time perturb a feasible multidegree, half the time draw freely;
  // both feasible and infeasible systems must show up.
  std::map<int, long long> multidegree;
  DualGraph bare(vertices, edges, markings);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    for (const auto& v : vertices) multidegree[v.id] = bare.marking_weight(v.id);
    if (n > 1) {
      int from = std::uniform_int_distribution<int>(0, n - 1)(rng);
      int to = std::uniform_int_distribution<int>(0, n - 1)(rng);
      long long amount = std::uniform_int_distribution<int>(0, 3)(rng);
      multidegree[from] -= amount;
      multidegree[to] += amount;
    }
  } else {
    for (const auto& v : vertices)
      multidegree[v.id] = std::uniform_int_distribution<int>(-3, 3)(rng);
  }
  return DualGraph(vertices, edges, markings, multidegree);
}

std::string compare_solver_with_oracle(const DualGraph& graph, long long lo,
                                       long long hi) {
  TwistSolution sol = solve_twists(graph);
  std::vector<Twist> oracle = brute_force_twists(graph, lo, hi);
  if (sol.status == TwistSolution::Status::Infeasible) {
    if (!oracle.empty()) return "solver reports infeasible but oracle found twists";
    return "";
  }
  std::vector<Twist> mine = enumerate_solutions(graph, sol, lo, hi);
  if (mine.size() != oracle.size()) {
    std::ostringstream os;
    os << "solution sets differ: solver " << mine.size() << " vs oracle "
       << oracle.size();
    return os.str();
  }
  for (std::size_t i = 0; i < mine.size(); ++i)
    if (mine[i].values != oracle[i].values) return "solution sets differ in values";
  return "";
}

std::string join_failures(const std::vector<std::string>& failures,
                          std::size_t limit = 3) {
  std::vector<std::string> nonempty;
  for (const auto& f : failures)
    if (!f.empty()) nonempty.push_back(f);
  if (nonempty.empty()) return "";
  std::ostringstream os;
  os << nonempty.size() << " failure(s): ";
  for (std::size_t i = 0; i < std::min(limit, nonempty.size()); ++i)
    os << (i ? "; " : "") << nonempty[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// Suites.

std::vector<CheckResult> suite_classical(bool parallel) {
  std::vector<CheckResult> out;

  out.push_back(timed("flex-count", [&]() -> std::string {
    DJProblem flex(1, 2, 3, {3}, {1});
    Int c = dejonquieres_count(flex);
    if (c != 9) return "expected 9, got " + to_string(c);
    return "";
  }));

  out.push_back(timed("hurwitz-suite", [&]() -> std::string {
    auto problems = hurwitz_family({0, 5}, {2, 8});
    auto rows = run_sweep(problems, parallel);
    for (const auto& row : rows) {
      Int expected = make_int(2 * row.problem.d + 2 * row.problem.g - 2);
      if (!row.counted || row.count != expected)
        return "g=" + std::to_string(row.problem.g) +
               " d=" + std::to_string(row.problem.d) + ": expected " +
               to_string(expected) + ", got " +
               (row.counted ? to_string(row.count) : row.error);
    }
    return "";
  }));

  out.push_back(timed("theta-suite", [&]() -> std::string {
    auto problems = theta_family({2, 6});
    auto rows = run_sweep(problems, parallel);
    for (const auto& row : rows) {
      Int expected = (Int(1) << (row.problem.g - 1)) *
                     ((Int(1) << row.problem.g) - 1);
      if (!row.counted || row.count != expected)
        return "g=" + std::to_string(row.problem.g) + ": expected " +
               to_string(expected) + ", got " +
               (row.counted ? to_string(row.count) : row.error);
    }
    return "";
  }));

  return out;
}

std::vector<CheckResult> suite_series(bool parallel) {
  std::vector<CheckResult> out;

  out.push_back(timed("ring-laws", [&]() -> std::string {
    std::mt19937_64 rng(0x5eedcafe);
    for (int iter = 0; iter < 300; ++iter) {
      std::vector<int> caps(std::uniform_int_distribution<int>(1, 3)(rng));
      for (auto& c : caps) c = std::uniform_int_distribution<int>(1, 4)(rng);
      Series a = random_series(rng, caps, false);
      Series b = random_series(rng, caps, false);
      Series c = random_series(rng, caps, false);
      if ((a * b) * c != a * (b * c)) return "associativity failed";
      if (a * b != b * a) return "commutativity failed";
      if (a * (b + c) != a * b + a * c) return "distributivity failed";
    }
    return "";
  }));

  out.push_back(timed("inverse-power-identity", [&]() -> std::string {
    std::mt19937_64 rng(0xfeedbee5);
    for (int iter = 0; iter < 200; ++iter) {
      std::vector<int> caps(std::uniform_int_distribution<int>(1, 3)(rng));
      for (auto& c : caps) c = std::uniform_int_distribution<int>(1, 4)(rng);
      Series s = random_series(rng, caps, true);
      long long m = std::uniform_int_distribution<int>(0, 4)(rng);
      if (s.pow(m) * s.pow(-m) != Series::one(caps))
        return "pow(m) * pow(-m) != 1";
    }
    return "";
  }));

  out.push_back(timed("naive-expansion-oracle", [&]() -> std::string {
    const int trials = 1000;
    std::vector<std::string> failures(trials);
    parallel_for(trials, parallel, [&](std::size_t i) {
      std::mt19937_64 rng(0xabcd0000 + i);
      std::vector<int> caps(std::uniform_int_distribution<int>(1, 3)(rng));
      for (auto& c : caps) c = std::uniform_int_distribution<int>(1, 4)(rng);
      Series a = random_series(rng, caps, false);
      Series b = random_series(rng, caps, false);
      if (a * b != truncate_naive(naive_mul(to_naive(a), to_naive(b)), caps)) {
        failures[i] = "product disagrees with naive expansion";
        return;
      }
      Series u = random_series(rng, caps, true);
      long long e = std::uniform_int_distribution<int>(0, 3)(rng);
      if (u.pow(e) != truncate_naive(naive_pow(to_naive(u), e, caps.size()), caps))
        failures[i] = "power disagrees with naive expansion";
    });
    return join_failures(failures);
  }));

  return out;
}

std::vector<CheckResult> suite_agreement(bool parallel) {
  std::vector<CheckResult> out;
  out.push_back(timed("formula-agreement-500", [&]() -> std::string {
    const int trials = 500;
    std::vector<std::string> failures(trials);
    parallel_for(trials, parallel, [&](std::size_t i) {
      std::mt19937_64 rng(0x90210000 + i);
      DJProblem p = random_zero_dim_problem(rng);
      Int via_formula = dejonquieres_count_ordered(p);
      Int via_class = restricted_class_coefficient(p.g, p.d, p.mu1, p.mu2);
      if (via_formula != via_class)
        failures[i] = "disagreement at g=" + std::to_string(p.g) +
                      " r=" + std::to_string(p.r) + " d=" + std::to_string(p.d);
    });
    return join_failures(failures);
  }));
  return out;
}

// All partition pairs of weight d with length in [max(0, d-r), cap].
std::vector<DJProblem> partitions_for_target(long long g, long long r, long long d,
                                             long long length_cap) {
  if (d - r > length_cap) return {};  // no partition can reach N >= d - r
  auto all = grid_family({g, g}, {r, r}, {d, d}, length_cap);
  std::vector<DJProblem> keep;
  for (auto& p : all) {
    long long n = p.length();
    if (n <= length_cap && n - d + r >= 0) keep.push_back(std::move(p));
  }
  return keep;
}

std::vector<CheckResult> suite_degeneration(bool parallel) {
  std::vector<CheckResult> out;

  auto sweep_body = [&](std::vector<std::pair<DegenerationData, DJProblem>> jobs)
      -> std::string {
    std::vector<std::string> failures(jobs.size());
    parallel_for(jobs.size(), parallel, [&](std::size_t i) {
      const auto& [dd, p] = jobs[i];
      CaseAnalysis ca = enumerate_case_analysis(dd, p);
      std::ostringstream id;
      id << "g=" << dd.g << " r=" << dd.r << " d=" << dd.d << " N=" << p.length();
      if (!ca.has_feasible)
        failures[i] = id.str() + ": no feasible case";
      else if (ca.max_total != ca.expdim)
        failures[i] = id.str() + ": max bound " + std::to_string(ca.max_total) +
                      " != " + std::to_string(ca.expdim);
    });
    return join_failures(failures);
  };

  out.push_back(timed("rho-zero-case-sweep", [&]() -> std::string {
    std::vector<std::pair<DegenerationData, DJProblem>> jobs;
    for (long long r = 1; r <= 6; ++r)
      for (long long s = 2; s <= 6; ++s) {
        DegenerationData dd = build_rho_zero_degeneration(r, s);
        for (auto& p : partitions_for_target(dd.g, dd.r, dd.d, 12))
          jobs.emplace_back(dd, std::move(p));
      }
    if (jobs.empty()) return "empty sweep";
    return sweep_body(std::move(jobs));
  }));

  out.push_back(timed("rho-step-case-sweep", [&]() -> std::string {
    std::vector<std::pair<DegenerationData, DJProblem>> jobs;
    for (long long r = 1; r <= 6; ++r)
      for (long long s = 2; s <= 6; ++s)
        for (long long rho = 1; rho <= 4; ++rho) {
          long long g = rho + (r + 1) * s;
          long long d = g + r - s;
          DegenerationData dd = build_rho_step_degeneration(g, r, d);
          for (auto& p : partitions_for_target(dd.g, dd.r, dd.d, 12))
            jobs.emplace_back(dd, std::move(p));
        }
    if (jobs.empty()) return "empty sweep";
    return sweep_body(std::move(jobs));
  }));

  out.push_back(timed("construction-invariants", [&]() -> std::string {
    for (long long r = 1; r <= 6; ++r)
      for (long long s = 2; s <= 6; ++s) {
        DegenerationData dd = build_rho_zero_degeneration(r, s);
        if (refined_compatible(dd.c1.aspect_vanishing, dd.c2.aspect_vanishing,
                               dd.d) != Compatibility::Refined)
          return "rho-zero aspects not refined";
        for (long long rho = 1; rho <= 4; ++rho) {
          long long g = rho + (r + 1) * s;
          DegenerationData step = build_rho_step_degeneration(g, r, g + r - s);
          if (refined_compatible(step.c1.aspect_vanishing,
                                 step.c2.aspect_vanishing,
                                 step.d) != Compatibility::Refined)
            return "rho-step aspects not refined";
        }
      }
    return "";
  }));

  return out;
}

std::vector<CheckResult> suite_smoothness(bool parallel) {
  std::vector<CheckResult> out;
  out.push_back(timed("inequality-chain-grid", [&]() -> std::string {
    struct Cell {
      long long r, s, g;
    };
    std::vector<Cell> cells;
    for (long long r = 3; r <= 12; ++r)
      for (long long s = 2; s <= 12; ++s)
        for (long long g : {(r + 1) * s, (r + 1) * s + 1, (r + 1) * s + 7})
          cells.push_back({r, s, g});
    std::vector<std::string> failures(cells.size());
    parallel_for(cells.size(), parallel, [&](std::size_t i) {
      auto [r, s, g] = cells[i];
      long long d = g + r - s;
      SmoothnessReport rep = smoothness_inequality_check(g, r, d, d - r + 1);
      std::ostringstream id;
      id << "(r=" << r << ",s=" << s << ",g=" << g << ")";
      if (!rep.contradiction_achieved)
        failures[i] = id.str() + ": contradiction not achieved";
      else if (!rep.final_inequality)
        failures[i] = id.str() + ": final inequality fails";
      else if (!rep.genus_chain)
        failures[i] = id.str() + ": genus chain fails";
      else if (!rep.case2_contradiction)
        failures[i] = id.str() + ": large-length case fails";
    });
    return join_failures(failures);
  }));

  out.push_back(timed("sqrt-bound-grid", [&]() -> std::string {
    // The discriminant bound disc <= (2s+r-3)^2 holds for s >= 3 but fails on
    // the whole s = 2 line (disc - (2s+r-3)^2 = 8 - 4(s-2)(s+r-1) there); the
    // contradiction itself never relies on it, as the direct root comparison
    // verified above shows.  Pin the exact truth of the bound.
    for (long long r = 3; r <= 10; ++r)
      for (long long s = 2; s <= 10; ++s) {
        long long g = (r + 1) * s, d = g + r - s;
        SmoothnessReport rep = smoothness_inequality_check(g, r, d, d - r + 1);
        if (rep.sqrt_bound != (s >= 3))
          return "sqrt bound verdict off at r=" + std::to_string(r) +
                 " s=" + std::to_string(s);
        if (!rep.variant_s_sr.contradiction)
          return "direct root comparison fails at r=" + std::to_string(r) +
                 " s=" + std::to_string(s);
      }
    return "";
  }));

  return out;
}

std::vector<CheckResult> suite_twists(bool parallel) {
  std::vector<CheckResult> out;

  out.push_back(timed("solver-oracle-200", [&]() -> std::string {
    const int trials = 200;
    std::vector<std::string> failures(trials);
    parallel_for(trials, parallel, [&](std::size_t i) {
      std::mt19937_64 rng(0x70150000ULL + i);
      DualGraph g = random_small_graph(rng);
      failures[i] = compare_solver_with_oracle(g, -6, 6);
    });
    return join_failures(failures);
  }));

  out.push_back(timed("chain-fixture-structure", [&]() -> std::string {
    // Genus 4 spine, four marked points, multiplicities summing to d = 7.
    DualGraph fixture = chain_fixture(4, {2, 2, 2, 1}, 2);
    if (!is_quasi_stable(fixture)) return "fixture is not quasi-stable";
    TwistSolution sol = solve_twists(fixture);
    if (sol.status != TwistSolution::Status::Feasible)
      return "fixture system should be feasible";
    if (sol.basis.size() != 1)
      return "expected a one-parameter family, rank " +
             std::to_string(sol.basis.size());
    SpineEndAnalysis ends = analyze_spine_ends(fixture, sol);
    if (!ends.applicable) return "end analysis not applicable";
    if (ends.end_sum != 6) return "end twists must sum to d-1 = 6";
    if (ends.both_zero_possible) return "both end twists vanish simultaneously";
    if (!ends.zero_param1 || !ends.zero_param2)
      return "each end twist should vanish at some parameter";
    return "";
  }));

  return out;
}

std::vector<CheckResult> suite_negative(bool parallel) {
  std::vector<CheckResult> out;

  out.push_back(timed("positive-reduction-200", [&]() -> std::string {
    const int trials = 200;
    std::vector<std::string> failures(trials);
    parallel_for(trials, parallel, [&](std::size_t i) {
      std::mt19937_64 rng(0x4e470000 + i);
      // All-positive partitions of d with d < 2g-2 so the section count is
      // the completeness case r + 1.
      std::uniform_int_distribution<int> ndist(1, 5), adist(1, 3);
      int n1 = ndist(rng);
      std::vector<long long> mu;
      long long d = 0;
      for (int j = 0; j < n1; ++j) {
        mu.push_back(adist(rng));
        d += mu.back();
      }
      long long g = d / 2 + 2 + std::uniform_int_distribution<int>(0, 8)(rng);
      long long r = std::uniform_int_distribution<int>(0, 3)(rng);
      SignedPartitionExtension ext = negative_partition_extend(g, r, d, mu, false);
      std::vector<long long> ones(mu.size(), 1);
      DJProblem p(g, r, d, mu, ones);
      if (ext.expdim != expected_dimension(p))
        failures[i] = "reduction disagrees with expected_dimension";
      if (ext.d_prime != d || ext.r_prime != r)
        failures[i] = "degenerate reduction should be the identity";
    });
    return join_failures(failures);
  }));

  out.push_back(timed("h0-case-table", [&]() -> std::string {
    // d' = 2g-2 canonical.
    auto canonical = negative_partition_extend(3, 1, 2, {2, 2, -2}, true);
    if (canonical.h0 != 3 || canonical.r_prime != 2)
      return "canonical case: expected h0 = g";
    if (canonical.positive_bound != 2 - 3 + 1)
      return "canonical case: bound must be n1 - g + 1";
    // d' = 2g-2, bundle not canonical.
    auto critical = negative_partition_extend(3, 0, 2, {2, 2, -2}, false);
    if (critical.h0 != 2 || critical.r_prime != 1)
      return "critical case: expected h0 = g - 1";
    if (critical.expdim != 0) return "critical case: expected dimension 0";
    if (critical.positive_bound != 2 - 3)
      return "critical case: bound must be n1 - g";
    // d' > 2g-2.
    auto large = negative_partition_extend(2, 1, 3, {3, 2, -2}, false);
    if (large.d_prime != 5 || large.h0 != 5 - 2 + 1)
      return "large-degree case: expected h0 = d' - g + 1";
    if (large.positive_bound != 2 - 2)
      return "large-degree case: bound must be n1 - g";
    // d' < 2g-2.
    auto small = negative_partition_extend(6, 1, 4, {3, 2, 1, -2}, false);
    if (small.h0 != 1 + 2 + 1) return "small-degree case: expected h0 = r + b + 1";
    if (small.positive_bound != 3 - 4 + 1)
      return "small-degree case: bound must be n1 - d + r";
    return "";
  }));

  return out;
}

}  // namespace

DualGraph chain_fixture(long long genus, const std::vector<long long>& mu,
                        std::size_t exceptional_position) {
  const std::size_t n = mu.size();
  if (n == 0) throw precondition_error("chain fixture needs marked points");
  if (exceptional_position > n)
    throw precondition_error("exceptional position out of range");
  long long d = 0;
  for (long long a : mu) d += a;

  // Spine id 0 of genus g-1, then the rational chain 1 .. n+1 closing back
  // onto the spine.
  std::vector<GraphVertex> vertices{{0, genus - 1}};
  for (std::size_t j = 1; j <= n + 1; ++j)
    vertices.push_back({static_cast<int>(j), 0});
  std::vector<GraphEdge> edges;
  edges.push_back({0, 0, 1});
  for (std::size_t j = 1; j <= n; ++j)
    edges.push_back({static_cast<int>(j), static_cast<int>(j),
                     static_cast<int>(j + 1)});
  edges.push_back({static_cast<int>(n + 1), static_cast<int>(n + 1), 0});

  std::vector<Marking> markings;
  std::size_t mi = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    if (j == exceptional_position) continue;
    markings.push_back({static_cast<int>(j + 1), mu[mi++], 1});
  }

  std::map<int, long long> multidegree;
  multidegree[0] = d - 1;
  for (std::size_t j = 1; j <= n + 1; ++j) multidegree[static_cast<int>(j)] = 0;
  multidegree[static_cast<int>(exceptional_position + 1)] = 1;
  return DualGraph(vertices, edges, markings, multidegree);
}

std::vector<std::string> check_suite_names() {
  return {"classical", "series",     "agreement", "degeneration",
          "smoothness", "twists",    "negative"};
}

std::vector<CheckResult> run_check_suite(const std::string& suite, bool parallel) {
  if (suite == "classical") return suite_classical(parallel);
  if (suite == "series") return suite_series(parallel);
  if (suite == "agreement") return suite_agreement(parallel);
  if (suite == "degeneration") return suite_degeneration(parallel);
  if (suite == "smoothness") return suite_smoothness(parallel);
  if (suite == "twists") return suite_twists(parallel);
  if (suite == "negative") return suite_negative(parallel);
  throw precondition_error("unknown check suite: " + suite);
}

std::vector<CheckResult> run_all_checks(bool parallel) {
  std::vector<CheckResult> out;
  for (const auto& name : check_suite_names()) {
    auto part = run_check_suite(name, parallel);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace dejonq
