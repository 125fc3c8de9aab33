#include "dejonq/twists.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "dejonq/bigint.hpp"

namespace dejonq {

namespace {

std::string pair_name(int edge, int vertex) {
  return "(q" + std::to_string(edge) + ",C" + std::to_string(vertex) + ")";
}

// Diagonalization U * A * W = D over the integers with both transforms
// tracked; enough structure to solve A x = b exactly and read off an integer
// kernel basis.  Matrices are tiny (one row per component), so the classic
// elimination with minimal pivots is plenty.
struct DiagonalizedSystem {
  std::vector<std::vector<Int>> d, u, w;
  std::size_t rows, cols;
};

DiagonalizedSystem diagonalize(std::vector<std::vector<Int>> a) {
  DiagonalizedSystem s;
  s.rows = a.size();
  s.cols = s.rows ? a[0].size() : 0;
  s.d = std::move(a);
  s.u.assign(s.rows, std::vector<Int>(s.rows, 0));
  s.w.assign(s.cols, std::vector<Int>(s.cols, 0));
  for (std::size_t i = 0; i < s.rows; ++i) s.u[i][i] = 1;
  for (std::size_t j = 0; j < s.cols; ++j) s.w[j][j] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(s.d[i], s.d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : s.d) std::swap(row[i], row[j]);
    for (auto& row : s.w) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < s.cols; ++j) s.d[dst][j] += f * s.d[src][j];
    for (std::size_t j = 0; j < s.rows; ++j) s.u[dst][j] += f * s.u[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < s.rows; ++i) s.d[i][dst] += f * s.d[i][src];
    for (std::size_t i = 0; i < s.cols; ++i) s.w[i][dst] += f * s.w[i][src];
  };

  const std::size_t steps = std::min(s.rows, s.cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Minimal nonzero pivot in the remaining block.
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < s.rows; ++i)
        for (std::size_t j = t; j < s.cols; ++j)
          if (s.d[i][j] != 0 && (best == 0 || cmp(abs(s.d[i][j]), abs(best)) < 0)) {
            best = s.d[i][j];
            pi = i;
            pj = j;
          }
      if (best == 0) return s;
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows; ++i)
        if (s.d[i][t] != 0) {
          Int q = s.d[i][t] / s.d[t][t];
          add_row(i, t, -q);
          if (s.d[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < s.cols; ++j)
        if (s.d[t][j] != 0) {
          Int q = s.d[t][j] / s.d[t][t];
          add_col(j, t, -q);
          if (s.d[t][j] != 0) clean = false;
        }
      if (clean) break;
    }
  }
  return s;
}

long long to_ll(const Int& v) {
  if (!v.fits_slong_p()) throw error("twist value exceeds machine range");
  return v.get_si();
}

Int det(const std::vector<std::vector<Int>>& m) {
  const std::size_t sz = m.size();
  if (sz == 1) return m[0][0];
  if (sz == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Int total = 0;
  for (std::size_t j = 0; j < sz; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < sz; ++i) {
      std::vector<Int> row;
      for (std::size_t j2 = 0; j2 < sz; ++j2)
        if (j2 != j) row.push_back(m[i][j2]);
      minor.push_back(std::move(row));
    }
    Int term = m[0][j] * det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

long long Twist::at(int edge_id, int vertex_id) const {
  auto it = values.find({edge_id, vertex_id});
  if (it == values.end())
    throw shape_error("twist has no value at " + pair_name(edge_id, vertex_id));
  return it->second;
}

TwistValidation validate_twist(const DualGraph& graph, const Twist& twist) {
  TwistValidation result;
  auto report = [&](int axiom, std::string detail) {
    result.valid = false;
    result.violations.push_back({axiom, std::move(detail)});
  };

  for (const auto& e : graph.edges()) {
    if (e.u == e.v) continue;  // self-nodes are outside the twist domain
    if (!twist.values.count({e.id, e.u}) || !twist.values.count({e.id, e.v}))
      throw shape_error("twist undefined on node " + std::to_string(e.id));
    long long tu = twist.at(e.id, e.u), tv = twist.at(e.id, e.v);
    if (tu != -tv)
      report(1, pair_name(e.id, e.u) + " = " + std::to_string(tu) + " but " +
                    pair_name(e.id, e.v) + " = " + std::to_string(tv));
  }

  // Axiom 2: parallel nodes carry the same value from each side.
  const auto& vs = graph.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto ids = graph.edges_between(vs[i].id, vs[j].id);
      for (std::size_t k = 1; k < ids.size(); ++k) {
        long long first = twist.at(ids[0], vs[i].id);
        long long cur = twist.at(ids[k], vs[i].id);
        if (first != cur)
          report(2, "nodes " + std::to_string(ids[0]) + " and " +
                        std::to_string(ids[k]) + " join C" +
                        std::to_string(vs[i].id) + ", C" + std::to_string(vs[j].id) +
                        " with values " + std::to_string(first) + " != " +
                        std::to_string(cur));
      }
    }

  // Axiom 3, quantified verbatim over component quadruples.
  for (const auto& c : vs)
    for (const auto& cp : vs)
      for (const auto& ch : vs)
        for (const auto& chp : vs) {
          if (c.id == ch.id || cp.id == chp.id || c.id == cp.id ||
              ch.id == chp.id)
            continue;
          auto qc = graph.edges_between(c.id, ch.id);
          auto qcp = graph.edges_between(cp.id, chp.id);
          auto q = graph.edges_between(c.id, cp.id);
          auto qh = graph.edges_between(ch.id, chp.id);
          for (int e1 : qc)
            for (int e2 : qcp) {
              if (twist.at(e1, c.id) != 0 || twist.at(e2, cp.id) != 0) continue;
              for (int e3 : q)
                for (int e4 : qh)
                  if (twist.at(e3, c.id) != twist.at(e4, ch.id))
                    report(3, "zero twists at " + pair_name(e1, c.id) + ", " +
                                  pair_name(e2, cp.id) + " but " +
                                  pair_name(e3, c.id) + " = " +
                                  std::to_string(twist.at(e3, c.id)) +
                                  " != " + pair_name(e4, ch.id) + " = " +
                                  std::to_string(twist.at(e4, ch.id)));
            }
        }

  return result;
}

bool is_quasi_stable(const DualGraph& graph) {
  for (const auto& v : graph.vertices()) {
    if (v.genus > 0) continue;
    long long special = graph.node_valence(v.id) + graph.marked_point_count(v.id);
    if (special < 2) return false;  // not semi-stable
    if (special == 2 && graph.marking_count(v.id) > 0)
      return false;  // destabilising but marked, hence not exceptional
  }
  for (const auto& tail : graph.rational_tails())
    for (int vid : tail)
      if (graph.is_exceptional(vid)) return false;
  for (const auto& bridge : graph.rational_bridges()) {
    int exceptional = 0;
    for (int vid : bridge)
      if (graph.is_exceptional(vid)) ++exceptional;
    if (exceptional > 1) return false;
  }
  return true;
}

namespace {

// Far-side component of an edge, excluding the edge itself.
std::set<int> far_component(const DualGraph& graph, const GraphEdge& cut, int near) {
  std::set<int> seen;
  int far = (cut.u == near) ? cut.v : cut.u;
  std::vector<int> stack{far};
  seen.insert(far);
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (const auto& e : graph.edges()) {
      if (e.id == cut.id) continue;
      int other = -1;
      if (e.u == cur) other = e.v;
      if (e.v == cur) other = e.u;
      if (other >= 0 && seen.insert(other).second) stack.push_back(other);
    }
  }
  return seen;
}

// Rational tails hanging off the subcurve, one per attaching node.
long long attached_tail_count(const DualGraph& graph, const std::set<int>& sub) {
  long long t = 0;
  for (const auto& e : graph.edges()) {
    bool inu = sub.count(e.u) > 0, inv = sub.count(e.v) > 0;
    if (inu == inv) continue;
    int near = inu ? e.u : e.v;
    std::set<int> far = far_component(graph, e, near);
    if (far.count(near)) continue;  // edge lies on a cycle
    if (graph.subcurve_genus(far) == 0 && graph.subcurve_attach_count(far) == 1)
      ++t;
  }
  return t;
}

long long attached_zero_bridge_count(const DualGraph& graph,
                                     const std::set<int>& sub) {
  long long b = 0;
  for (const auto& bridge : graph.rational_bridges()) {
    bool disjoint = std::none_of(bridge.begin(), bridge.end(),
                                 [&](int vid) { return sub.count(vid) > 0; });
    if (!disjoint) continue;
    if (graph.subcurve_degree(bridge) != 0) continue;
    long long meets = 0;
    for (const auto& e : graph.edges()) {
      bool inb = bridge.count(e.u) > 0, ins = sub.count(e.v) > 0;
      bool inb2 = bridge.count(e.v) > 0, ins2 = sub.count(e.u) > 0;
      if ((inb && ins) || (inb2 && ins2)) ++meets;
    }
    if (meets == 2) ++b;
  }
  return b;
}

}  // namespace

bool is_balanced(const DualGraph& graph, const std::set<int>& subcurve,
                 long long d, long long g, BalancedConvention convention) {
  if (g <= 1)
    throw precondition_error("balanced inequality needs genus >= 2");
  if (!graph.subcurve_connected(subcurve))
    throw precondition_error("subcurve must be connected");

  long long deg = graph.subcurve_degree(subcurve);

  if (subcurve.size() == 1 && graph.is_exceptional(*subcurve.begin()))
    return deg == 1;
  if (graph.is_rational_bridge(subcurve)) return deg == 0 || deg == 1;
  if (graph.is_rational_tail(subcurve)) return deg == -1;

  // Inequality case: only for subcurves clear of every rational tail/bridge.
  std::set<int> excluded;
  for (const auto& tail : graph.rational_tails())
    excluded.insert(tail.begin(), tail.end());
  for (const auto& bridge : graph.rational_bridges())
    excluded.insert(bridge.begin(), bridge.end());
  for (int vid : subcurve)
    if (excluded.count(vid)) return true;  // no condition applies

  long long gy = graph.subcurve_genus(subcurve);
  long long k = graph.subcurve_attach_count(subcurve);
  long long t = attached_tail_count(graph, subcurve);
  long long b = attached_zero_bridge_count(graph, subcurve);
  long long w = convention == BalancedConvention::LiteralWeight
                    ? 2 * (gy - 2)
                    : 2 * gy - 2 + k;
  // |deg - d(w - t)/(2g-2) - t| <= (k - t - 2b)/2, cleared of denominators.
  long long g2 = 2 * g - 2;
  long long lhs = std::llabs(2 * (deg - t) * g2 - 2 * d * (w - t));
  long long rhs = (k - t - 2 * b) * g2;
  return lhs <= rhs;
}

bool is_balanced_all(const DualGraph& graph, long long d, long long g,
                     BalancedConvention convention) {
  const auto& vs = graph.vertices();
  if (vs.size() > 22)
    throw error("balanced check limited to graphs with <= 22 vertices");
  const std::size_t n = vs.size();
  for (std::size_t mask = 1; mask + 1 < (1ULL << n); ++mask) {
    std::set<int> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) sub.insert(vs[i].id);
    if (!graph.subcurve_connected(sub)) continue;
    if (!is_balanced(graph, sub, d, g, convention)) return false;
  }
  return true;
}

Twist TwistSolution::twist_at(const std::vector<long long>& coeffs) const {
  if (coeffs.size() != basis.size())
    throw shape_error("one coefficient per basis vector is required");
  Twist t;
  for (std::size_t j = 0; j < variables.size(); ++j) {
    long long value = particular[j];
    for (std::size_t b = 0; b < basis.size(); ++b)
      value += coeffs[b] * basis[b][j];
    for (int eid : variables[j].edge_ids) {
      t.values[{eid, variables[j].u}] = value;
      t.values[{eid, variables[j].v}] = -value;
    }
  }
  return t;
}

Twist TwistSolution::particular_twist() const {
  return twist_at(std::vector<long long>(basis.size(), 0));
}

TwistSolution solve_twists(const DualGraph& graph) {
  TwistSolution sol;

  // One variable per adjacent component pair (axiom 2 merges parallel nodes,
  // axiom 1 fixes the far side's sign).
  std::vector<GraphVertex> vs = graph.vertices();
  std::sort(vs.begin(), vs.end(),
            [](const GraphVertex& a, const GraphVertex& b) { return a.id < b.id; });
  std::map<std::pair<int, int>, TwistVariable> varmap;
  for (const auto& e : graph.edges()) {
    if (e.u == e.v) continue;
    int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
    auto& var = varmap[{u, v}];
    var.u = u;
    var.v = v;
    var.multiplicity += 1;
    var.edge_ids.push_back(e.id);
  }
  for (auto& [key, var] : varmap) sol.variables.push_back(var);

  const std::size_t rows = vs.size(), cols = sol.variables.size();
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols, 0));
  std::vector<Int> b(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    b[i] = make_int(graph.degree_of(vs[i].id)) - make_int(graph.marking_weight(vs[i].id));
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& var = sol.variables[j];
      if (var.u == vs[i].id) a[i][j] = make_int(var.multiplicity);
      if (var.v == vs[i].id) a[i][j] = -make_int(var.multiplicity);
    }
  }

  DiagonalizedSystem sys = diagonalize(std::move(a));
  std::vector<Int> c(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) c[i] += sys.u[i][j] * b[j];

  auto make_certificate = [&](std::size_t row, const Int& modulus) {
    InfeasibilityCertificate cert;
    cert.kind = modulus == 0 ? "imbalance" : "divisibility";
    cert.excess = to_ll(c[row]);
    cert.modulus = to_ll(modulus);
    for (std::size_t j = 0; j < rows; ++j)
      if (sys.u[row][j] != 0) {
        cert.vertex_ids.push_back(vs[j].id);
        cert.coefficients.push_back(to_ll(sys.u[row][j]));
      }
    return cert;
  };

  std::vector<Int> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    Int diag = (i < cols) ? sys.d[i][i] : Int(0);
    if (diag == 0) {
      if (c[i] != 0) {
        sol.status = TwistSolution::Status::Infeasible;
        sol.certificate = make_certificate(i, Int(0));
        return sol;
      }
      continue;
    }
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c[i].get_mpz_t(), diag.get_mpz_t());
    if (rem != 0) {
      sol.status = TwistSolution::Status::Infeasible;
      sol.certificate = make_certificate(i, diag);
      return sol;
    }
    y[i] = q;
  }

  sol.status = TwistSolution::Status::Feasible;
  sol.particular.assign(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    Int x = 0;
    for (std::size_t k = 0; k < cols; ++k) x += sys.w[j][k] * y[k];
    sol.particular[j] = to_ll(x);
  }
  for (std::size_t k = 0; k < cols; ++k) {
    bool free_col = (k >= rows) || sys.d[k][k] == 0;
    if (!free_col) continue;
    std::vector<long long> vec(cols, 0);
    for (std::size_t j = 0; j < cols; ++j) vec[j] = to_ll(sys.w[j][k]);
    sol.basis.push_back(std::move(vec));
  }
  return sol;
}

bool admits_dej_divisor(const DualGraph& graph) {
  return solve_twists(graph).status == TwistSolution::Status::Feasible;
}

std::vector<Twist> enumerate_solutions(const DualGraph& graph,
                                       const TwistSolution& sol, long long lo,
                                       long long hi) {
  std::vector<Twist> out;
  if (sol.status != TwistSolution::Status::Feasible) return out;
  const std::size_t n = sol.variables.size(), k = sol.basis.size();

  auto in_box = [&](const std::vector<long long>& x) {
    return std::all_of(x.begin(), x.end(),
                       [&](long long v) { return lo <= v && v <= hi; });
  };
  auto emit = [&](const std::vector<long long>& x) {
    if (!in_box(x)) return;
    Twist t;
    for (std::size_t j = 0; j < n; ++j)
      for (int eid : sol.variables[j].edge_ids) {
        t.values[{eid, sol.variables[j].u}] = x[j];
        t.values[{eid, sol.variables[j].v}] = -x[j];
      }
    if (validate_twist(graph, t).valid) out.push_back(std::move(t));
  };

  if (k == 0) {
    emit(sol.particular);
    return out;
  }

  // Pick k coordinates on which the basis matrix is invertible; every lattice
  // point in the box is determined by its values there, so enumerating the
  // sub-box is exhaustive.
  std::vector<std::size_t> pivot;
  {
    std::vector<std::vector<Int>> m;  // rows appended greedily
    for (std::size_t row = 0; row < n && pivot.size() < k; ++row) {
      std::vector<std::vector<Int>> trial = m;
      std::vector<Int> r(k);
      for (std::size_t j = 0; j < k; ++j) r[j] = make_int(sol.basis[j][row]);
      trial.push_back(r);
      // Gaussian rank over rationals via integer row echelon.
      auto rank_of = [](std::vector<std::vector<Int>> mat) {
        std::size_t rank = 0;
        const std::size_t rows_n = mat.size(), cols_n = rows_n ? mat[0].size() : 0;
        for (std::size_t col = 0; col < cols_n && rank < rows_n; ++col) {
          std::size_t sel = rank;
          while (sel < rows_n && mat[sel][col] == 0) ++sel;
          if (sel == rows_n) continue;
          std::swap(mat[rank], mat[sel]);
          for (std::size_t i = rank + 1; i < rows_n; ++i) {
            if (mat[i][col] == 0) continue;
            Int f1 = mat[rank][col], f2 = mat[i][col];
            for (std::size_t j2 = 0; j2 < cols_n; ++j2)
              mat[i][j2] = mat[i][j2] * f1 - mat[rank][j2] * f2;
          }
          ++rank;
        }
        return rank;
      };
      if (rank_of(trial) == trial.size()) {
        m = std::move(trial);
        pivot.push_back(row);
      }
    }
    if (pivot.size() < k)
      throw consistency_error("kernel basis is not full rank");
  }

  // Cramer solve of M s = rhs for each sub-box point.
  std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = make_int(sol.basis[j][pivot[i]]);
  Int d0 = det(m);

  std::vector<long long> sub(k, lo);
  while (true) {
    // Solve for the basis coefficients s from the pivot coordinates.
    bool integral = true;
    std::vector<Int> s(k);
    for (std::size_t j = 0; j < k && integral; ++j) {
      auto mj = m;
      for (std::size_t i = 0; i < k; ++i)
        mj[i][j] = make_int(sub[i]) - make_int(sol.particular[pivot[i]]);
      Int num = det(mj);
      Int q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), d0.get_mpz_t());
      if (rem != 0)
        integral = false;
      else
        s[j] = q;
    }
    if (integral) {
      std::vector<long long> x(n);
      for (std::size_t j = 0; j < n; ++j) {
        Int v = make_int(sol.particular[j]);
        for (std::size_t bidx = 0; bidx < k; ++bidx)
          v += s[bidx] * make_int(sol.basis[bidx][j]);
        if (!v.fits_slong_p()) {
          x.clear();
          break;
        }
        x[j] = v.get_si();
      }
      if (!x.empty()) emit(x);
    }
    // Advance the sub-box odometer.
    std::size_t pos = 0;
    while (pos < k && sub[pos] == hi) sub[pos++] = lo;
    if (pos == k) break;
    ++sub[pos];
  }

  std::sort(out.begin(), out.end(), [](const Twist& a, const Twist& b) {
    return a.values < b.values;
  });
  return out;
}

SpineEndAnalysis analyze_spine_ends(const DualGraph& graph,
                                    const TwistSolution& sol) {
  SpineEndAnalysis a;
  if (sol.status != TwistSolution::Status::Feasible || sol.basis.size() != 1)
    return a;
  // Unique maximal-genus vertex.
  const GraphVertex* spine = nullptr;
  bool unique = true;
  for (const auto& v : graph.vertices()) {
    if (!spine || v.genus > spine->genus) {
      spine = &v;
      unique = true;
    } else if (v.genus == spine->genus) {
      unique = false;
    }
  }
  if (!spine || !unique) return a;
  std::vector<std::size_t> ends;
  for (std::size_t j = 0; j < sol.variables.size(); ++j)
    if (sol.variables[j].u == spine->id || sol.variables[j].v == spine->id)
      ends.push_back(j);
  if (ends.size() != 2) return a;

  a.applicable = true;
  a.spine = spine->id;
  // Signed so the forms read as T(node, spine).
  auto signed_form = [&](std::size_t j, long long& c, long long& m) {
    long long sign = sol.variables[j].u == spine->id ? 1 : -1;
    c = sign * sol.particular[j];
    m = sign * sol.basis[0][j];
  };
  signed_form(ends[0], a.const1, a.slope1);
  signed_form(ends[1], a.const2, a.slope2);
  if (a.slope1 + a.slope2 != 0) {  // end sum would depend on the parameter
    a.applicable = false;
    return a;
  }
  a.end_sum = a.const1 + a.const2;
  auto zero_of = [](long long c, long long m) -> std::optional<long long> {
    if (m == 0) return c == 0 ? std::optional<long long>(0) : std::nullopt;
    if (c % m != 0) return std::nullopt;
    return -c / m;
  };
  a.zero_param1 = zero_of(a.const1, a.slope1);
  a.zero_param2 = zero_of(a.const2, a.slope2);
  a.both_zero_possible = a.zero_param1 && a.zero_param2 &&
                         ((a.slope1 == 0 && a.const1 == 0) ||
                          (a.slope2 == 0 && a.const2 == 0) ||
                          *a.zero_param1 == *a.zero_param2);
  return a;
}

}  // namespace dejonq
