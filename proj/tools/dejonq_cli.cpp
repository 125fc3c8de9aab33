// Command-line surface: exact counts, parameter sweeps, twist solving,
// degeneration reports, signed-partition reduction, and the verification
// suites.  JSON is the canonical output; csv/tsv are projections of the same
// rows.  Exit codes: 0 success, 1 check failure, 2 usage or precondition
// error, 3 input parse error.  Thread count is controlled by OMP_NUM_THREADS.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dejonq/checks.hpp"
#include "dejonq/counts.hpp"
#include "dejonq/degen.hpp"
#include "dejonq/graph_io.hpp"
#include "dejonq/sweep.hpp"
#include "dejonq/twists.hpp"

namespace {

using dejonq::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw dejonq::precondition_error("empty integer list");
  return out;
}

dejonq::Range parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    long long v = std::stoll(text);
    return {v, v};
  }
  dejonq::Range r{std::stoll(text.substr(0, colon)),
                  std::stoll(text.substr(colon + 1))};
  if (r.hi < r.lo) throw dejonq::precondition_error("empty range " + text);
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Rows are flat JSON objects; csv/tsv print the union of keys in first-seen
// order so identical inputs give byte-identical tables.
void print_rows(const std::vector<Json>& rows, const std::string& format) {
  if (format == "json") {
    Json doc = Json::array();
    for (const auto& r : rows) doc.push_back(r);
    std::cout << doc.dump(2) << "\n";
    return;
  }
  const char sep = format == "csv" ? ',' : '\t';
  std::vector<std::string> keys;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i)
    std::cout << (i ? std::string(1, sep) : "") << keys[i];
  std::cout << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i) std::cout << sep;
      if (!r.contains(keys[i])) continue;
      const auto& v = r[keys[i]];
      std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
      std::cout << (format == "csv" ? csv_escape(cell) : cell);
    }
    std::cout << "\n";
  }
}

Json problem_json(const dejonq::DJProblem& p) {
  return Json{{"g", p.g}, {"r", p.r},     {"d", p.d},
              {"mu1", p.mu1}, {"mu2", p.mu2}, {"N", p.length()}};
}

Json row_json(const dejonq::SweepRow& row) {
  Json j = problem_json(row.problem);
  j["expdim"] = row.expdim;
  if (row.counted) {
    j["ordered"] = dejonq::to_string(row.ordered);
    j["symmetry"] = dejonq::to_string(row.symmetry);
    j["count"] = dejonq::to_string(row.count);
  } else {
    j["ordered"] = row.error.empty() ? "-" : row.error;
    j["symmetry"] = "-";
    j["count"] = row.error.empty() ? "-" : row.error;
  }
  return j;
}

int cmd_count(long long g, long long r, long long d, const std::string& mu1_text,
              const std::string& mu2_text, const std::string& format) {
  dejonq::DJProblem p(g, r, d, parse_int_list(mu1_text), parse_int_list(mu2_text));
  long long expdim = dejonq::expected_dimension(p);
  if (expdim != 0) {
    std::cerr << "error: expected dimension is " << expdim
              << "; counts are defined only at expected dimension 0\n";
    return kExitUsage;
  }
  dejonq::SweepRow row;
  row.problem = p;
  row.expdim = 0;
  row.ordered = dejonq::dejonquieres_count_ordered(p);
  row.symmetry = dejonq::symmetry_factor(p.mu1, p.mu2);
  row.count = dejonq::dejonquieres_count(p);
  row.counted = true;
  Json j = row_json(row);
  j["formula"] = "coefficient of t^mu2 in (1+sum a_i^2 t_i)^g (1+sum a_i t_i)^(d-r-g)";
  print_rows({j}, format);
  return kExitOk;
}

int cmd_sweep(const std::string& family, const std::string& gtext,
              const std::string& rtext, const std::string& dtext,
              long long max_parts, const std::string& format) {
  dejonq::Range g = parse_range(gtext);
  std::vector<dejonq::DJProblem> problems;
  if (family == "theta") {
    problems = dejonq::theta_family(g);
  } else if (family == "hurwitz") {
    problems = dejonq::hurwitz_family(g, parse_range(dtext));
  } else if (family == "grid") {
    dejonq::Range d = parse_range(dtext);
    if (d.hi > 14)
      throw dejonq::precondition_error(
          "grid sweeps are capped at d <= 14; use count for single problems");
    problems = dejonq::grid_family(g, parse_range(rtext), d, max_parts);
  } else {
    throw dejonq::precondition_error("unknown family: " + family);
  }
  if (problems.empty()) {
    std::cerr << "error: the requested ranges contain no problems\n";
    return kExitUsage;
  }
  auto rows = dejonq::run_sweep(problems, /*parallel=*/true);
  std::vector<Json> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row_json(row));
  print_rows(out, format);
  return kExitOk;
}

int cmd_twist_solve(const std::string& path, const std::string& format) {
  dejonq::DualGraph graph = dejonq::graph_from_file(path);
  dejonq::TwistSolution sol = dejonq::solve_twists(graph);
  Json doc = dejonq::solution_to_json(sol);
  doc["quasi_stable"] = dejonq::is_quasi_stable(graph);
  if (sol.status == dejonq::TwistSolution::Status::Feasible) {
    doc["unique"] = sol.basis.empty();
    auto ends = dejonq::analyze_spine_ends(graph, sol);
    if (ends.applicable) {
      Json chain = Json::object();
      chain["spine"] = ends.spine;
      chain["end_sum"] = ends.end_sum;
      chain["end_forms"] = Json::array({
          Json{{"constant", ends.const1}, {"slope", ends.slope1}},
          Json{{"constant", ends.const2}, {"slope", ends.slope2}},
      });
      Json subcases = Json::array();
      subcases.push_back(Json{{"label", "both-ends-nonzero"}, {"generic", true}});
      Json one_zero = Json::array();
      if (ends.zero_param1) one_zero.push_back(*ends.zero_param1);
      if (ends.zero_param2) one_zero.push_back(*ends.zero_param2);
      subcases.push_back(
          Json{{"label", "one-end-zero"}, {"parameters", one_zero}});
      chain["subcases"] = subcases;
      chain["both_ends_can_vanish"] = ends.both_zero_possible;
      doc["chain_family"] = chain;
    }
  }
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    print_rows({doc}, format);
  return kExitOk;
}

int cmd_degenerate(const std::string& mode, long long g, long long r, long long d,
                   long long s, long long n, const std::string& mu1_text,
                   const std::string& mu2_text, const std::string& format) {
  Json doc = Json::object();
  if (mode == "smoothness") {
    auto rep = dejonq::smoothness_inequality_check(g, r, d, n);
    doc["g"] = rep.g;
    doc["r"] = rep.r;
    doc["d"] = rep.d;
    doc["N"] = rep.length;
    doc["s"] = rep.s;
    auto variant = [](const dejonq::QuadraticVariant& v) {
      return Json{{"constant_term", v.constant_term},
                  {"discriminant", v.discriminant},
                  {"given_in_interval", v.given_in_interval},
                  {"upper_root_below_bound", v.upper_root_below_bound},
                  {"contradiction", v.contradiction}};
    };
    doc["quadratic_s_s_plus_1"] = variant(rep.variant_s_s1);
    doc["quadratic_s_s_plus_r"] = variant(rep.variant_s_sr);
    doc["sqrt_bound"] = rep.sqrt_bound;
    doc["genus_chain"] = rep.genus_chain;
    doc["final_inequality"] = rep.final_inequality;
    doc["large_length_contradiction"] = rep.case2_contradiction;
    doc["contradiction_achieved"] = rep.contradiction_achieved;
  } else {
    dejonq::DegenerationData dd = mode == "rho0"
                                      ? dejonq::build_rho_zero_degeneration(r, s)
                                      : dejonq::build_rho_step_degeneration(g, r, d);
    auto component = [](const dejonq::DegenComponent& c) {
      return Json{{"genus", c.genus},
                  {"series_degree", c.series_degree},
                  {"base_mult", c.base_mult},
                  {"aspect_vanishing", c.aspect_vanishing.orders},
                  {"rho", c.rho},
                  {"speciality", c.speciality}};
    };
    doc["g"] = dd.g;
    doc["r"] = dd.r;
    doc["d"] = dd.d;
    doc["s"] = dd.s;
    doc["component1"] = component(dd.c1);
    doc["component2"] = component(dd.c2);
    auto trans = dejonq::transversality_special_cases(dd.g, dd.r, dd.d);
    doc["transversality"] = dejonq::to_string(trans.branch);

    if (!mu1_text.empty()) {
      dejonq::DJProblem p(dd.g, dd.r, dd.d, parse_int_list(mu1_text),
                          parse_int_list(mu2_text));
      dejonq::CaseAnalysis ca = dejonq::enumerate_case_analysis(dd, p);
      doc["expdim"] = ca.expdim;
      doc["max_total"] = ca.has_feasible ? Json(ca.max_total) : Json(nullptr);
      Json cases = Json::array();
      for (const auto& c : ca.cases) {
        Json entry{{"weight_c1", c.weight_c1}, {"n1", c.n1},
                   {"boundary", c.boundary},   {"rejected", c.rejected}};
        if (!c.rejected) {
          entry["node_coeff_c1"] = c.node_coeff_c1;
          entry["node_coeff_c2"] = c.node_coeff_c2;
          entry["len"] = Json::array({c.len1, c.len2});
          entry["dim"] = Json::array({c.dim1, c.dim2});
          entry["corrections"] = c.corrections;
          entry["total"] = c.total;
          entry["feasible"] = c.feasible;
        }
        cases.push_back(entry);
      }
      doc["cases"] = cases;
      doc["pass"] = ca.has_feasible && ca.max_total == ca.expdim;
    }
  }
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    print_rows({doc}, format);
  return kExitOk;
}

int cmd_extend_negative(long long g, long long r, long long d,
                        const std::string& mu_text, bool canonical,
                        const std::string& format) {
  auto mu = parse_int_list(mu_text);
  auto ext = dejonq::negative_partition_extend(g, r, d, mu, canonical);
  Json doc{{"g", g},
           {"r", r},
           {"d", d},
           {"mu", mu},
           {"d_prime", ext.d_prime},
           {"h0", ext.h0},
           {"r_prime", ext.r_prime},
           {"n", ext.n},
           {"expected_dimension", ext.expdim},
           {"positive_part_bound", ext.positive_bound},
           {"case", ext.h0_case}};
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    print_rows({doc}, format);
  return kExitOk;
}

int cmd_check(const std::string& suite, const std::string& format) {
  std::vector<dejonq::CheckResult> results;
  if (suite == "all") {
    results = dejonq::run_all_checks(/*parallel=*/true);
  } else {
    auto names = dejonq::check_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      std::cerr << "error: unknown suite '" << suite << "'; known:";
      for (const auto& n : names) std::cerr << " " << n;
      std::cerr << " all\n";
      return kExitUsage;
    }
    results = dejonq::run_check_suite(suite, /*parallel=*/true);
  }
  bool all_pass = true;
  if (format == "json") {
    Json doc = Json::array();
    for (const auto& r : results) {
      doc.push_back(Json{{"check", r.name},
                         {"pass", r.pass},
                         {"detail", r.detail},
                         {"millis", r.millis}});
      all_pass = all_pass && r.pass;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.millis
                << " ms)" << (r.pass ? "" : ": " + r.detail) << "\n";
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts and degeneration checks for prescribed-multiplicity "
               "divisors in linear series on curves"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "tsv"}))
      ->capture_default_str();

  long long g = 0, r = 0, d = 0, s = 2, n = 0, max_parts = 14;
  std::string mu1, mu2, mu, graph_path, family = "grid", suite, mode = "rho0";
  std::string gr = "0:0", rr = "0:0", dr = "1:1";
  bool canonical = false;

  auto* count = app.add_subcommand("count", "Count divisors for one problem");
  count->add_option("--g", g)->required();
  count->add_option("--r", r)->required();
  count->add_option("--d", d)->required();
  count->add_option("--mu1", mu1, "Comma-separated multiplicities")->required();
  count->add_option("--mu2", mu2, "Comma-separated part degrees")->required();

  auto* sweep = app.add_subcommand("sweep", "Tabulate counts over a family");
  sweep->add_option("--family", family)
      ->check(CLI::IsMember({"grid", "hurwitz", "theta"}))
      ->capture_default_str();
  sweep->add_option("--g", gr, "Genus range lo:hi");
  sweep->add_option("--r", rr, "Dimension range lo:hi");
  sweep->add_option("--d", dr, "Degree range lo:hi");
  sweep->add_option("--max-parts", max_parts);

  auto* twist = app.add_subcommand("twist-solve", "Solve a twist system");
  twist->add_option("--graph", graph_path, "Dual-graph JSON file")->required();

  auto* degen = app.add_subcommand("degenerate", "Degeneration constructions");
  degen->add_option("--mode", mode)
      ->check(CLI::IsMember({"rho0", "step", "smoothness"}))
      ->capture_default_str();
  degen->add_option("--g", g);
  degen->add_option("--r", r);
  degen->add_option("--d", d);
  degen->add_option("--s", s);
  degen->add_option("--n", n, "Divisor length (smoothness mode)");
  degen->add_option("--mu1", mu1);
  degen->add_option("--mu2", mu2);

  auto* extend = app.add_subcommand("extend-negative",
                                    "Signed-partition reduction");
  extend->add_option("--g", g)->required();
  extend->add_option("--r", r)->required();
  extend->add_option("--d", d)->required();
  extend->add_option("--mu", mu, "Signed multiplicities, e.g. 2,2,-2")->required();
  extend->add_flag("--canonical", canonical,
                   "Treat the twisted bundle as the canonical one");

  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("suite", suite, "Suite name or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(g, r, d, mu1, mu2, format);
    if (sweep->parsed()) return cmd_sweep(family, gr, rr, dr, max_parts, format);
    if (twist->parsed()) return cmd_twist_solve(graph_path, format);
    if (degen->parsed())
      return cmd_degenerate(mode, g, r, d, s, n, mu1, mu2, format);
    if (extend->parsed())
      return cmd_extend_negative(g, r, d, mu, canonical, format);
    if (check->parsed()) return cmd_check(suite, format);
  } catch (const dejonq::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const dejonq::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
