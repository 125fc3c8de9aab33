#include <doctest.h>

#include "dejonq/degen.hpp"

using namespace dejonq;

TEST_SUITE("degen") {
  TEST_CASE("rho-zero construction at (r=2, s=2)") {
    DegenerationData dd = build_rho_zero_degeneration(2, 2);
    CHECK(dd.g == 6);
    CHECK(dd.d == 6);
    CHECK(dd.c1.genus == 3);
    CHECK(dd.c1.series_degree == 4);
    CHECK(dd.c1.base_mult == 2);
    CHECK(dd.c1.aspect_vanishing.orders == std::vector<long long>{2, 3, 4});
    CHECK(dd.c2.genus == 3);
    CHECK(dd.c2.series_degree == 4);  // canonical on genus 3
    CHECK(dd.c2.aspect_vanishing.orders == std::vector<long long>{2, 3, 4});
    CHECK(dd.c1.rho == 0);
    CHECK(dd.c2.rho == 0);
  }

  TEST_CASE("rho-zero speciality bookkeeping") {
    for (long long r = 1; r <= 5; ++r)
      for (long long s = 2; s <= 5; ++s) {
        DegenerationData dd = build_rho_zero_degeneration(r, s);
        CHECK(dd.c1.speciality == s - 1);
        CHECK(dd.c2.speciality == 1);
        CHECK(refined_compatible(dd.c1.aspect_vanishing, dd.c2.aspect_vanishing,
                                 dd.d) == Compatibility::Refined);
      }
    CHECK_THROWS_AS((void)build_rho_zero_degeneration(0, 2), precondition_error);
    CHECK_THROWS_AS((void)build_rho_zero_degeneration(2, 1), precondition_error);
  }

  TEST_CASE("rho-step construction drops rho and keeps speciality") {
    for (long long rho = 1; rho <= 4; ++rho) {
      long long r = 2, s = 3;
      long long g = rho + (r + 1) * s, d = g + r - s;
      DegenerationData dd = build_rho_step_degeneration(g, r, d);
      CHECK(dd.c1.rho == brill_noether(g, r, d) - 1);
      CHECK(dd.c1.speciality == s);
      CHECK(dd.c2.genus == 1);
      CHECK(dd.c1.aspect_vanishing.orders.front() == 1);
      CHECK(dd.c2.aspect_vanishing.orders.back() == d - 1);
    }
    // rho = 0 inputs are rejected.
    CHECK_THROWS_AS((void)build_rho_step_degeneration(2, 1, 2), precondition_error);
  }

  TEST_CASE("case analysis reproduces the boundary bookkeeping") {
    // r = 1, s = 2: g = 4, d = 3, parts (1,1,1).
    DegenerationData dd = build_rho_zero_degeneration(1, 2);
    DJProblem p(dd.g, dd.r, dd.d, {1, 1, 1}, {1, 1, 1});
    CaseAnalysis ca = enumerate_case_analysis(dd, p);
    CHECK(ca.expdim == 1);
    CHECK(ca.has_feasible);
    CHECK(ca.max_total == 1);
    bool saw_rejected = false, saw_low = false, saw_high = false;
    for (const auto& c : ca.cases) {
      if (c.rejected) {
        saw_rejected = true;
        continue;
      }
      CHECK(c.total == ca.expdim);  // every admissible case meets the bound
      if (c.boundary == "low") saw_low = true;
      if (c.boundary == "high") saw_high = true;
      // The -1 corrections fire exactly when the node stays in the support.
      CHECK(c.corrections == (c.node_coeff_c1 > 0 ? 1 : 0) +
                                 (c.node_coeff_c2 > 0 ? 1 : 0));
    }
    CHECK(saw_rejected);  // weight 0 and weight d splits violate the gate
    CHECK(saw_low);
    CHECK(saw_high);
  }

  TEST_CASE("all-points-on-one-side splits are rejected") {
    DegenerationData dd = build_rho_zero_degeneration(2, 2);
    DJProblem p(dd.g, dd.r, dd.d, {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1});
    CaseAnalysis ca = enumerate_case_analysis(dd, p);
    bool w0_rejected = false, wd_rejected = false;
    for (const auto& c : ca.cases) {
      if (c.weight_c1 == 0) w0_rejected = c.rejected;
      if (c.weight_c1 == dd.d) wd_rejected = c.rejected;
    }
    CHECK(w0_rejected);
    CHECK(wd_rejected);
  }

  TEST_CASE("case analysis rejects mismatched problems") {
    DegenerationData dd = build_rho_zero_degeneration(1, 2);
    DJProblem other(4, 1, 4, {2, 1, 1}, {1, 1, 1});
    CHECK_THROWS_AS((void)enumerate_case_analysis(dd, other), precondition_error);
  }

  TEST_CASE("smoothness chain at the smallest admissible corner") {
    SmoothnessReport rep = smoothness_inequality_check(8, 3, 9, 7);
    CHECK(rep.s == 2);
    CHECK(rep.contradiction_achieved);
    CHECK(rep.final_inequality);        // (2-r)(s-1) < 0
    CHECK(rep.case2_contradiction);     // (d-r)(g-r-1) > g
    CHECK(rep.variant_s_sr.contradiction);
    // The two constant-term readings genuinely diverge here: the s(s+1)
    // variant still admits N = 7 in its negativity interval.
    CHECK(rep.variant_s_s1.given_in_interval);
    CHECK_FALSE(rep.variant_s_s1.contradiction);
    CHECK_FALSE(rep.variant_s_sr.given_in_interval);
    CHECK_FALSE(rep.sqrt_bound);  // fails on the whole s = 2 line
  }

  TEST_CASE("smoothness preconditions") {
    CHECK_THROWS_AS((void)smoothness_inequality_check(8, 2, 9, 8),
                    precondition_error);  // r < 3
    CHECK_THROWS_AS((void)smoothness_inequality_check(8, 3, 10, 8),
                    precondition_error);  // s < 2
    CHECK_THROWS_AS((void)smoothness_inequality_check(8, 3, 9, 6),
                    precondition_error);  // N <= d - r
  }

  TEST_CASE("transversality classification") {
    CHECK(transversality_special_cases(4, 1, 5).branch ==
          TransversalityCase::NonSpecial);
    CHECK(transversality_special_cases(4, 3, 6).branch ==
          TransversalityCase::Canonical);
    CHECK(transversality_special_cases(5, 1, 4).branch ==
          TransversalityCase::RankOne);
    auto r2 = transversality_special_cases(7, 2, 6);
    CHECK(r2.branch == TransversalityCase::RankTwo);
    CHECK(r2.zn_dim_offset == 2);
    CHECK(r2.condition_count == 6);
    CHECK(transversality_special_cases(6, 3, 8).branch ==
          TransversalityCase::SpecialityOne);
    CHECK(transversality_special_cases(8, 3, 9).branch ==
          TransversalityCase::RequiresDegeneration);
  }

  TEST_CASE("signed partition reduction: the four section counts") {
    // d' = 2g-2 with the canonical bundle.
    auto canonical = negative_partition_extend(3, 1, 2, {2, 2, -2}, true);
    CHECK(canonical.d_prime == 4);
    CHECK(canonical.h0 == 3);
    CHECK(canonical.h0_case == "canonical");
    CHECK(canonical.positive_bound == 0);  // n1 - g + 1
    // d' = 2g-2, generic bundle: h0 = g - 1; the worked example has
    // expected dimension 3 - 4 + 1 = 0.
    auto critical = negative_partition_extend(3, 0, 2, {2, 2, -2}, false);
    CHECK(critical.h0 == 2);
    CHECK(critical.r_prime == 1);
    CHECK(critical.expdim == 0);
    // d' > 2g-2: h0 = d' - g + 1.
    auto large = negative_partition_extend(2, 1, 3, {3, 2, -2}, false);
    CHECK(large.d_prime == 5);
    CHECK(large.h0 == 4);
    CHECK(large.h0_case == "large-degree");
    // d' < 2g-2: h0 = r + sum(b) + 1.
    auto small = negative_partition_extend(6, 1, 4, {3, 2, 1, -2}, false);
    CHECK(small.h0 == 4);
    CHECK(small.h0_case == "small-degree");
    CHECK(small.positive_bound == 0);  // n1 - d + r
  }

  TEST_CASE("signed partition validation") {
    CHECK_THROWS_AS((void)negative_partition_extend(3, 1, 2, {2, 0, -2}, false),
                    precondition_error);
    CHECK_THROWS_AS((void)negative_partition_extend(3, 1, 2, {2, 1, -2}, false),
                    precondition_error);  // sums to 1, not 2
    CHECK_THROWS_AS((void)negative_partition_extend(3, 1, -2, {-1, -1}, false),
                    precondition_error);  // no positive part
  }

  TEST_CASE("nonexistence base cases") {
    // g - d + r = 0.
    CHECK(nonexistence_base_case(4, 1, 5, 3) ==
          NonexistenceVerdict::CertifiedEmptyNonSpecial);
    // g - d + r < 0 and N < g.
    CHECK(nonexistence_base_case(4, 1, 6, 3) ==
          NonexistenceVerdict::CertifiedEmptyImageDim);
    // g - d + r < 0 and N >= g.
    CHECK(nonexistence_base_case(4, 1, 9, 5) ==
          NonexistenceVerdict::RequiresInduction);
    CHECK_THROWS_AS((void)nonexistence_base_case(4, 1, 3, 3), precondition_error);
  }
}
