#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "dejonq/llseries.hpp"

using namespace dejonq;

namespace {

DualGraph two_components(long long g1, long long g2) {
  return DualGraph({{0, g1}, {1, g2}}, {{0, 0, 1}});
}

}  // namespace

TEST_SUITE("llseries") {
  TEST_CASE("vanishing sequence validation") {
    CHECK_NOTHROW(VanishingSequence({0, 1, 2}));
    CHECK_THROWS_AS(VanishingSequence({1, 1, 2}), shape_error);
    CHECK_THROWS_AS(VanishingSequence({-1, 0}), shape_error);
    CHECK_THROWS_AS(VanishingSequence(std::vector<long long>{}), shape_error);
  }

  TEST_CASE("ramification from vanishing") {
    auto flat = ramification_from_vanishing(VanishingSequence::arithmetic(0, 3));
    CHECK(flat.alphas == std::vector<long long>{0, 0, 0, 0});
    auto shifted = ramification_from_vanishing(VanishingSequence::arithmetic(2, 2));
    CHECK(shifted.alphas == std::vector<long long>{2, 2, 2});
    auto ones = ramification_from_vanishing(VanishingSequence::arithmetic(1, 2));
    CHECK(ones.alphas == std::vector<long long>{1, 1, 1});
  }

  TEST_CASE("refined compatibility classification") {
    long long r = 2, d = 7;
    auto vy = VanishingSequence::arithmetic(r, r);           // (2,3,4)
    auto vz = VanishingSequence::arithmetic(d - 2 * r, r);   // (3,4,5)
    CHECK(refined_compatible(vy, vz, d) == Compatibility::Refined);

    auto step_y = VanishingSequence::arithmetic(1, r);          // (1,2,3)
    auto step_z = VanishingSequence::arithmetic(d - r - 1, r);  // (4,5,6)
    CHECK(refined_compatible(step_y, step_z, d) == Compatibility::Refined);

    auto low = VanishingSequence::arithmetic(0, r);
    CHECK(refined_compatible(low, low, 7) == Compatibility::Incompatible);
    // Inequality everywhere, strict somewhere.
    auto slack = VanishingSequence({4, 5, 6});
    CHECK(refined_compatible(vy, slack, d) == Compatibility::Crude);

    CHECK_THROWS_AS(refined_compatible(vy, VanishingSequence({0, 1}), d),
                    shape_error);
  }

  TEST_CASE("refined classification is symmetric") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
      long long r = std::uniform_int_distribution<int>(0, 3)(rng);
      long long d = std::uniform_int_distribution<long long>(2 * r + 1, 12)(rng);
      auto draw = [&] {
        std::set<long long> vals;
        while (static_cast<long long>(vals.size()) < r + 1)
          vals.insert(std::uniform_int_distribution<long long>(0, d)(rng));
        return VanishingSequence(std::vector<long long>(vals.begin(), vals.end()));
      };
      auto a = draw(), b = draw();
      CHECK(refined_compatible(a, b, d) == refined_compatible(b, a, d));
    }
  }

  TEST_CASE("pointed existence bound") {
    // rho-zero construction, first component: equality at g_j.
    long long r = 2, s = 3;
    long long g1 = (s - 1) * (r + 1), g = s * (r + 1), d = g + r - s;
    CHECK(eh_existence_lhs(g1, d, r, RamificationSequence::constant(r, r)) == g1);
    CHECK(eh_existence(g1, d, r, RamificationSequence::constant(r, r)));
    // Second component: r+1 <= r+1.
    CHECK(eh_existence_lhs(r + 1, d, r,
                           RamificationSequence::constant(d - 2 * r, r)) == r + 1);
    // A strictly larger ramification flips it.
    CHECK_FALSE(eh_existence(r + 1, d, r,
                             RamificationSequence::constant(d - 2 * r + 1, r)));
  }

  TEST_CASE("pointed existence is monotone in the ramification") {
    std::mt19937_64 rng(991);
    for (int iter = 0; iter < 300; ++iter) {
      long long r = std::uniform_int_distribution<int>(0, 3)(rng);
      long long d = std::uniform_int_distribution<int>(1, 10)(rng);
      long long g = std::uniform_int_distribution<int>(0, 8)(rng);
      std::vector<long long> alpha(r + 1);
      long long prev = 0;
      for (auto& a : alpha)
        prev = a = prev + std::uniform_int_distribution<int>(0, 2)(rng);
      RamificationSequence seq(alpha);
      bool before = eh_existence(g, d, r, seq);
      auto bumped = alpha;
      bumped[r] += 1;  // keeps the sequence non-decreasing
      bool after = eh_existence(g, d, r, RamificationSequence(bumped));
      if (!before) CHECK_FALSE(after);
    }
  }

  TEST_CASE("tree genus") {
    CHECK(tree_genus(DualGraph({{0, 5}}, {})) == 5);
    CHECK(tree_genus(two_components(2, 3)) == 5);
    // Cycle of two rational components.
    DualGraph cycle({{0, 0}, {1, 0}}, {{0, 0, 1}, {1, 0, 1}});
    CHECK(tree_genus(cycle) == 1);
    DualGraph disconnected({{0, 1}, {1, 1}}, {});
    CHECK_THROWS_AS((void)tree_genus(disconnected), precondition_error);
  }

  TEST_CASE("attaching a vertex adds its genus") {
    std::mt19937_64 rng(55);
    for (int iter = 0; iter < 50; ++iter) {
      long long g0 = std::uniform_int_distribution<int>(0, 4)(rng);
      long long g1 = std::uniform_int_distribution<int>(0, 4)(rng);
      long long gamma = std::uniform_int_distribution<int>(0, 4)(rng);
      DualGraph before({{0, g0}, {1, g1}}, {{0, 0, 1}});
      DualGraph after({{0, g0}, {1, g1}, {2, gamma}}, {{0, 0, 1}, {1, 1, 2}});
      CHECK(tree_genus(after) == tree_genus(before) + gamma);
    }
  }

  TEST_CASE("section budget") {
    CHECK(tree_section_budget(3, 0, 1) == 3);
    CHECK(tree_section_budget(3, 1, 2) == 3);
    CHECK(tree_section_budget(3, 2, 3) == 3);
    CHECK(tree_section_budget(2, 4, 3) == 4);  // two independent cycles
    CHECK_THROWS_AS((void)tree_section_budget(1, 0, 0), precondition_error);
  }

  TEST_CASE("aspect divisors on two components") {
    DJProblem p(4, 1, 5, {2, 1, 1}, {1, 2, 1});  // d = 5, N = 4
    auto aspects = aspect_divisors(two_components(2, 2), {0, 0, 1}, p);
    REQUIRE(aspects.size() == 2);
    // Component 0 carries weight 4, so its node coefficient is 1.
    CHECK(aspects[0].node_parts == std::vector<std::pair<int, long long>>{{0, 1}});
    CHECK(aspects[1].node_parts == std::vector<std::pair<int, long long>>{{0, 4}});
    for (const auto& a : aspects) CHECK(a.total_degree() == 5);
  }

  TEST_CASE("all parts on one side give coefficient zero there") {
    DJProblem p(4, 1, 5, {2, 1, 1}, {1, 2, 1});
    auto aspects = aspect_divisors(two_components(2, 2), {0, 0, 0}, p);
    CHECK(aspects[0].node_parts.front().second == 0);
    CHECK(aspects[1].node_parts.front().second == 5);
    CHECK(aspects[1].interior.empty());
  }

  TEST_CASE("aspect divisors on a single component") {
    DJProblem p(4, 1, 5, {2, 1, 1}, {1, 2, 1});
    auto aspects = aspect_divisors(DualGraph({{0, 4}}, {}), {0, 0, 0}, p);
    REQUIRE(aspects.size() == 1);
    CHECK(aspects[0].node_parts.empty());
    CHECK(aspects[0].total_degree() == 5);
  }

  TEST_CASE("node coefficients pair to d across every node") {
    std::mt19937_64 rng(8080);
    for (int iter = 0; iter < 100; ++iter) {
      int n = std::uniform_int_distribution<int>(2, 5)(rng);
      std::vector<GraphVertex> vertices;
      std::vector<GraphEdge> edges;
      for (int i = 0; i < n; ++i)
        vertices.push_back({i, std::uniform_int_distribution<int>(0, 3)(rng)});
      for (int i = 1; i < n; ++i)
        edges.push_back(
            {i - 1, std::uniform_int_distribution<int>(0, i - 1)(rng), i});
      DualGraph tree(vertices, edges);

      int k = std::uniform_int_distribution<int>(1, 4)(rng);
      std::vector<long long> mu1, mu2;
      std::vector<int> assign;
      long long d = 0, n_total = 0;
      for (int i = 0; i < k; ++i) {
        mu1.push_back(std::uniform_int_distribution<int>(1, 3)(rng));
        mu2.push_back(std::uniform_int_distribution<int>(1, 2)(rng));
        d += mu1.back() * mu2.back();
        n_total += mu2.back();
        assign.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
      }
      DJProblem p(0, d - n_total, d, mu1, mu2);
      auto aspects = aspect_divisors(tree, assign, p);
      for (const auto& e : tree.edges()) {
        long long total = 0;
        for (const auto& a : aspects)
          for (const auto& [eid, coeff] : a.node_parts)
            if (eid == e.id) total += coeff;
        CHECK(total == d);  // the two sides of a node see complementary weight
      }
      for (const auto& a : aspects) CHECK(a.total_degree() == d);
    }
  }

  TEST_CASE("aspect divisors reject non-trees and bad assignments") {
    DJProblem p(1, 1, 2, {2}, {1});
    DualGraph cycle({{0, 0}, {1, 0}}, {{0, 0, 1}, {1, 0, 1}});
    CHECK_THROWS_AS((void)aspect_divisors(cycle, {0}, p), precondition_error);
    CHECK_THROWS_AS((void)aspect_divisors(two_components(1, 0), {0, 1}, p),
                    shape_error);
    CHECK_THROWS_AS((void)aspect_divisors(two_components(1, 0), {7}, p),
                    shape_error);
  }
}
