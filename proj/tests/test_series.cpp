#include <doctest.h>

#include <random>

#include "dejonq/series.hpp"

using namespace dejonq;

namespace {

Series linear1(int cap, long c0, long c1) {
  Series s = Series::constant({cap}, Int(c0));
  s.add_term(MultiIndex({1}), Int(c1));
  return s;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("multiplication by one is the identity") {
    Series a(std::vector<int>{2, 2});
    a.add_term(MultiIndex({0, 0}), Int(3));
    a.add_term(MultiIndex({1, 2}), Int(-7));
    CHECK(a * Series::one({2, 2}) == a);
  }

  TEST_CASE("difference of squares under a cap") {
    Series p = linear1(2, 1, 1);   // 1 + t
    Series m = linear1(2, 1, -1);  // 1 - t
    Series prod = p * m;
    CHECK(prod.coefficient(MultiIndex({0})) == 1);
    CHECK(prod.coefficient(MultiIndex({1})) == 0);
    CHECK(prod.coefficient(MultiIndex({2})) == -1);
  }

  TEST_CASE("cross terms of (1+2t1+t2)^2 at caps (1,1)") {
    Series s = Series::one({1, 1});
    s.add_term(MultiIndex({1, 0}), Int(2));
    s.add_term(MultiIndex({0, 1}), Int(1));
    Series sq = s * s;
    CHECK(sq.coefficient(MultiIndex({1, 1})) == 4);
  }

  TEST_CASE("terms beyond the caps are discarded") {
    Series s = linear1(1, 1, 1);  // cap 1
    Series sq = s * s;            // t^2 falls away
    CHECK(sq.coefficient(MultiIndex({0})) == 1);
    CHECK(sq.coefficient(MultiIndex({1})) == 2);
    CHECK_THROWS_AS((void)sq.coefficient(MultiIndex({2})), shape_error);
  }

  TEST_CASE("geometric series inverse") {
    Series s = linear1(2, 1, 1);  // 1 + t, cap 2
    Series inv = s.pow(-1);
    CHECK(inv.coefficient(MultiIndex({0})) == 1);
    CHECK(inv.coefficient(MultiIndex({1})) == -1);
    CHECK(inv.coefficient(MultiIndex({2})) == 1);
  }

  TEST_CASE("multinomial coefficient of (1+4t1+4t2)^3") {
    Series s = Series::one({1, 1});
    s.add_term(MultiIndex({1, 0}), Int(4));
    s.add_term(MultiIndex({0, 1}), Int(4));
    CHECK(s.pow(3).coefficient(MultiIndex({1, 1})) == 96);
  }

  TEST_CASE("mixed positive and negative powers") {
    // (1+2t)^(-1) (1+4t)^2, coefficient of t: 8 - 2 = 6.
    Series a = linear1(1, 1, 2);
    Series b = linear1(1, 1, 4);
    Series total = a.pow(-1) * b.pow(2);
    CHECK(total.coefficient(MultiIndex({1})) == 6);
  }

  TEST_CASE("single coefficient reads") {
    CHECK(Series::one({3}).coefficient(MultiIndex({0})) == 1);
    CHECK(linear1(1, 1, 9).coefficient(MultiIndex({1})) == 9);
    // (1+t)^d has coefficient 1 at t^d.
    for (int d = 1; d <= 6; ++d) {
      Series s = linear1(d, 1, 1);
      CHECK(s.pow(d).coefficient(MultiIndex({d})) == 1);
    }
  }

  TEST_CASE("shape errors") {
    Series a(std::vector<int>{2});
    Series b(std::vector<int>{3});
    CHECK_THROWS_AS((void)(a * b), shape_error);
    CHECK_THROWS_AS((void)a.coefficient(MultiIndex({1, 1})), shape_error);
    CHECK_THROWS_AS((void)a.coefficient(MultiIndex({3})), shape_error);
  }

  TEST_CASE("negative power requires constant term 1") {
    Series two = Series::constant({2}, Int(2));
    CHECK_THROWS_AS((void)two.pow(-1), non_invertible_error);
    Series zero(std::vector<int>{2});
    CHECK_THROWS_AS((void)zero.pow(-2), non_invertible_error);
  }

  TEST_CASE("pow(m) * pow(-m) is 1 for random units") {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int iter = 0; iter < 100; ++iter) {
      std::vector<int> caps{std::uniform_int_distribution<int>(1, 4)(rng),
                            std::uniform_int_distribution<int>(0, 3)(rng)};
      Series s = Series::one(caps);
      for (int t = 0; t < 4; ++t) {
        MultiIndex m = MultiIndex::zero(2);
        m.e[0] = std::uniform_int_distribution<int>(0, caps[0])(rng);
        m.e[1] = std::uniform_int_distribution<int>(0, caps[1])(rng);
        if (m.total_degree() == 0) continue;
        s.add_term(m, Int(coeff(rng)));
      }
      long long mexp = std::uniform_int_distribution<int>(0, 5)(rng);
      CHECK(s.pow(mexp) * s.pow(-mexp) == Series::one(caps));
    }
  }

  TEST_CASE("canonical form drops zeros") {
    Series a(std::vector<int>{2});
    a.add_term(MultiIndex({1}), Int(5));
    a.add_term(MultiIndex({1}), Int(-5));
    CHECK(a == Series(std::vector<int>{2}));
    CHECK(a.terms().empty());
  }
}
