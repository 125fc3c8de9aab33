#include "dejonq/counts.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "dejonq/errors.hpp"

namespace dejonq {

namespace {

std::vector<int> caps_from_mu2(const std::vector<long long>& mu2) {
  std::vector<int> caps;
  caps.reserve(mu2.size());
  for (long long d : mu2) caps.push_back(static_cast<int>(d));
  return caps;
}

MultiIndex target_index(const std::vector<long long>& mu2) {
  std::vector<int> e;
  e.reserve(mu2.size());
  for (long long d : mu2) e.push_back(static_cast<int>(d));
  return MultiIndex(std::move(e));
}

template <typename C>
TruncatedSeries<C> linear_factor(const std::vector<int>& caps,
                                 const std::vector<long long>& mu1, bool squared) {
  std::vector<C> w;
  w.reserve(mu1.size());
  for (long long a : mu1) {
    C base(static_cast<long>(a));
    w.push_back(squared ? base * base : base);
  }
  return one_plus_linear<C>(caps, w);
}

}  // namespace

DJProblem::DJProblem(long long g_, long long r_, long long d_,
                     std::vector<long long> mu1_, std::vector<long long> mu2_)
    : g(g_), r(r_), d(d_), mu1(std::move(mu1_)), mu2(std::move(mu2_)) {
  if (g < 0 || r < 0 || d < 0)
    throw precondition_error("g, r, d must be non-negative");
  if (mu1.size() != mu2.size())
    throw shape_error("mu1 and mu2 must have equal length");
  if (mu1.empty()) throw shape_error("at least one divisor part is required");
  if (static_cast<long long>(mu1.size()) > d)
    throw precondition_error("more parts than the series degree");
  long long weighted = 0;
  for (std::size_t i = 0; i < mu1.size(); ++i) {
    if (mu1[i] < 1 || mu2[i] < 1)
      throw precondition_error("partition entries must be positive");
    weighted += mu1[i] * mu2[i];
  }
  if (weighted != d)
    throw precondition_error("sum a_i d_i = " + std::to_string(weighted) +
                             " does not match d = " + std::to_string(d));
}

long long DJProblem::length() const {
  return std::accumulate(mu2.begin(), mu2.end(), 0LL);
}

long long brill_noether(long long g, long long r, long long d) {
  return g - (r + 1) * (g - d + r);
}

long long expected_dimension(const DJProblem& p) {
  return p.length() - p.d + p.r;
}

Int symmetry_factor(const std::vector<long long>& mu1,
                    const std::vector<long long>& mu2) {
  if (mu1.size() != mu2.size())
    throw shape_error("mu1 and mu2 must have equal length");
  std::map<std::pair<long long, long long>, unsigned long> mult;
  for (std::size_t i = 0; i < mu1.size(); ++i) ++mult[{mu1[i], mu2[i]}];
  Int f = 1;
  for (const auto& [pair, count] : mult) f *= factorial(count);
  return f;
}

Int dejonquieres_count_ordered(const DJProblem& p) {
  if (expected_dimension(p) != 0)
    throw precondition_error("count requires expected dimension 0, got " +
                             std::to_string(expected_dimension(p)));
  const std::vector<int> caps = caps_from_mu2(p.mu2);
  Series sq = linear_factor<Int>(caps, p.mu1, /*squared=*/true);
  Series lin = linear_factor<Int>(caps, p.mu1, /*squared=*/false);
  Series total = sq.pow(p.g) * lin.pow(p.d - p.r - p.g);
  return total.coefficient(target_index(p.mu2));
}

Int dejonquieres_count(const DJProblem& p) {
  Int ordered = dejonquieres_count_ordered(p);
  Int sym = symmetry_factor(p.mu1, p.mu2);
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), ordered.get_mpz_t(), sym.get_mpz_t());
  if (rem != 0)
    throw consistency_error("ordered count " + to_string(ordered) +
                            " is not divisible by symmetry factor " +
                            to_string(sym));
  return q;
}

Int restricted_class_coefficient(long long g, long long d,
                                 const std::vector<long long>& mu1,
                                 const std::vector<long long>& mu2) {
  if (mu1.size() != mu2.size())
    throw shape_error("mu1 and mu2 must have equal length");
  (void)d;
  const std::vector<int> caps = caps_from_mu2(mu2);
  long long length = std::accumulate(mu2.begin(), mu2.end(), 0LL);
  Series lin = linear_factor<Int>(caps, mu1, /*squared=*/false);
  Series sq = linear_factor<Int>(caps, mu1, /*squared=*/true);
  Series total = lin.pow(length - g) * sq.pow(g);
  return total.coefficient(target_index(mu2));
}

bool existence_check(const DJProblem& p) {
  if (expected_dimension(p) < 0) return false;
  return restricted_class_coefficient(p.g, p.d, p.mu1, p.mu2) > 0;
}

Series FormalClass::theta_zero_part() const {
  auto it = terms.find({d - length, 0});
  return it != terms.end() ? it->second : Series(caps);
}

FormalClass diagonal_class(long long g, long long d,
                           const std::vector<long long>& mu1,
                           const std::vector<long long>& mu2) {
  if (mu1.size() != mu2.size())
    throw shape_error("mu1 and mu2 must have equal length");
  for (std::size_t i = 0; i < mu1.size(); ++i)
    if (mu1[i] < 1 || mu2[i] < 1)
      throw precondition_error("partition entries must be positive");

  const std::vector<int> caps = caps_from_mu2(mu2);
  const long long length = std::accumulate(mu2.begin(), mu2.end(), 0LL);
  RatSeries lin = linear_factor<Rat>(caps, mu1, /*squared=*/false);
  RatSeries sq = linear_factor<Rat>(caps, mu1, /*squared=*/true);

  FormalClass cls;
  cls.d = d;
  cls.length = length;
  cls.caps = caps;

  for (long long a = 0; a + length <= d; ++a) {
    RatSeries acc(caps);
    for (long long b = 0; b <= a; ++b) {
      Rat weight(((a + b) % 2 == 0) ? 1 : -1);
      weight /= Rat(factorial(static_cast<unsigned long>(b)) *
                    factorial(static_cast<unsigned long>(a - b)));
      RatSeries term = lin.pow(length - g + b) * sq.pow(g - b);
      acc = acc + RatSeries::constant(caps, weight) * term;
    }
    Series integral(caps);
    for (const auto& [m, c] : acc.terms()) {
      if (c.get_den() != 1)
        throw integrality_error(
            "non-integral coefficient " + c.get_str() + " in the x^" +
            std::to_string(d - length - a) + " theta^" + std::to_string(a) +
            " term of the diagonal class");
      integral.add_term(m, c.get_num());
    }
    if (!integral.terms().empty())
      cls.terms.emplace(std::make_pair(d - length - a, a), std::move(integral));
  }
  return cls;
}

}  // namespace dejonq
