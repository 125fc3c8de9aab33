#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dejonq/bigint.hpp"
#include "dejonq/series.hpp"

namespace dejonq {

// One counting/dimension problem: a genus-g curve carrying a linear series of
// degree d and dimension r, together with the multiplicity vector mu1 =
// (a_1..a_k) and the degree vector mu2 = (d_1..d_k) of the divisor parts.
// Requires sum a_i d_i = d, k <= d, and all entries positive.
struct DJProblem {
  long long g = 0;
  long long r = 0;
  long long d = 0;
  std::vector<long long> mu1;
  std::vector<long long> mu2;

  DJProblem() = default;
  DJProblem(long long g_, long long r_, long long d_, std::vector<long long> mu1_,
            std::vector<long long> mu2_);

  std::size_t parts() const { return mu1.size(); }
  // Total length N = sum d_i of the divisor.
  long long length() const;
};

// g - (r+1)(g-d+r).
long long brill_noether(long long g, long long r, long long d);

// N - d + r, the lower bound for (and generically the exact) dimension of the
// space of divisors of the prescribed shape inside the series.
long long expected_dimension(const DJProblem& p);

// Product of multiplicity factorials over repeated (a_i, d_i) pairs.  The
// coefficient extraction counts ordered tuples of parts; dividing by this
// factor counts unordered divisors.
Int symmetry_factor(const std::vector<long long>& mu1,
                    const std::vector<long long>& mu2);

// Coefficient of t_1^{d_1}...t_k^{d_k} in
//   (1 + sum a_i^2 t_i)^g (1 + sum a_i t_i)^{d-r-g},
// counting ordered part tuples.  Only defined when expected_dimension is 0.
Int dejonquieres_count_ordered(const DJProblem& p);

// Ordered count normalized by the symmetry factor; throws consistency_error
// if the division does not come out exact.
Int dejonquieres_count(const DJProblem& p);

// Coefficient of t_1^{d_1}...t_k^{d_k} in
//   (1 + sum a_i t_i)^{N-g} (1 + sum a_i^2 t_i)^g,
// the theta-restricted class of the multiplicity locus.  This is the second,
// independent route to the count when N - d + r = 0.
Int restricted_class_coefficient(long long g, long long d,
                                 const std::vector<long long>& mu1,
                                 const std::vector<long long>& mu2);

// Expected dimension >= 0 and the restricted class coefficient is positive.
bool existence_check(const DJProblem& p);

// Formal class on the symmetric product: a polynomial in the hyperplane-type
// class x and the theta pullback, with coefficients that are integer series
// in t_1..t_k.  Keyed by (x power, theta power).
struct FormalClass {
  long long d = 0;
  long long length = 0;
  std::vector<int> caps;
  std::map<std::pair<long long, long long>, Series> terms;

  // The theta -> 0 restriction: the unique term with theta power 0, or a
  // zero series when absent.
  Series theta_zero_part() const;
};

// Full pushforward class of the multiplicity locus:
//   sum_{a >= b} (-1)^{a+b} / (b!(a-b)!)
//     (1 + sum a_i t_i)^{N-g+b} (1 + sum a_i^2 t_i)^{g-b} x^{d-N-a} theta^a,
// with terms of negative x power omitted.  The factorials are carried as
// exact rationals per (x,theta) monomial and must cancel in the total;
// throws integrality_error when they do not.
FormalClass diagonal_class(long long g, long long d,
                           const std::vector<long long>& mu1,
                           const std::vector<long long>& mu2);

}  // namespace dejonq
