#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "dejonq/bigint.hpp"
#include "dejonq/errors.hpp"

namespace dejonq {

// Exponent vector of a monomial t_1^{e_1} ... t_k^{e_k}.
struct MultiIndex {
  std::vector<int> e;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exps) : e(std::move(exps)) {}

  static MultiIndex zero(std::size_t nvars) {
    return MultiIndex(std::vector<int>(nvars, 0));
  }

  std::size_t size() const { return e.size(); }
  int total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

// Sparse multivariate power series truncated by a per-variable degree cap.
// Terms whose exponent exceeds the cap in any variable are discarded, i.e.
// arithmetic happens in Z[t_1..t_k] / (t_1^{c_1+1}, .., t_k^{c_k+1}).
//
// Canonical form: no stored zero coefficients, so operator== is structural
// equality of the term maps.  Values are immutable in spirit: every operation
// returns a fresh series, which keeps them safe to share across sweep workers.
template <typename C>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<int> caps) : caps_(std::move(caps)) {
    for (int c : caps_)
      if (c < 0) throw shape_error("series cap must be non-negative");
  }

  static TruncatedSeries constant(std::vector<int> caps, C value) {
    TruncatedSeries s(std::move(caps));
    if (value != 0) s.terms_.emplace(MultiIndex::zero(s.nvars()), std::move(value));
    return s;
  }

  static TruncatedSeries one(std::vector<int> caps) {
    return constant(std::move(caps), C(1));
  }

  std::size_t nvars() const { return caps_.size(); }
  const std::vector<int>& caps() const { return caps_; }
  const std::map<MultiIndex, C>& terms() const { return terms_; }

  bool within_caps(const MultiIndex& m) const {
    if (m.size() != caps_.size()) return false;
    for (std::size_t i = 0; i < caps_.size(); ++i)
      if (m.e[i] < 0 || m.e[i] > caps_[i]) return false;
    return true;
  }

  // Accumulates c onto the coefficient of m; silently drops out-of-cap terms
  // so multiplication kernels can call it unconditionally.
  void add_term(const MultiIndex& m, const C& c) {
    if (m.size() != caps_.size())
      throw shape_error("multi-index arity does not match series");
    if (c == 0 || !within_caps(m)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  C coefficient(const MultiIndex& m) const {
    if (!within_caps(m))
      throw shape_error("multi-index outside the series caps");
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  C constant_term() const {
    auto it = terms_.find(MultiIndex::zero(nvars()));
    return it == terms_.end() ? C(0) : it->second;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.caps_ == b.caps_ && a.terms_ == b.terms_;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_shapes(a, b);
    TruncatedSeries r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_shapes(a, b);
    TruncatedSeries r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, C(-c));
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_shapes(a, b);
    TruncatedSeries r(a.caps_);
    MultiIndex m(std::vector<int>(a.caps_.size(), 0));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        bool ok = true;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
          m.e[i] = ma.e[i] + mb.e[i];
          if (m.e[i] > a.caps_[i]) {
            ok = false;
            break;
          }
        }
        if (ok) r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  // Integer power, negative exponents included.  A negative power first
  // inverts the series (which requires constant term exactly 1) and then
  // raises the inverse; both steps reuse the single multiplication kernel
  // and are exact modulo the cap ideal.
  TruncatedSeries pow(long long exponent) const {
    if (exponent >= 0) return pow_nonneg(*this, static_cast<unsigned long long>(exponent));
    if (constant_term() != 1)
      throw non_invertible_error(
          "negative power of a series whose constant term is not 1");
    return pow_nonneg(inverse(), static_cast<unsigned long long>(-(exponent + 1)) + 1ULL);
  }

  // Multiplicative inverse modulo the cap ideal, for series with constant
  // term 1.  Fixed-point iteration inv <- 1 - A*inv with A = S - 1 gains one
  // order of total degree per step, so sum(caps) steps are exact.
  TruncatedSeries inverse() const {
    if (constant_term() != 1)
      throw non_invertible_error("series with constant term != 1 has no inverse");
    TruncatedSeries unit = one(caps_);
    TruncatedSeries tail = *this - unit;
    TruncatedSeries inv = unit;
    int steps = std::accumulate(caps_.begin(), caps_.end(), 0);
    for (int i = 0; i < steps; ++i) inv = unit - tail * inv;
    return inv;
  }

 private:
  static void check_shapes(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.caps_ != b.caps_)
      throw shape_error("series operands have different variables or caps");
  }

  static TruncatedSeries pow_nonneg(TruncatedSeries base, unsigned long long n) {
    TruncatedSeries r = one(base.caps_);
    while (n > 0) {
      if (n & 1ULL) r = r * base;
      n >>= 1ULL;
      if (n > 0) base = base * base;
    }
    return r;
  }

  std::vector<int> caps_;
  std::map<MultiIndex, C> terms_;
};

using Series = TruncatedSeries<Int>;
using RatSeries = TruncatedSeries<Rat>;

// 1 + sum_i weights[i] * t_i, the shape every generating-function factor takes.
template <typename C>
TruncatedSeries<C> one_plus_linear(const std::vector<int>& caps,
                                   const std::vector<C>& weights) {
  if (caps.size() != weights.size())
    throw shape_error("weight count does not match variable count");
  auto s = TruncatedSeries<C>::one(caps);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    MultiIndex m = MultiIndex::zero(caps.size());
    m.e[i] = 1;
    s.add_term(m, weights[i]);
  }
  return s;
}

}  // namespace dejonq
