#pragma once

#include <gmpxx.h>

#include <string>

namespace dejonq {

// All coefficient arithmetic runs over GMP integers/rationals.  Counts grow
// multinomially with the partition data, so fixed-width integers are not an
// option anywhere a coefficient lives.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// gmpxx has no long long constructor; lossless on LP64.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace dejonq
