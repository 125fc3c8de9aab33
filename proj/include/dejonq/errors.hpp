#pragma once

#include <stdexcept>
#include <string>

namespace dejonq {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched variable counts, caps, or out-of-range multi-indices.
struct shape_error : error {
  using error::error;
};

// Negative power of a series whose constant term is not 1.
struct non_invertible_error : error {
  using error::error;
};

// An operation was called outside its stated domain
// (e.g. a count with nonzero expected dimension).
struct precondition_error : error {
  using error::error;
};

// Rational denominators survived a computation that must end integral.
struct integrality_error : error {
  using error::error;
};

// A result contradicts an internal model assumption (flags a bug, not bad input).
struct consistency_error : error {
  using error::error;
};

// A specialization or twist system has no admissible solution where one
// was structurally required.
struct infeasible_error : error {
  using error::error;
};

// Malformed input documents (graph JSON and friends).
struct parse_error : error {
  using error::error;
};

}  // namespace dejonq
