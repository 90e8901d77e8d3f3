#pragma once

#include <stdexcept>
#include <string>

namespace eulerseq {

// Caller handed us inconsistent data: mixed fields, malformed polynomials,
// degree mismatches, non-monic place equations and the like.
struct InvalidInputError : std::runtime_error {
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in an expression or input document.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// The divisor fails the positivity precondition; carries the exact degree.
struct NonAmpleError : std::runtime_error {
  std::string degree;
  explicit NonAmpleError(std::string deg)
      : std::runtime_error("divisor is not ample: degree " + deg), degree(std::move(deg)) {}
};

// A mathematical hypothesis of the requested computation does not hold.
struct HypothesisViolatedError : std::runtime_error {
  explicit HypothesisViolatedError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed. This is a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace eulerseq
