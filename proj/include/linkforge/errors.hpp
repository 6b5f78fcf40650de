#pragma once

#include <stdexcept>
#include <string>

namespace linkforge {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing exact and approximate operands is never coerced silently.
struct MixedBackend : Error {
  MixedBackend() : Error("mixed exact/approx operands") {}
};

struct ZeroPrimal : Error {
  ZeroPrimal() : Error("primal part is zero; element is not an isometry") {}
};

struct RealPrimal : Error {
  RealPrimal() : Error("primal part is real; a translation has no fixed point") {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct NotExactlySplit : Error {
  NotExactlySplit() : Error("polynomial does not split over the Gaussian rationals") {}
};

struct NonConvergence : Error {
  NonConvergence() : Error("root finding did not converge") {}
};

struct NotBounded : Error {
  NotBounded() : Error("motion polynomial is not bounded") {}
};

struct RealCommonFactor : Error {
  RealCommonFactor() : Error("primal and secondary part share a real factor; strip it first") {}
};

struct Inconsistent : Error {
  Inconsistent() : Error("target polynomial is not in the span of the Q_i") {}
};

struct DegenerateFlip : Error {
  DegenerateFlip() : Error("flip is degenerate: z1 equals conj(z2)") {}
};

struct RealRootError : Error {
  RealRootError() : Error("polynomial has a real root") {}
};

struct NotLadder : Error {
  NotLadder() : Error("linkage is not a ladder") {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace linkforge
