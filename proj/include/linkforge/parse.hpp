#pragma once

#include <string>

#include "linkforge/algebra.hpp"

namespace linkforge {

// Terse polynomial grammar, e.g. "(t^2+1)+(i t-2)e". A trailing bare `e`
// marks the dual part: the term "Xe" contributes eta*X. Numbers are
// integers, rationals "p/q", or decimals (with optional exponent, where
// the `e` is only an exponent when directly followed by digits).
// Juxtaposition multiplies; `^` takes a nonnegative integer power.
// All parsers throw ParseError.
MPoly parse_motion_poly(const std::string& text, Backend b);
CPoly parse_cpoly(const std::string& text, Backend b);       // no dual part
KElement parse_k_element(const std::string& text, Backend b);  // degree 0
Scalar parse_scalar(const std::string& text, Backend b);

// Approx when the text contains a decimal point, exact otherwise.
Backend detect_backend(const std::string& text);

// Canonical writers; output re-parses to the same value (bit-stable on
// both backends).
std::string cpoly_str(const CPoly& p);
std::string mpoly_str(const MPoly& p);
std::string k_element_str(const KElement& k);

}  // namespace linkforge
