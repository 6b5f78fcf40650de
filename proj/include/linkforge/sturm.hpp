#pragma once

#include <vector>

#include "linkforge/poly.hpp"

namespace linkforge {

// Sturm-sequence machinery for real polynomials on the exact backend.
// Input polynomials must have real (rational) coefficients.

std::vector<CPoly> sturm_chain(const CPoly& p);

// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const std::vector<CPoly>& chain, const mpq_class& a,
                const mpq_class& b);

// Number of distinct real roots on all of R.
int sturm_count_all(const std::vector<CPoly>& chain);

// Sign of p at a rational point / at +-infinity.
int sturm_sign_at(const CPoly& p, const mpq_class& x);

// Cauchy bound: all real roots lie in (-bound, bound).
mpq_class sturm_root_bound(const CPoly& p);

}  // namespace linkforge
