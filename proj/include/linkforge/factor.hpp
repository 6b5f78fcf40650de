#pragma once

#include <utility>
#include <vector>

#include "linkforge/algebra.hpp"
#include "linkforge/linalg.hpp"
#include "linkforge/roots.hpp"

namespace linkforge {

// Ordered tuple of primal-part roots (z_1, ..., z_n).
using RootPerm = std::vector<Scalar>;

// Q_i(z) = (t - conj(z_1)) ... (t - conj(z_{i-1})) (t - z_{i+1}) ... (t - z_n),
// i is 1-based.
CPoly build_Q(const RootPerm& z, int i);

// Matching: pairs (i,j), i < j (1-based), z_i = conj(z_j), first entries
// pairwise distinct and second entries pairwise distinct. Deterministic
// maximum matching (augmenting paths, index order).
using Matching = std::vector<std::pair<int, int>>;
Matching max_matching(const RootPerm& z);

// gcd(Q_1, ..., Q_n) computed combinatorially as prod over the matching
// of (t - z_j); monic.
CPoly gcd_of_Q(const RootPerm& z);

// Minimal real monic R with R*(Z + eta W) factorizable:
// R = gcd(Z, conj Z) / gcd(gcd(Z, conj Z), W conj W).
CPoly minimal_R(const CPoly& z, const CPoly& w);

// Block arrangement of the roots of R*Z from the bounded-factor proof.
RootPerm admissible_permutation(const GroupedRoots& z_roots, const CPoly& w);

// Coefficients w_j with sum w_j Q_j(z) = target; deterministic pivoted
// solution. Throws Inconsistent when target is outside the span.
Vec solve_secondary(const RootPerm& z, const CPoly& target);

struct Factorization {
  CPoly R;
  std::vector<KElement> factors;  // (t-k_1)...(t-k_n) = R*P
  RootPerm perm;
};
Factorization factor_motion_polynomial(const MPoly& p);

// C with C*conj(C) = h and gcd(C, conj C) = 1; the root with positive
// imaginary part of each conjugate pair goes into C.
CPoly drawing_multiplier(const CPoly& h);

// P = S * P' with S the maximal monic real divisor of both parts.
struct Stripped {
  CPoly S;
  MPoly P;
};
Stripped strip_real_content(const MPoly& p);

}  // namespace linkforge
