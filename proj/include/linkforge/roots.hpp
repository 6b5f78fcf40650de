#pragma once

#include <vector>

#include "linkforge/algebra.hpp"
#include "linkforge/poly.hpp"

namespace linkforge {

struct RootEntry {
  Scalar value;
  int mult;
};
using RootList = std::vector<RootEntry>;

// Conjugate-grouped view: alpha with exponent pair r >= s (s may be 0),
// real roots listed separately.
struct ConjGroup {
  Scalar alpha;
  int r, s;
};
struct GroupedRoots {
  std::vector<ConjGroup> pairs;
  RootList real_roots;
};

// All complex roots with multiplicities, sorted by (Re, Im).
// Exact backend: requires splitting over the Gaussian rationals,
// otherwise throws NotExactlySplit. Approx: companion-matrix
// eigenvalues, Newton polish, eps-aware clustering.
RootList complex_roots(const CPoly& z);

GroupedRoots group_conjugates(const RootList& roots);

// Monic gcd. Exact: Euclidean algorithm. Approx: shared root clusters
// with minimal multiplicity.
CPoly c_gcd(const std::vector<CPoly>& ps);

// Largest j with (t-a)^j | w.
int root_multiplicity(const CPoly& w, const Scalar& a);

bool has_real_root(const CPoly& z);
bool is_bounded(const MPoly& p);
// Approx backend only: true when some root of pp(P) is close enough to
// the real axis that boundedness depends on eps (nearly-real root).
bool boundedness_uncertain(const MPoly& p);

// Real roots of a real polynomial. `exact` marks roots found as exact
// rationals (always true for rational roots on the exact backend);
// irrational roots are refined to ~1e-15.
struct RealRoot {
  double t;
  bool exact;
  mpq_class value;  // meaningful when exact
};
std::vector<RealRoot> real_poly_roots(const CPoly& p);

// Numeric workhorse shared with the collision module: roots of a
// double-precision polynomial (ascending coefficients) via the
// companion matrix, Newton-polished.
std::vector<std::complex<double>> numeric_roots(
    const std::vector<std::complex<double>>& coeffs);

}  // namespace linkforge
