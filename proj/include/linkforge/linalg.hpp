#pragma once

#include <optional>
#include <vector>

#include "linkforge/scalar.hpp"

namespace linkforge {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

// Gauss-Jordan elimination, columns processed left to right, pivot =
// first unused row with a nonzero entry (approx: |entry| > eps). Free
// variables are fixed at 0, so underdetermined systems get one
// deterministic representative solution.
struct SolveResult {
  std::optional<Vec> x;  // empty when inconsistent
  int rank = 0;
};
SolveResult solve_span(Mat a, Vec b);

int rank(Mat a);
Scalar det(Mat a);  // square

}  // namespace linkforge
