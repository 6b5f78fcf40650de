#include "linkforge/linalg.hpp"

#include <cmath>

namespace linkforge {

SolveResult solve_span(Mat a, Vec b) {
  const size_t m = a.size();
  const size_t n = m ? a[0].size() : 0;
  Backend bk = m ? (n ? a[0][0].backend() : b[0].backend())
                 : Backend::Exact;
  std::vector<bool> used(m, false);
  std::vector<int> pivot_row(n, -1);
  int rk = 0;
  for (size_t j = 0; j < n; ++j) {
    size_t sel = m;
    for (size_t i = 0; i < m; ++i)
      if (!used[i] && !a[i][j].is_zero()) { sel = i; break; }
    if (sel == m) continue;
    used[sel] = true;
    pivot_row[j] = static_cast<int>(sel);
    ++rk;
    Scalar inv = Scalar::one(bk) / a[sel][j];
    for (size_t c = 0; c < n; ++c) a[sel][c] = a[sel][c] * inv;
    b[sel] = b[sel] * inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == sel || a[i][j].is_zero()) continue;
      Scalar f = a[i][j];
      for (size_t c = 0; c < n; ++c) a[i][c] = a[i][c] - f * a[sel][c];
      b[i] = b[i] - f * b[sel];
    }
  }
  for (size_t i = 0; i < m; ++i)
    if (!used[i] && !b[i].is_zero()) return {std::nullopt, rk};
  Vec x(n, Scalar::zero(bk));
  for (size_t j = 0; j < n; ++j)
    if (pivot_row[j] >= 0) x[j] = b[pivot_row[j]];
  return {x, rk};
}

int rank(Mat a) {
  const size_t m = a.size();
  const size_t n = m ? a[0].size() : 0;
  int rk = 0;
  size_t row = 0;
  for (size_t j = 0; j < n && row < m; ++j) {
    // Partial pivot by magnitude (harmless on the exact backend).
    size_t sel = row;
    double best = std::abs(a[row][j].to_complex());
    for (size_t i = row + 1; i < m; ++i) {
      double v = std::abs(a[i][j].to_complex());
      if (v > best) { best = v; sel = i; }
    }
    if (a[sel][j].is_zero()) continue;
    std::swap(a[sel], a[row]);
    for (size_t i = row + 1; i < m; ++i) {
      if (a[i][j].is_zero()) continue;
      Scalar f = a[i][j] / a[row][j];
      for (size_t c = j; c < n; ++c) a[i][c] = a[i][c] - f * a[row][c];
    }
    ++row;
    ++rk;
  }
  return rk;
}

Scalar det(Mat a) {
  const size_t n = a.size();
  if (n == 0) return Scalar::exact_int(1);
  Backend bk = a[0][0].backend();
  Scalar result = Scalar::one(bk);
  for (size_t j = 0; j < n; ++j) {
    size_t sel = j;
    double best = std::abs(a[j][j].to_complex());
    for (size_t i = j + 1; i < n; ++i) {
      double v = std::abs(a[i][j].to_complex());
      if (v > best) { best = v; sel = i; }
    }
    if (a[sel][j].is_zero()) return Scalar::zero(bk);
    if (sel != j) {
      std::swap(a[sel], a[j]);
      result = -result;
    }
    result = result * a[j][j];
    for (size_t i = j + 1; i < n; ++i) {
      if (a[i][j].is_zero()) continue;
      Scalar f = a[i][j] / a[j][j];
      for (size_t c = j; c < n; ++c) a[i][c] = a[i][c] - f * a[j][c];
    }
  }
  return result;
}

}  // namespace linkforge
