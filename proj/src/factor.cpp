#include "linkforge/factor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace linkforge {

namespace {

// z_i = conj(z_j), scale-aware on the approx backend.
bool conj_eq(const Scalar& a, const Scalar& b) {
  if (a.backend() == Backend::Exact) return a == b.conj();
  auto d = a.to_complex() - std::conj(b.to_complex());
  return std::abs(d) <= approx_eps() * (1.0 + std::abs(a.to_complex()));
}

}  // namespace

CPoly build_Q(const RootPerm& z, int i) {
  int n = static_cast<int>(z.size());
  Backend b = n ? z[0].backend() : Backend::Exact;
  CPoly q = CPoly::one(b);
  for (int l = 1; l < i; ++l) q = q * CPoly::linear_root(z[l - 1].conj());
  for (int l = i + 1; l <= n; ++l) q = q * CPoly::linear_root(z[l - 1]);
  return q;
}

Matching max_matching(const RootPerm& z) {
  int n = static_cast<int>(z.size());
  std::vector<std::vector<int>> adj(n + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (conj_eq(z[i - 1], z[j - 1])) adj[i].push_back(j);
  std::vector<int> match_right(n + 1, 0);  // j -> i
  std::vector<bool> visited;
  // Kuhn's augmenting paths; lefts in index order for determinism.
  std::function<bool(int)> try_augment = [&](int i) -> bool {
    for (int j : adj[i]) {
      if (visited[j]) continue;
      visited[j] = true;
      if (match_right[j] == 0 || try_augment(match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 1; i <= n; ++i) {
    visited.assign(n + 1, false);
    try_augment(i);
  }
  Matching m;
  for (int j = 1; j <= n; ++j)
    if (match_right[j]) m.push_back({match_right[j], j});
  std::sort(m.begin(), m.end());
  return m;
}

CPoly gcd_of_Q(const RootPerm& z) {
  Backend b = z.empty() ? Backend::Exact : z[0].backend();
  CPoly g = CPoly::one(b);
  for (const auto& [i, j] : max_matching(z))
    g = g * CPoly::linear_root(z[j - 1]);
  return g;
}

CPoly minimal_R(const CPoly& z, const CPoly& w) {
  CPoly rt = c_gcd({z, z.conj()});
  if (rt.degree() <= 0) return CPoly::one(z.backend());
  CPoly shared = c_gcd({rt, w * w.conj()});
  return rt.divmod(shared).q.monicized();
}

RootPerm admissible_permutation(const GroupedRoots& z_roots, const CPoly& w) {
  std::vector<ConjGroup> pairs = z_roots.pairs;
  std::sort(pairs.begin(), pairs.end(), [](const ConjGroup& a, const ConjGroup& b) {
    return Scalar::lex_less(a.alpha, b.alpha);
  });
  RootPerm q;
  for (const auto& g : pairs) {
    int u = w.is_zero() ? 0 : root_multiplicity(w, g.alpha);
    int v = w.is_zero() ? 0 : root_multiplicity(w, g.alpha.conj());
    int m = std::min(g.s, u + v);
    Scalar ac = g.alpha.conj();
    for (int c = 0; c < g.s - std::min(g.s, v); ++c) q.push_back(ac);
    for (int c = 0; c < g.r + g.s - m; ++c) q.push_back(g.alpha);
    for (int c = 0; c < g.s - std::min(g.s, u); ++c) q.push_back(ac);
  }
  return q;
}

Vec solve_secondary(const RootPerm& z, const CPoly& target) {
  int n = static_cast<int>(z.size());
  if (target.degree() >= n) throw Inconsistent();
  Backend b = n ? z[0].backend() : target.backend();
  Mat m(n, Vec(n, Scalar::zero(b)));
  for (int j = 1; j <= n; ++j) {
    CPoly qj = build_Q(z, j);
    for (int row = 0; row < n; ++row) m[row][j - 1] = qj.coeff(row);
  }
  Vec rhs(n, Scalar::zero(b));
  for (int row = 0; row < n; ++row) rhs[row] = target.coeff(row);
  auto sol = solve_span(std::move(m), std::move(rhs));
  if (!sol.x) throw Inconsistent();
  return *sol.x;
}

Factorization factor_motion_polynomial(const MPoly& p) {
  if (!is_bounded(p)) throw NotBounded();
  // Reject a nonconstant shared real factor; the caller strips it.
  {
    CPoly g = p.W.is_zero() ? p.Z.monicized() : c_gcd({p.Z, p.W});
    if (g.degree() > 0) {
      CPoly s = c_gcd({g, g.conj()});
      if (s.degree() > 0) throw RealCommonFactor();
    }
  }
  GroupedRoots grouped = group_conjugates(complex_roots(p.Z));
  Backend b = p.backend();
  CPoly r = CPoly::one(b);
  for (const auto& g : grouped.pairs) {
    int u = p.W.is_zero() ? 0 : root_multiplicity(p.W, g.alpha);
    int v = p.W.is_zero() ? 0 : root_multiplicity(p.W, g.alpha.conj());
    int m = std::min(g.s, u + v);
    CPoly ri = CPoly::linear_root(g.alpha) * CPoly::linear_root(g.alpha.conj());
    r = r * ri.pow(g.s - m);
  }
  RootPerm q = admissible_permutation(grouped, p.W);
  CPoly target = r * p.W;
  Vec w = solve_secondary(q, target);
  Factorization out;
  out.R = r;
  out.perm = q;
  out.factors.reserve(q.size());
  for (size_t j = 0; j < q.size(); ++j)
    out.factors.push_back({q[j], -w[j]});  // k_j = q_j - eta w_j
  return out;
}

CPoly drawing_multiplier(const CPoly& h) {
  auto grouped = group_conjugates(complex_roots(h));
  if (!grouped.real_roots.empty()) throw RealRootError();
  CPoly c = CPoly::one(h.backend());
  for (const auto& g : grouped.pairs) {
    if (g.r != g.s) throw RealRootError();  // cannot happen for real h
    Scalar pick = g.alpha.to_complex().imag() > 0 ? g.alpha : g.alpha.conj();
    c = c * CPoly::linear_root(pick).pow(g.r);
  }
  return c;
}

Stripped strip_real_content(const MPoly& p) {
  Backend b = p.backend();
  CPoly g = p.W.is_zero() ? p.Z.monicized() : c_gcd({p.Z, p.W});
  CPoly s = g.degree() > 0 ? c_gcd({g, g.conj()}) : CPoly::one(b);
  if (s.degree() <= 0) return {CPoly::one(b), p};
  return {s, {p.Z.divmod(s).q, p.W.is_zero() ? p.W : p.W.divmod(s).q}};
}

}  // namespace linkforge
