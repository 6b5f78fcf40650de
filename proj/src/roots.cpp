#include "linkforge/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "linkforge/sturm.hpp"

namespace linkforge {

namespace {

using cdouble = std::complex<double>;

cdouble eval_d(const std::vector<cdouble>& c, cdouble t) {
  cdouble acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<cdouble> deriv_d(const std::vector<cdouble>& c) {
  std::vector<cdouble> d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * double(i));
  return d;
}

// Best rational approximation with bounded denominator (continued
// fractions); used to lift a polished double root back to Q.
mpq_class reconstruct_rational(double x, unsigned long max_den = 1000000000000UL) {
  if (x == 0.0) return 0;
  bool neg = x < 0;
  double v = std::abs(x);
  // Convergents p/q of the continued fraction of v.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9e18) break;
    mpz_class a(static_cast<unsigned long>(fl));
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    mpq_class approx(p1, q1);
    approx.canonicalize();
    if (std::abs(approx.get_d() - v) <= 1e-13 * std::max(1.0, v)) break;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  mpq_class r(p1, q1);
  r.canonicalize();
  return neg ? mpq_class(-r) : r;
}

std::vector<cdouble> to_doubles(const CPoly& p) {
  std::vector<cdouble> c;
  c.reserve(p.coeffs().size());
  for (const auto& s : p.coeffs()) c.push_back(s.to_complex());
  return c;
}

bool conj_eq(const Scalar& a, const Scalar& b) {
  if (a.backend() == Backend::Exact) return a == b.conj();
  cdouble d = a.to_complex() - std::conj(b.to_complex());
  return std::abs(d) <= approx_eps() * (1.0 + std::abs(a.to_complex()));
}

RootList sorted_roots(RootList r) {
  std::sort(r.begin(), r.end(), [](const RootEntry& a, const RootEntry& b) {
    if (a.value != b.value || a.value.backend() == Backend::Exact) {
      if (Scalar::lex_less(a.value, b.value)) return true;
      if (Scalar::lex_less(b.value, a.value)) return false;
    }
    return a.mult < b.mult;
  });
  return r;
}

RootList complex_roots_exact(const CPoly& z) {
  CPoly rem = z.monicized();
  // Work on the squarefree part so the numeric stage sees simple roots.
  CPoly g = euclid_gcd(rem, rem.derivative());
  CPoly sf = g.degree() > 0 ? rem.divmod(g).q.monicized() : rem;
  auto dc = to_doubles(sf);
  auto approx = numeric_roots(dc);
  RootList out;
  CPoly check = sf;
  for (cdouble r : approx) {
    Scalar cand = Scalar::exact(reconstruct_rational(r.real()),
                                reconstruct_rational(r.imag()));
    CPoly lin = CPoly::linear_root(cand);
    if (!lin.divides(check)) throw NotExactlySplit();
    check = check.divmod(lin).q;
    // Multiplicity against the full polynomial.
    bool seen = false;
    for (const auto& e : out) seen = seen || e.value == cand;
    if (!seen) out.push_back({cand, root_multiplicity(rem, cand)});
  }
  int total = 0;
  for (const auto& e : out) total += e.mult;
  if (total != z.degree()) throw NotExactlySplit();
  return sorted_roots(std::move(out));
}

RootList complex_roots_approx(const CPoly& z) {
  auto rts = numeric_roots(to_doubles(z));
  if (static_cast<int>(rts.size()) != z.degree()) throw NonConvergence();
  // Multiplicity-aware clustering: merge nearest clusters while their
  // distance stays below eps^(1/combined size).
  struct Cluster { cdouble centroid; std::vector<cdouble> members; };
  std::sort(rts.begin(), rts.end(), [](cdouble a, cdouble b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::vector<Cluster> cs;
  for (cdouble r : rts) cs.push_back({r, {r}});
  bool merged = true;
  while (merged) {
    merged = false;
    double best = 0;
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < cs.size() && !merged; ++i)
      for (size_t j = i + 1; j < cs.size(); ++j) {
        double d = std::abs(cs[i].centroid - cs[j].centroid);
        double radius = std::pow(
            approx_eps(), 1.0 / double(cs[i].members.size() + cs[j].members.size()));
        if (d <= radius && (!merged || d < best)) {
          merged = true;
          best = d;
          bi = i;
          bj = j;
        }
      }
    if (merged) {
      auto& a = cs[bi];
      auto& b = cs[bj];
      a.members.insert(a.members.end(), b.members.begin(), b.members.end());
      cdouble sum = 0;
      for (cdouble m : a.members) sum += m;
      a.centroid = sum / double(a.members.size());
      cs.erase(cs.begin() + static_cast<long>(bj));
    }
  }
  RootList out;
  for (const auto& c : cs)
    out.push_back({Scalar::approx(c.centroid), static_cast<int>(c.members.size())});
  return sorted_roots(std::move(out));
}

}  // namespace

std::vector<cdouble> numeric_roots(const std::vector<cdouble>& coeffs_in) {
  std::vector<cdouble> c = coeffs_in;
  double scale = 0;
  for (cdouble x : c) scale = std::max(scale, std::abs(x));
  if (scale == 0) return {};
  while (!c.empty() && std::abs(c.back()) <= 1e-14 * scale) c.pop_back();
  if (c.size() <= 1) return {};
  int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw NonConvergence();
  std::vector<cdouble> roots(n);
  auto d = deriv_d(c);
  for (int i = 0; i < n; ++i) {
    cdouble r = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      cdouble dv = eval_d(d, r);
      if (std::abs(dv) < 1e-300) break;
      cdouble step = eval_d(c, r) / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      r -= step;
    }
    roots[i] = r;
  }
  return roots;
}

RootList complex_roots(const CPoly& z) {
  if (z.is_zero()) throw Error("complex_roots of the zero polynomial");
  if (z.degree() == 0) return {};
  return z.backend() == Backend::Exact ? complex_roots_exact(z)
                                       : complex_roots_approx(z);
}

GroupedRoots group_conjugates(const RootList& roots) {
  GroupedRoots out;
  std::vector<bool> done(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (done[i]) continue;
    if (roots[i].value.is_real()) {
      out.real_roots.push_back(roots[i]);
      done[i] = true;
      continue;
    }
    size_t match = roots.size();
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (!done[j] && conj_eq(roots[i].value, roots[j].value)) { match = j; break; }
    if (match == roots.size()) {
      out.pairs.push_back({roots[i].value, roots[i].mult, 0});
      done[i] = true;
      continue;
    }
    const RootEntry &a = roots[i], &b = roots[match];
    // Base alpha: the higher multiplicity; ties resolved toward
    // positive imaginary part.
    bool a_base = a.mult > b.mult ||
                  (a.mult == b.mult && a.value.to_complex().imag() > 0);
    const RootEntry& base = a_base ? a : b;
    const RootEntry& other = a_base ? b : a;
    out.pairs.push_back({base.value, base.mult, other.mult});
    done[i] = done[match] = true;
  }
  return out;
}

CPoly c_gcd(const std::vector<CPoly>& ps) {
  std::vector<CPoly> nz;
  for (const auto& p : ps)
    if (!p.is_zero()) nz.push_back(p);
  if (nz.empty()) throw Error("c_gcd of all-zero inputs");
  Backend b = nz[0].backend();
  if (b == Backend::Exact) {
    CPoly g = nz[0];
    for (size_t i = 1; i < nz.size(); ++i) g = euclid_gcd(g, nz[i]);
    return g.degree() >= 0 ? g.monicized() : g;
  }
  // Approx: intersect root clusters with minimal multiplicities.
  RootList shared = complex_roots(nz[0]);
  for (size_t i = 1; i < nz.size() && !shared.empty(); ++i) {
    RootList next;
    for (const auto& e : shared) {
      int m = std::min(e.mult, root_multiplicity(nz[i], e.value));
      if (m > 0) next.push_back({e.value, m});
    }
    shared = std::move(next);
  }
  CPoly g = CPoly::one(b);
  for (const auto& e : shared)
    g = g * CPoly::linear_root(e.value).pow(e.mult);
  return g;
}

int root_multiplicity(const CPoly& w, const Scalar& a) {
  if (w.is_zero()) throw Error("root_multiplicity of the zero polynomial");
  CPoly p = w;
  CPoly lin = CPoly::linear_root(a);
  int m = 0;
  if (w.backend() == Backend::Exact) {
    while (!p.is_zero() && lin.divides(p)) {
      p = p.divmod(lin).q;
      ++m;
    }
    return m;
  }
  double scale = 0;
  for (const auto& c : w.coeffs()) scale = std::max(scale, std::abs(c.to_complex()));
  double tol = approx_eps() * (1.0 + scale);
  while (p.degree() >= 1 && std::abs(p.eval(a).to_complex()) <= tol) {
    p = p.divmod(lin).q;
    ++m;
  }
  return m;
}

bool has_real_root(const CPoly& z) {
  if (z.is_zero()) return true;
  if (z.degree() == 0) return false;
  if (z.backend() == Backend::Approx) {
    for (const auto& e : complex_roots(z))
      if (std::abs(e.value.to_complex().imag()) <= approx_eps()) return true;
    return false;
  }
  // Real roots of Z = common real roots of its real and imaginary parts.
  Scalar half = Scalar::exact(mpq_class(1, 2), 0);
  Scalar half_i = Scalar::exact(0, mpq_class(-1, 2));  // 1/(2i)
  CPoly a = (z + z.conj()).scaled(half);
  CPoly b = (z - z.conj()).scaled(half_i);
  CPoly g = b.is_zero() ? a : (a.is_zero() ? b : euclid_gcd(a, b));
  if (g.degree() <= 0) return false;
  return sturm_count_all(sturm_chain(g)) > 0;
}

bool is_bounded(const MPoly& p) {
  return p.is_monic() && !has_real_root(p.Z);
}

bool boundedness_uncertain(const MPoly& p) {
  if (p.backend() != Backend::Approx || p.Z.degree() < 1) return false;
  // Inspect the raw numeric roots: clustering would fold a nearly-real
  // conjugate pair into a real double root and hide the ambiguity.
  for (cdouble r : numeric_roots(to_doubles(p.Z))) {
    double im = std::abs(r.imag());
    double scale = 1.0 + std::abs(r.real());
    if (im > approx_eps() / 1000 && im <= 1e-4 * scale) return true;
  }
  return false;
}

std::vector<RealRoot> real_poly_roots(const CPoly& p) {
  if (!p.is_real()) throw Error("real_poly_roots needs a real polynomial");
  std::vector<RealRoot> out;
  if (p.degree() < 1) return out;
  if (p.backend() == Backend::Approx) {
    auto coeffs = to_doubles(p);
    auto rts = numeric_roots(coeffs);
    auto evr = [&](double t) {
      double acc = 0;
      for (size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i].real();
      return acc;
    };
    std::vector<double> reals;
    for (cdouble r : rts) {
      double im = std::abs(r.imag());
      if (im <= approx_eps()) {
        reals.push_back(r.real());
        continue;
      }
      double scale = 1.0 + std::abs(r.real());
      if (im > 1e-4 * scale) continue;
      // Nearly-real root of an ill-conditioned polynomial: certify it by
      // a sign change of the real coefficient sequence and bisect.
      double a = r.real() - std::max(8 * im, 1e-12 * scale);
      double b = r.real() + std::max(8 * im, 1e-12 * scale);
      double fa = evr(a), fb = evr(b);
      if ((fa < 0) == (fb < 0) && fa != 0 && fb != 0) continue;
      for (int it = 0; it < 200 && b - a > 1e-15 * scale; ++it) {
        double m = 0.5 * (a + b);
        double fm = evr(m);
        if (fm == 0) {
          a = b = m;
          break;
        }
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      reals.push_back(0.5 * (a + b));
    }
    std::sort(reals.begin(), reals.end());
    for (double r : reals) {
      if (!out.empty() && std::abs(out.back().t - r) <= approx_eps()) continue;
      out.push_back({r, false, mpq_class(0)});
    }
    return out;
  }
  // Exact backend: lift rational roots exactly, Sturm-isolate the rest.
  CPoly g = euclid_gcd(p, p.derivative());
  CPoly sf = g.degree() > 0 ? p.divmod(g).q.monicized() : p.monicized();
  auto rts = numeric_roots(to_doubles(sf));
  CPoly rest = sf;
  for (cdouble r : rts) {
    if (std::abs(r.imag()) > 1e-7) continue;
    mpq_class cand = reconstruct_rational(r.real());
    CPoly lin = CPoly::linear_root(Scalar::exact(cand, 0));
    if (lin.divides(rest)) {
      rest = rest.divmod(lin).q;
      out.push_back({cand.get_d(), true, cand});
    }
  }
  if (rest.degree() >= 1) {
    auto chain = sturm_chain(rest);
    if (sturm_count_all(chain) > 0) {
      mpq_class bound = sturm_root_bound(rest);
      struct Iv { mpq_class a, b; int n; };
      std::vector<Iv> stack{{-bound, bound, sturm_count(chain, -bound, bound)}};
      mpq_class width(1, 1);
      for (int i = 0; i < 60; ++i) width /= 2;  // ~1e-18 absolute
      while (!stack.empty()) {
        Iv iv = stack.back();
        stack.pop_back();
        if (iv.n <= 0) continue;
        mpq_class mid = (iv.a + iv.b) / 2;
        if (iv.n == 1 && iv.b - iv.a < width * (abs(iv.a) + 1)) {
          bool hit = sturm_sign_at(rest, mid) == 0;
          out.push_back({mid.get_d(), hit, mid});
          continue;
        }
        if (sturm_sign_at(rest, mid) == 0) {
          // The split point is itself a root; report it and carve it out.
          out.push_back({mid.get_d(), true, mid});
          mpq_class d = (iv.b - iv.a) / 1024;
          stack.push_back({iv.a, mid - d, sturm_count(chain, iv.a, mid - d)});
          stack.push_back({mid - d, mid, sturm_count(chain, mid - d, mid) - 1});
          stack.push_back({mid, iv.b, sturm_count(chain, mid, iv.b)});
          continue;
        }
        int nl = sturm_count(chain, iv.a, mid);
        stack.push_back({iv.a, mid, nl});
        stack.push_back({mid, iv.b, iv.n - nl});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.t < b.t; });
  return out;
}

}  // namespace linkforge
