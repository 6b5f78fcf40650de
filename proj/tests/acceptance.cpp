// Acceptance checks, one printed line per criterion.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "linkforge/collision.hpp"
#include "linkforge/linalg.hpp"
#include "linkforge/parse.hpp"

using namespace linkforge;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  std::printf("%s: criterion %2d, %s [%.0f ms]%s\n", ok ? "PASS" : "FAIL", id,
              label.c_str(), ms, note.c_str());
  if (!ok) ++failures;
}

MPoly mp(const std::string& s) { return parse_motion_poly(s, Backend::Exact); }
CPoly cp(const std::string& s) { return parse_cpoly(s, Backend::Exact); }
KElement ke(const std::string& s) { return parse_k_element(s, Backend::Exact); }
Scalar sq(long re, long im = 0) { return Scalar::exact_int(re, im); }

MPoly product_of(const std::vector<KElement>& ks) {
  MPoly p = mp_one(ks.empty() ? Backend::Exact : ks[0].backend());
  for (const auto& k : ks) p = poly_mul(p, mp_linear(k));
  return p;
}

MPoly ellipse() { return mp("(t^2+1)+(it-2)e"); }
MPoly ellipse_drawing() { return mp_scale(cp("t-i"), ellipse()); }

const char* kJF =
    "-32188/122825t^5-218066/614125t^4-237449/1228250t^3-32244/614125t^2"
    "-4333/614125t-451/1228250";
const char* kJG =
    "-168009/614125t^5-472949/1228250t^4-270569/1228250t^3-39079/614125t^2"
    "-453/49130t-651/1228250";
const char* kJH =
    "t^6+162/85t^5+11187/7225t^4+4908/7225t^3+1219/7225t^2+162/7225t+9/7225";

MPoly j_motion(Backend b) {
  CPoly f = parse_cpoly(kJF, b), g = parse_cpoly(kJG, b), h = parse_cpoly(kJH, b);
  return MPoly(h, f + g.scaled(Scalar::imag_unit(b)));
}

// The displayed linear factors of C*P for the elliptic motion.
std::vector<KElement> paper_factors() {
  return {ke("(i)+(1/2i)e"), ke("(i)+(-1/2i)e"), ke("(-i)+(-i)e")};
}

KElement random_k(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  return {Scalar::exact_int(d(rng), d(rng)), Scalar::exact_int(d(rng), d(rng))};
}

bool check_event_residuals(const Linkage& l,
                           const std::vector<CollisionEvent>& events) {
  for (const auto& e : events) {
    std::vector<Scalar> centers;
    for (const auto& j : l.joints)
      if (j.i == e.link || j.j == e.link) centers.push_back(j.center);
    std::sort(centers.begin(), centers.end(), Scalar::lex_less);
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    if (e.segment + 1 >= static_cast<int>(centers.size())) return false;

    Scalar ts = l.backend == Backend::Exact
                    ? Scalar::exact(e.t_exact ? e.t_value
                                              : mpq_class(static_cast<long>(
                                                              e.t * 1e9),
                                                          1000000000),
                                    0)
                    : Scalar::approx({e.t, 0.0});
    auto at_event = [&](const Trajectory& tr) {
      return e.at_inf ? traj_eval_inf(tr).to_complex()
                      : traj_eval(tr, ts).to_complex();
    };
    std::complex<double> p1 = at_event(joint_trajectory(l, e.joint_index));
    std::complex<double> p3 =
        at_event(point_trajectory(l, e.link, centers[e.segment]));
    std::complex<double> p2 =
        at_event(point_trajectory(l, e.link, centers[e.segment + 1]));
    double scale = std::max({1.0, std::abs(p1), std::abs(p2), std::abs(p3)});
    if (std::abs(p1 - (e.s * p2 + (1.0 - e.s) * p3)) > 1e-8 * scale)
      return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "elliptic factorization, exact backend", [] {
    Factorization f = factor_motion_polynomial(ellipse());
    if (f.R != cp("t^2+1") || f.factors.size() != 4) return false;
    if (product_of(f.factors) != mp_scale(f.R, ellipse())) return false;
    Factorization fd = factor_motion_polynomial(ellipse_drawing());
    if (fd.R != CPoly::one(Backend::Exact) || fd.factors.size() != 3)
      return false;
    return product_of(fd.factors) == ellipse_drawing();
  });

  criterion(2, "minimality of R for the elliptic motion", [] {
    CPoly w = cp("it-2");
    for (RootPerm z :
         {RootPerm{sq(0, 1), sq(0, -1)}, RootPerm{sq(0, -1), sq(0, 1)}}) {
      try {
        (void)solve_secondary(z, w);
        return false;  // a factorization of P itself would exist
      } catch (const Inconsistent&) {
      }
    }
    return true;
  });

  criterion(3, "determinant identity on 200 random tuples", [] {
    std::mt19937 rng(389);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::uniform_int_distribution<int> len(2, 5);
    for (int trial = 0; trial < 200; ++trial) {
      int n = len(rng);
      RootPerm z;
      for (int i = 0; i < n; ++i) z.push_back(Scalar::approx({d(rng), d(rng)}));
      Mat m(n, Vec(n));
      for (int col = 1; col <= n; ++col) {
        CPoly q = build_Q(z, col);
        for (int row = 0; row < n; ++row) m[row][col - 1] = q.coeff(row);
      }
      std::complex<double> lhs = det(m).to_complex();
      std::complex<double> rhs(1.0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          rhs *= (z[i].conj() - z[j]).to_complex();
      if (std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)) > 1e-9)
        return false;
    }
    return true;
  });

  criterion(4, "gcd/matching oracle on 500 random tuples", [] {
    std::mt19937 rng(499);
    Scalar pool[4] = {sq(2, 3), sq(2, -3), sq(-1, 2), sq(-1, -2)};
    std::uniform_int_distribution<int> pick(0, 3), len(1, 7);
    for (int trial = 0; trial < 500; ++trial) {
      int n = len(rng);
      RootPerm z;
      for (int i = 0; i < n; ++i) z.push_back(pool[pick(rng)]);
      CPoly g = gcd_of_Q(z);
      CPoly oracle = build_Q(z, 1);
      for (int i = 2; i <= n; ++i) oracle = euclid_gcd(oracle, build_Q(z, i));
      if (g != oracle) return false;
      if (g.degree() != static_cast<int>(max_matching(z).size())) return false;
    }
    return true;
  });

  criterion(5, "flip cascade golden values", [] {
    auto meta = run_cascade(ke("(-9/5i)+(-18/35i)e"), paper_factors());
    if (!meta) return false;
    return meta->ktilde[0] == ke("(i)+(-13/28i)e") &&
           meta->ktilde[1] == ke("(i)+(5/8i)e") &&
           meta->ktilde[2] == ke("(-i)+(-11/56i)e") &&
           meta->l[1] == ke("(-9/5i)+(9/20i)e") &&
           meta->l[2] == ke("(-9/5i)+(-27/40i)e") &&
           meta->l[3] == ke("(-9/5i)+(-207/140i)e");
  });

  criterion(6, "linkage counts (elliptic and J)", [] {
    Linkage el = construct_strong(ellipse_drawing());
    if (el.n_links != 8 || el.joints.size() != 10) return false;
    Linkage j = construct_strong(j_motion(Backend::Approx));
    return j.n_links == 26 && j.joints.size() == 37;
  });

  criterion(7, "drawing correctness (elliptic exact, J approx)", [] {
    Linkage el = construct_strong(ellipse_drawing());
    Trajectory tr = point_trajectory(el, el.meta->pen_link,
                                     Scalar::zero(Backend::Exact));
    for (int k = 0; k < 100; ++k) {
      Scalar t = Scalar::exact(mpq_class(k - 50, 7), 0);
      Scalar p = traj_eval(tr, t);
      Scalar x = (p + p.conj()) / sq(2);
      Scalar y = (p - p.conj()) / sq(0, 2);
      if ((x + sq(1)) * (x + sq(1)) + sq(4) * y * y != sq(1)) return false;
    }

    Linkage j = construct_strong(j_motion(Backend::Approx));
    Trajectory jt = point_trajectory(j, j.meta->pen_link,
                                     Scalar::zero(Backend::Approx));
    CPoly f = parse_cpoly(kJF, Backend::Approx);
    CPoly g = parse_cpoly(kJG, Backend::Approx);
    CPoly h = parse_cpoly(kJH, Backend::Approx);
    for (int k = 1; k <= 100; ++k) {
      double t = static_cast<double>(k);
      Scalar ts = Scalar::approx({t, 0});
      std::complex<double> traced = traj_eval(jt, ts).to_complex();
      double hx = h.eval(ts).to_complex().real();
      double fx = f.eval(ts).to_complex().real() / hx;
      double gx = g.eval(ts).to_complex().real() / hx;
      if (std::abs(traced.real() - fx) > 1e-9) return false;
      if (std::abs(traced.imag() - gx) > 1e-9) return false;
    }
    return true;
  });

  criterion(8, "collision counts and residuals", [] {
    Linkage el = construct_strong_from(paper_factors(),
                                       ke("(-9/5i)+(-18/35i)e"));
    auto golden = detect_collisions(el, {5, 1, 6, 2, 7, 8, 4, 3});
    if (golden.size() != 2) return false;
    for (const auto& e : golden)
      if (!e.at_inf) return false;
    if (!check_event_residuals(el, golden)) return false;

    Linkage j = construct_strong(j_motion(Backend::Approx));
    auto jev = detect_collisions(j, default_ordering(j));
    if (jev.size() != 7) return false;
    return check_event_residuals(j, jev);
  });

  criterion(9, "flip/mobility property suites", [] {
    std::mt19937 rng(1009);
    int done = 0;
    while (done < 1000) {
      KElement k1 = random_k(rng), k2 = random_k(rng);
      if (!fm(k1, k2)) continue;
      FlipPair f = flip(k1, k2);
      if (poly_mul(mp_linear(k1), mp_linear(k2)) !=
          poly_mul(mp_linear(f.k3), mp_linear(f.k4)))
        return false;
      // Antiparallelogram side lengths (equality and, generically,
      // inequality of the two side classes).
      Scalar d12 = (midpt(k1) - midpt(k2)).norm();
      if (d12 != (midpt(f.k3) - midpt(f.k4)).norm()) return false;
      if (midpt(k1) != midpt(f.k3) &&
          d12 == (midpt(k1) - midpt(f.k3)).norm())
        return false;
      ++done;
    }

    Linkage el = construct_strong(ellipse_drawing());
    const auto& meta = *el.meta;
    for (size_t h = 0; h < meta.factors.size(); ++h) {
      MPoly lhs =
          poly_mul(mp_linear(meta.ladder->l[h]), mp_linear(meta.factors[h]));
      MPoly rhs = poly_mul(mp_linear(meta.ladder->ktilde[h]),
                           mp_linear(meta.ladder->l[h + 1]));
      for (int k = 0; k < 20; ++k) {
        Scalar t = Scalar::exact(mpq_class(2 * k - 19, 4), 0);
        KElement a = poly_eval(lhs, t), b = poly_eval(rhs, t);
        if (!(a == b)) return false;
      }
    }

    if (mobility_sample_check(el, 3).dimension != 1) return false;
    int fourbars = 0;
    while (fourbars < 5) {
      KElement k1 = random_k(rng), k2 = random_k(rng);
      if (!fm(k1, k2)) continue;
      if (mobility_sample_check(flip_linkage(k1, k2), 3).dimension != 1)
        return false;
      ++fourbars;
    }
    return true;
  });

  criterion(10, "layer design for ladders n = 1..6", [] {
    for (int n = 1; n <= 6; ++n) {
      std::vector<KElement> ks;
      for (int j = 1; j <= n; ++j) ks.push_back({sq(0, 1), sq(0, j)});
      Linkage ladder = construct_strong_from(ks, choose_l(ks));
      LayerAssignment a = assign_layers(ladder);
      if (a.n_layers != 4 * n + 1) return false;
      if (!validate_layers(ladder, a)) return false;
    }
    return true;
  });

  return failures == 0 ? 0 : 1;
}
