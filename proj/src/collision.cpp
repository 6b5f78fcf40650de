#include "linkforge/collision.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <random>

#include "linkforge/roots.hpp"

namespace linkforge {

namespace {

struct SegmentGeom {
  Trajectory a, b;  // endpoints; a's center precedes b's lexicographically
};

std::vector<SegmentGeom> link_segments(const Linkage& l, int link) {
  std::vector<Scalar> centers;
  for (const auto& jt : l.joints)
    if (jt.i == link || jt.j == link) centers.push_back(jt.center);
  std::sort(centers.begin(), centers.end(), Scalar::lex_less);
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  std::vector<SegmentGeom> segs;
  for (size_t i = 0; i + 1 < centers.size(); ++i)
    segs.push_back({point_trajectory(l, link, centers[i]),
                    point_trajectory(l, link, centers[i + 1])});
  return segs;
}

// (X1 d3 - X3 d1)(Y2 d3 - Y3 d2) - (Y1 d3 - Y3 d1)(X2 d3 - X3 d2): the
// collinearity condition of eq. x1 = s*x2 + (1-s)*x3 with cleared
// denominators.
CPoly collinearity_poly(const Trajectory& t1, const Trajectory& t2,
                        const Trajectory& t3) {
  CPoly a = t1.x_num * t3.den - t3.x_num * t1.den;
  CPoly b = t2.y_num * t3.den - t3.y_num * t2.den;
  CPoly c = t1.y_num * t3.den - t3.y_num * t1.den;
  CPoly d = t2.x_num * t3.den - t3.x_num * t2.den;
  CPoly res = a * b - c * d;
  // Real by construction; scrub roundoff from the imaginary parts so
  // the real-root solver accepts it.
  Scalar h = res.backend() == Backend::Exact
                 ? Scalar::exact(mpq_class(1, 2), 0)
                 : Scalar::approx(0.5);
  return (res + res.conj()).scaled(h);
}

// Segment parameter: p1 = s*p2 + (1-s)*p3. Empty when p1 is off the
// segment; a collapsed segment reports s = 0 if p1 sits on it.
std::optional<Scalar> segment_param(const Scalar& p1, const Scalar& p2,
                                    const Scalar& p3) {
  Backend bk = p1.backend();
  Scalar v = p2 - p3;
  if (v.is_zero()) {
    if (p1 == p3) return Scalar::zero(bk);
    return std::nullopt;
  }
  Scalar dot = (p1 - p3) * v.conj();
  if (!dot.is_real()) return std::nullopt;  // not collinear
  Scalar s = dot / v.norm();                // real
  if ((p3 + s * v) != p1) return std::nullopt;
  double sd = s.to_complex().real();
  if (bk == Backend::Exact) {
    if (s.re_q() < 0 || s.re_q() > 1) return std::nullopt;
  } else if (sd < -approx_eps() || sd > 1 + approx_eps()) {
    return std::nullopt;
  }
  return s;
}

std::complex<double> eval_num(const CPoly& p, double t) {
  std::complex<double> acc(0.0);
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * t + p.coeff(i).to_complex();
  return acc;
}

std::complex<double> traj_eval_num(const Trajectory& tr, double t) {
  std::complex<double> d = eval_num(tr.den, t);
  return std::complex<double>(eval_num(tr.x_num, t).real(),
                              eval_num(tr.y_num, t).real()) / d.real();
}

}  // namespace

Ordering default_ordering(const Linkage& l) {
  if ((l.kind == LinkKind::Ladder || l.kind == LinkKind::FourBar) && l.meta) {
    int n = l.n_squares();
    Ordering o;
    for (int j = 1; j <= n + 1; ++j) {
      o.push_back(j);
      o.push_back(n + 1 + j);
    }
    return o;
  }
  Ordering o(l.n_links);
  std::iota(o.begin(), o.end(), 1);
  return o;
}

std::vector<CollisionEvent> detect_collisions(const Linkage& l,
                                              const Ordering& ordering) {
  std::vector<int> layer(l.n_links + 1, 0);
  for (size_t p = 0; p < ordering.size(); ++p)
    layer[ordering[p]] = static_cast<int>(p) + 1;

  std::vector<std::vector<SegmentGeom>> segs(l.n_links + 1);
  for (int k = 1; k <= l.n_links; ++k) segs[k] = link_segments(l, k);

  std::vector<CollisionEvent> events;
  for (size_t ji = 0; ji < l.joints.size(); ++ji) {
    const Joint& jt = l.joints[ji];
    int lo = std::min(layer[jt.i], layer[jt.j]);
    int hi = std::max(layer[jt.i], layer[jt.j]);
    Trajectory pin = joint_trajectory(l, static_cast<int>(ji));
    for (int k = 1; k <= l.n_links; ++k) {
      if (layer[k] <= lo || layer[k] >= hi) continue;
      for (size_t si = 0; si < segs[k].size(); ++si) {
        const SegmentGeom& sg = segs[k][si];
        // t = infinity: every motion is monic, so positions tend to the
        // joint centers (equivalently, t -> 1/t reversal tested at 0).
        {
          Scalar p1 = traj_eval_inf(pin);
          Scalar p2 = traj_eval_inf(sg.b);
          Scalar p3 = traj_eval_inf(sg.a);
          if (auto s = segment_param(p1, p2, p3)) {
            events.push_back({static_cast<int>(ji), k, static_cast<int>(si),
                              true, 0.0, false, mpq_class(0),
                              s->to_complex().real()});
          }
        }
        CPoly c = collinearity_poly(pin, sg.b, sg.a);
        if (c.is_zero()) continue;  // handled by the t=infinity test
        for (const RealRoot& rt : real_poly_roots(c)) {
          std::optional<Scalar> s;
          double t_out = rt.t;
          if (rt.exact && l.backend == Backend::Exact) {
            Scalar t = Scalar::exact(rt.value, 0);
            s = segment_param(traj_eval(pin, t), traj_eval(sg.b, t),
                              traj_eval(sg.a, t));
          } else {
            // Polish the root against the geometric residual itself: the
            // cleared-denominator polynomial can be too ill-conditioned
            // for the companion-matrix root to satisfy the segment
            // equation to full precision.
            auto cross_at = [&](double t) {
              std::complex<double> q1 = traj_eval_num(pin, t);
              std::complex<double> q2 = traj_eval_num(sg.b, t);
              std::complex<double> q3 = traj_eval_num(sg.a, t);
              return (std::conj(q2 - q3) * (q1 - q3)).imag();
            };
            double ta = rt.t, tb = rt.t * (1.0 + 1e-9) + 1e-12;
            double fa = cross_at(ta), fb = cross_at(tb);
            for (int it = 0; it < 30 && fa != fb; ++it) {
              double tc = ta - fa * (tb - ta) / (fb - fa);
              if (!std::isfinite(tc) || std::abs(tc - rt.t) >
                                            1e-5 * (1.0 + std::abs(rt.t)))
                break;
              tb = ta; fb = fa;
              ta = tc; fa = cross_at(tc);
              if (fa == 0.0) break;
            }
            if (std::abs(cross_at(ta)) <= std::abs(cross_at(rt.t)))
              t_out = ta;
            std::complex<double> p1 = traj_eval_num(pin, t_out);
            std::complex<double> p2 = traj_eval_num(sg.b, t_out);
            std::complex<double> p3 = traj_eval_num(sg.a, t_out);
            std::complex<double> v = p2 - p3;
            double vn = std::norm(v);
            if (vn < 1e-300) {
              if (std::abs(p1 - p3) < 1e-7) s = Scalar::approx(0.0);
            } else {
              double sv = (std::conj(v) * (p1 - p3)).real() / vn;
              double cross = (std::conj(v) * (p1 - p3)).imag() /
                             (std::sqrt(vn) * (1.0 + std::abs(p1 - p3)));
              if (std::abs(cross) < 1e-6 && sv >= -1e-9 && sv <= 1 + 1e-9)
                s = Scalar::approx(sv);
            }
          }
          if (s) {
            events.push_back({static_cast<int>(ji), k, static_cast<int>(si),
                              false, t_out, rt.exact, rt.value,
                              s->to_complex().real()});
          }
        }
      }
    }
  }
  std::sort(events.begin(), events.end(),
            [](const CollisionEvent& a, const CollisionEvent& b) {
              auto key = [](const CollisionEvent& e) {
                return std::make_tuple(e.joint_index, e.link, e.segment,
                                       e.at_inf ? 1 : 0, e.t);
              };
              return key(a) < key(b);
            });
  // A root of even multiplicity can surface twice through clustering on
  // the approx backend; merge events that agree on everything.
  events.erase(std::unique(events.begin(), events.end(),
                           [](const CollisionEvent& a, const CollisionEvent& b) {
                             return a.joint_index == b.joint_index &&
                                    a.link == b.link && a.segment == b.segment &&
                                    a.at_inf == b.at_inf &&
                                    (a.at_inf || std::abs(a.t - b.t) < 1e-7);
                           }),
               events.end());
  return events;
}

LayerAssignment assign_layers(const Linkage& l) {
  if (!(l.kind == LinkKind::Ladder || l.kind == LinkKind::FourBar) || !l.meta)
    throw NotLadder();
  int n = l.n_squares();
  LayerAssignment a;
  a.n_layers = 4 * n + 1;
  a.links.resize(l.n_links);
  for (int m = 1; m <= n; ++m)
    a.links[m - 1] = {LinkShape::U, 3 * (m - 1), 4 * n - (m - 1)};
  a.links[n] = {LinkShape::F, 3 * n, 3 * n};
  a.links[n + 1] = {LinkShape::F, 1, 1};
  for (int m = 1; m <= n - 1; ++m)
    a.links[n + 1 + m] = {LinkShape::Z, 3 * m - 1, 3 * m + 1};
  a.links[2 * n + 1] = {LinkShape::F, 3 * n - 1, 3 * n - 1};
  // Joints are stored top chain, bottom chain, then verticals; only the
  // middle verticals pass through a Z-link's step.
  a.joints.assign(l.joints.size(), JointType::T);
  for (int j = 1; j <= n - 1; ++j) a.joints[2 * n + j] = JointType::Z;
  return a;
}

bool validate_layers(const Linkage& l, const LayerAssignment& a) {
  if (static_cast<int>(a.links.size()) != l.n_links) return false;
  if (a.joints.size() != l.joints.size()) return false;
  for (const LinkLayer& ll : a.links) {
    if (ll.a < 0 || ll.b >= a.n_layers) return false;
    switch (ll.shape) {
      case LinkShape::F:
        if (ll.a != ll.b) return false;
        break;
      case LinkShape::U:
        if (!(ll.a < ll.b)) return false;
        break;
      case LinkShape::Z:
        if (ll.b - ll.a != 2) return false;
        break;
    }
  }
  for (size_t i = 0; i < a.links.size(); ++i) {
    if (a.links[i].shape != LinkShape::U) continue;
    for (size_t j = i + 1; j < a.links.size(); ++j) {
      if (a.links[j].shape != LinkShape::U) continue;
      int a1 = a.links[i].a, b1 = a.links[i].b;
      int a2 = a.links[j].a, b2 = a.links[j].b;
      if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
        return false;
    }
  }
  for (size_t e = 0; e < l.joints.size(); ++e) {
    const LinkLayer& li = a.links[l.joints[e].i - 1];
    const LinkLayer& lj = a.links[l.joints[e].j - 1];
    if (a.joints[e] == JointType::T) {
      bool ok = false;
      for (int x : {li.a, li.b})
        for (int y : {lj.a, lj.b})
          if (std::abs(x - y) == 1) ok = true;
      if (!ok) return false;
    } else {
      bool ok = (li.shape == LinkShape::Z &&
                 (lj.a == li.a + 1 || lj.b == li.a + 1)) ||
                (lj.shape == LinkShape::Z &&
                 (li.a == lj.a + 1 || li.b == lj.a + 1));
      if (!ok) return false;
    }
  }
  return true;
}

OrderingSearchResult search_ordering(const Linkage& l, int budget) {
  auto score = [&](const Ordering& o) {
    int fin = 0, inf = 0;
    for (const auto& e : detect_collisions(l, o)) (e.at_inf ? inf : fin)++;
    return std::make_pair(fin, inf);
  };
  OrderingSearchResult best;
  best.ordering = default_ordering(l);
  auto best_sc = score(best.ordering);
  --budget;
  std::mt19937 rng(1962);
  Ordering cur = best.ordering;
  auto cur_sc = best_sc;
  while (budget > 0) {
    bool improved = false;
    for (size_t i = 0; i < cur.size() && budget > 0 && !improved; ++i) {
      for (size_t j = i + 1; j < cur.size() && budget > 0; ++j) {
        std::swap(cur[i], cur[j]);
        auto sc = score(cur);
        --budget;
        if (sc < cur_sc) {
          cur_sc = sc;
          improved = true;
          break;
        }
        std::swap(cur[i], cur[j]);
      }
    }
    if (cur_sc < best_sc) {
      best_sc = cur_sc;
      best.ordering = cur;
    }
    if (!improved && budget > 0) {  // restart
      std::shuffle(cur.begin(), cur.end(), rng);
      cur_sc = score(cur);
      --budget;
      if (cur_sc < best_sc) {
        best_sc = cur_sc;
        best.ordering = cur;
      }
    }
  }
  best.finite_events = best_sc.first;
  best.inf_events = best_sc.second;
  return best;
}

}  // namespace linkforge
