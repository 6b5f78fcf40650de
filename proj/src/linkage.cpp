#include "linkforge/linkage.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace linkforge {

namespace {

Scalar half(Backend b) {
  if (b == Backend::Exact) return Scalar::exact(mpq_class(1, 2), 0);
  return Scalar::approx(0.5);
}

void add_top_joints(Linkage& lk) {
  const auto& ks = lk.meta->factors;
  for (size_t i = 0; i < ks.size(); ++i)
    lk.joints.push_back({static_cast<int>(i) + 1, static_cast<int>(i) + 2,
                         midpt(ks[i])});
}

Linkage make_ladder(std::vector<KElement> ks, LadderMeta lm, CPoly s, CPoly r) {
  const int n = static_cast<int>(ks.size());
  Linkage lk;
  lk.backend = ks.front().backend();
  lk.kind = n == 1 ? LinkKind::FourBar : LinkKind::Ladder;
  lk.n_links = 2 * n + 2;
  lk.meta = SynthMeta{std::move(ks), std::move(s), std::move(r), std::move(lm),
                      n + 1, 1};
  add_top_joints(lk);
  for (int i = 0; i < n; ++i)
    lk.joints.push_back({n + 2 + i, n + 3 + i, midpt(lk.meta->ladder->ktilde[i])});
  for (int j = 0; j <= n; ++j)
    lk.joints.push_back({j + 1, n + 2 + j, midpt(lk.meta->ladder->l[j])});
  return lk;
}

}  // namespace

Linkage construct_weak(const MPoly& p) {
  Stripped st = strip_real_content(p);
  Factorization f = factor_motion_polynomial(st.P);
  const int n = static_cast<int>(f.factors.size());
  Linkage lk;
  lk.backend = p.backend();
  lk.kind = LinkKind::OpenChain;
  lk.n_links = n + 1;
  lk.meta = SynthMeta{f.factors, st.S, f.R, std::nullopt, n + 1, 1};
  add_top_joints(lk);
  return lk;
}

Linkage construct_strong(const MPoly& p) {
  Stripped st = strip_real_content(p);
  Factorization f = factor_motion_polynomial(st.P);
  KElement l1 = choose_l(f.factors);
  auto lm = run_cascade(l1, f.factors);
  if (!lm) throw Error("chosen l fails iterated flip mobility");
  return make_ladder(f.factors, *lm, st.S, f.R);
}

Linkage construct_strong_from(const std::vector<KElement>& ks, const KElement& l1,
                              CPoly s, CPoly r) {
  auto lm = run_cascade(l1, ks);
  if (!lm) throw Error("l fails iterated flip mobility");
  Backend b = ks.front().backend();
  if (s.is_zero()) s = CPoly::one(b);
  if (r.is_zero()) r = CPoly::one(b);
  return make_ladder(ks, *lm, std::move(s), std::move(r));
}

Linkage flip_linkage(const KElement& k1, const KElement& k2) {
  if (!fm(k1, k2)) throw DegenerateFlip();
  return construct_strong_from({k2}, k1);
}

MPoly link_motion(const Linkage& l, int link) {
  if (!l.meta) throw Error("linkage has no motion data");
  const auto& m = *l.meta;
  const int n = static_cast<int>(m.factors.size());
  Backend b = l.backend;
  auto suffix = [&](int from) {  // (t-k_from)...(t-k_n), 1-based
    MPoly p = mp_one(b);
    for (int j = from - 1; j < n; ++j) p = poly_mul(p, mp_linear(m.factors[j]));
    return p;
  };
  if (link >= 1 && link <= n + 1) return suffix(link);
  if (m.ladder && link >= n + 2 && link <= 2 * n + 2) {
    int j = link - (n + 1);  // 1..n+1
    return poly_mul(mp_linear(m.ladder->l[j - 1]), suffix(j));
  }
  throw Error("no such link");
}

Pose pose_at(const Linkage& l, const Scalar& t) {
  Pose p;
  p.link_iso.reserve(l.n_links);
  for (int m = 1; m <= l.n_links; ++m)
    p.link_iso.push_back(poly_eval(link_motion(l, m), t));
  for (const auto& jt : l.joints)
    p.joint_pos.push_back(act_point(p.link_iso[jt.i - 1], jt.center));
  return p;
}

Pose pose_at_inf(const Linkage& l) {
  // All link motions are monic, so every isometry tends to the identity.
  Pose p;
  KElement id{Scalar::one(l.backend), Scalar::zero(l.backend)};
  p.link_iso.assign(l.n_links, id);
  for (const auto& jt : l.joints) p.joint_pos.push_back(jt.center);
  return p;
}

Trajectory point_trajectory(const Linkage& l, int link, const Scalar& center) {
  MPoly m = link_motion(l, link);
  Backend b = l.backend;
  // act(M(t), c) = (c Z^2 + Z W) / (Z conj(Z)).
  CPoly num = m.Z * m.Z * CPoly::constant(center) + m.Z * m.W;
  Scalar h = half(b);
  Scalar mi_half = -(Scalar::imag_unit(b) * h);  // -i/2
  Trajectory tr;
  tr.x_num = (num + num.conj()).scaled(h);
  tr.y_num = (num - num.conj()).scaled(mi_half);
  tr.den = m.Z * m.Z.conj();
  return tr;
}

Trajectory joint_trajectory(const Linkage& l, int joint_index) {
  const Joint& jt = l.joints.at(joint_index);
  return point_trajectory(l, jt.i, jt.center);
}

Scalar traj_eval(const Trajectory& tr, const Scalar& t) {
  Scalar d = tr.den.eval(t);
  return (tr.x_num.eval(t) + Scalar::imag_unit(t.backend()) * tr.y_num.eval(t)) / d;
}

Scalar traj_eval_inf(const Trajectory& tr) {
  int d = tr.den.degree();
  return tr.x_num.coeff(d) + Scalar::imag_unit(tr.den.backend()) * tr.y_num.coeff(d);
}

MobilityReport mobility_sample_check(const Linkage& l, int trials) {
  const int nl = l.n_links;
  const int cols = 3 * nl;  // (phi, ax, ay) per link
  const int base = l.meta ? l.meta->base_link : 1;
  int max_rank = 0;
  for (int s = 0; s < trials; ++s) {
    Scalar t = l.backend == Backend::Approx
                   ? Scalar::approx(0.37 + 0.61 * s)
                   : Scalar::exact(mpq_class(37 + 61 * s, 100), 0);
    Pose p = pose_at(l, t);
    Eigen::MatrixXd a =
        Eigen::MatrixXd::Zero(2 * static_cast<int>(l.joints.size()) + 3, cols);
    for (size_t e = 0; e < l.joints.size(); ++e) {
      const Joint& jt = l.joints[e];
      std::complex<double> rho(jt.center.to_complex());
      for (int side = 0; side < 2; ++side) {
        int link = side == 0 ? jt.i : jt.j;
        double sign = side == 0 ? 1.0 : -1.0;
        std::complex<double> z = p.link_iso[link - 1].z.to_complex();
        std::complex<double> rot = z * z / std::norm(z);
        std::complex<double> dphi = std::complex<double>(0, 1) * rot * rho;
        int c = 3 * (link - 1);
        a(2 * e, c) += sign * dphi.real();
        a(2 * e + 1, c) += sign * dphi.imag();
        a(2 * e, c + 1) += sign;        // d/d ax
        a(2 * e + 1, c + 2) += sign;    // d/d ay
      }
    }
    int g = 3 * (base - 1);
    for (int k = 0; k < 3; ++k) a(2 * l.joints.size() + k, g + k) = 1.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    svd.setThreshold(1e-8);
    max_rank = std::max(max_rank, static_cast<int>(svd.rank()));
  }
  return {cols - max_rank, trials};
}

}  // namespace linkforge
