#include "linkforge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace linkforge {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

Scalar time_scalar(Backend b, double t) {
  return b == Backend::Exact ? Scalar::exact(mpq_class(t), 0) : Scalar::approx(t);
}

std::vector<std::vector<Scalar>> sorted_centers(const Linkage& l) {
  std::vector<std::vector<Scalar>> by_link(l.n_links + 1);
  for (const auto& jt : l.joints) {
    by_link[jt.i].push_back(jt.center);
    by_link[jt.j].push_back(jt.center);
  }
  for (auto& cs : by_link) {
    std::sort(cs.begin(), cs.end(), Scalar::lex_less);
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  }
  return by_link;
}

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool any = false;
  void add(std::complex<double> p) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) return;
    if (!any) {
      x0 = x1 = p.real();
      y0 = y1 = p.imag();
      any = true;
      return;
    }
    x0 = std::min(x0, p.real());
    x1 = std::max(x1, p.real());
    y0 = std::min(y0, p.imag());
    y1 = std::max(y1, p.imag());
  }
};

std::complex<double> traj_num(const Trajectory& tr, double t) {
  auto ev = [&](const CPoly& p) {
    std::complex<double> acc(0.0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + p.coeff(i).to_complex();
    return acc.real();
  };
  double d = ev(tr.den);
  return {ev(tr.x_num) / d, ev(tr.y_num) / d};
}

}  // namespace

std::string render_svg(const Linkage& l,
                       const std::optional<LayerAssignment>& layers,
                       const RenderOptions& opt) {
  const int ns = 512;
  Box box;
  std::vector<Trajectory> jts;
  for (size_t e = 0; e < l.joints.size(); ++e)
    jts.push_back(joint_trajectory(l, static_cast<int>(e)));
  for (const auto& tr : jts) {
    for (int k = 0; k < ns; ++k) {
      double th = -M_PI_2 + M_PI * (k + 0.5) / ns;
      box.add(traj_num(tr, std::tan(th)));
    }
    box.add(traj_eval_inf(tr).to_complex());
  }
  if (!box.any) box.add({0.0, 0.0});
  double w = std::max(box.x1 - box.x0, 1e-9);
  double h = std::max(box.y1 - box.y0, 1e-9);
  double px = 0.1 * w, py = 0.1 * h;
  double vx = box.x0 - px, vy = box.y0 - py;
  double vw = w + 2 * px, vh = h + 2 * py;
  double dim = std::max(vw, vh);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(vx)
      << " " << num(-vy - vh) << " " << num(vw) << " " << num(vh) << "\">\n"
      << "<g transform=\"scale(1,-1)\">\n";

  if (opt.trace && l.meta) {
    Trajectory pen =
        point_trajectory(l, l.meta->pen_link, Scalar::zero(l.backend));
    svg << "<polyline fill=\"none\" stroke=\"#c03030\" stroke-width=\""
        << num(0.004 * dim) << "\" points=\"";
    for (int k = 0; k <= opt.trace_samples; ++k) {
      double th = -M_PI_2 + M_PI * (k + 0.5) / (opt.trace_samples + 1);
      auto p = traj_num(pen, std::tan(th));
      svg << num(p.real()) << "," << num(p.imag()) << " ";
    }
    svg << "\"/>\n";
  }

  if (opt.t || opt.at_inf) {
    Pose pose = opt.at_inf ? pose_at_inf(l)
                           : pose_at(l, time_scalar(l.backend, *opt.t));
    auto centers = sorted_centers(l);
    for (int k = 1; k <= l.n_links; ++k) {
      std::string color = "#555555";
      if (layers && k - 1 < static_cast<int>(layers->links.size())) {
        // Lower layers render darker, as in the staging figures.
        double f = layers->n_layers > 1
                       ? static_cast<double>(layers->links[k - 1].a) /
                             (layers->n_layers - 1)
                       : 0.0;
        int g = static_cast<int>(40 + 160 * f);
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", g, g, g);
        color = buf;
      }
      for (size_t c = 0; c + 1 < centers[k].size(); ++c) {
        auto a = act_point(pose.link_iso[k - 1], centers[k][c]).to_complex();
        auto b = act_point(pose.link_iso[k - 1], centers[k][c + 1]).to_complex();
        svg << "<line x1=\"" << num(a.real()) << "\" y1=\"" << num(a.imag())
            << "\" x2=\"" << num(b.real()) << "\" y2=\"" << num(b.imag())
            << "\" stroke=\"" << color << "\" stroke-width=\""
            << num(0.012 * dim) << "\" stroke-linecap=\"round\"/>\n";
      }
    }
    for (size_t e = 0; e < l.joints.size(); ++e) {
      auto p = pose.joint_pos[e].to_complex();
      svg << "<circle cx=\"" << num(p.real()) << "\" cy=\"" << num(p.imag())
          << "\" r=\"" << num(0.009 * dim)
          << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\""
          << num(0.003 * dim) << "\"/>\n";
    }
  }

  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace linkforge
