#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linkforge/collision.hpp"
#include "linkforge/document.hpp"
#include "linkforge/factor.hpp"
#include "linkforge/linkage.hpp"
#include "linkforge/parse.hpp"
#include "linkforge/roots.hpp"
#include "linkforge/svg.hpp"

namespace py = pybind11;
using namespace linkforge;

namespace {

Backend backend_of(const std::string& s) {
  if (s == "exact") return Backend::Exact;
  if (s == "approx") return Backend::Approx;
  throw py::value_error("backend must be 'exact' or 'approx'");
}

}  // namespace

PYBIND11_MODULE(_linkforge, m) {
  m.doc() = "planar linkage synthesis from motion polynomial factorization";

  py::register_exception<ParseError>(m, "ParseError");
  static py::exception<Error> err(m, "LinkforgeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError&) {
      throw;  // handled by the registration above
    } catch (const Error& e) {
      PyErr_SetString(err.ptr(), e.what());
    }
  });

  py::class_<MPoly>(m, "MotionPoly")
      .def_static(
          "parse",
          [](const std::string& text, const std::string& backend) {
            return parse_motion_poly(text, backend_of(backend));
          },
          py::arg("text"), py::arg("backend") = "exact")
      .def_property_readonly("degree", &MPoly::degree)
      .def_property_readonly("bounded", [](const MPoly& p) { return is_bounded(p); })
      .def("__str__", [](const MPoly& p) { return mpoly_str(p); });

  py::class_<KElement>(m, "KElement")
      .def_static(
          "parse",
          [](const std::string& text, const std::string& backend) {
            return parse_k_element(text, backend_of(backend));
          },
          py::arg("text"), py::arg("backend") = "exact")
      .def_property_readonly("z", [](const KElement& k) { return k.z.to_complex(); })
      .def_property_readonly("w", [](const KElement& k) { return k.w.to_complex(); })
      .def("__str__", [](const KElement& k) { return k_element_str(k); });

  m.def("factor", [](const MPoly& p) {
    Factorization f = factor_motion_polynomial(p);
    py::dict d;
    d["R"] = cpoly_str(f.R);
    py::list fs;
    for (const auto& k : f.factors) fs.append(k_element_str(k));
    d["factors"] = fs;
    return d;
  });

  py::class_<Linkage>(m, "Linkage")
      .def_property_readonly("n_links", [](const Linkage& l) { return l.n_links; })
      .def_property_readonly("n_joints",
                             [](const Linkage& l) { return l.joints.size(); })
      .def_property_readonly("kind",
                             [](const Linkage& l) {
                               switch (l.kind) {
                                 case LinkKind::OpenChain: return "open_chain";
                                 case LinkKind::Ladder: return "ladder";
                                 case LinkKind::FourBar: return "four_bar";
                                 default: return "custom";
                               }
                             })
      .def("joint_positions",
           [](const Linkage& l, double t) {
             Scalar ts = l.backend == Backend::Exact
                             ? Scalar::exact(mpq_class(t), 0)
                             : Scalar::approx(t);
             Pose p = pose_at(l, ts);
             std::vector<std::complex<double>> out;
             for (const auto& s : p.joint_pos) out.push_back(s.to_complex());
             return out;
           })
      .def("trace_point",
           [](const Linkage& l, double t) {
             if (!l.meta) throw py::value_error("linkage has no motion data");
             Trajectory tr =
                 point_trajectory(l, l.meta->pen_link, Scalar::zero(l.backend));
             Scalar ts = l.backend == Backend::Exact
                             ? Scalar::exact(mpq_class(t), 0)
                             : Scalar::approx(t);
             return traj_eval(tr, ts).to_complex();
           })
      .def("mobility",
           [](const Linkage& l, int trials) {
             return mobility_sample_check(l, trials).dimension;
           },
           py::arg("trials") = 3)
      .def("to_json", [](const Linkage& l) { return linkage_to_json(l).dump(2); })
      .def_static("from_json", [](const std::string& text) {
        return linkage_from_json(nlohmann::json::parse(text));
      });

  m.def(
      "synthesize",
      [](const MPoly& p, bool strong) {
        return strong ? construct_strong(p) : construct_weak(p);
      },
      py::arg("p"), py::arg("strong") = true);

  m.def("default_ordering", &default_ordering);
  m.def("detect_collisions", [](const Linkage& l, const Ordering& o) {
    py::list out;
    for (const auto& e : detect_collisions(l, o)) {
      py::dict d;
      d["joint"] = e.joint_index;
      d["link"] = e.link;
      d["segment"] = e.segment;
      d["s"] = e.s;
      if (e.at_inf)
        d["t"] = py::none();
      else
        d["t"] = e.t;
      out.append(d);
    }
    return out;
  });
  m.def("search_ordering", [](const Linkage& l, int budget) {
    OrderingSearchResult r = search_ordering(l, budget);
    return py::make_tuple(r.ordering, r.finite_events, r.inf_events);
  });

  m.def("assign_layers", [](const Linkage& l) {
    return layers_to_json(assign_layers(l)).dump(2);
  });

  m.def(
      "render_svg",
      [](const Linkage& l, std::optional<double> t, bool trace) {
        RenderOptions opt;
        opt.t = t;
        opt.trace = trace;
        return render_svg(l, std::nullopt, opt);
      },
      py::arg("l"), py::arg("t") = std::nullopt, py::arg("trace") = true);

  m.def("set_eps", &set_approx_eps);
  m.def("eps", &approx_eps);
}
