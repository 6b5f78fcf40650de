#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkforge/collision.hpp"
#include "linkforge/document.hpp"
#include "linkforge/factor.hpp"
#include "linkforge/linkage.hpp"
#include "linkforge/parse.hpp"
#include "linkforge/roots.hpp"
#include "linkforge/svg.hpp"

namespace lf = linkforge;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUnbounded = 3;
constexpr int kExitBackend = 4;
constexpr int kExitMobility = 5;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw lf::ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Input is a file path when it names a readable file, otherwise an
// inline expression. JSON content (leading '{') is a curve document.
lf::MPoly load_motion(const std::string& input, std::optional<lf::Backend> forced,
                      lf::Backend* out_backend) {
  std::string text = input;
  {
    std::ifstream probe(input);
    if (probe) text = slurp(input);
  }
  size_t first = text.find_first_not_of(" \t\r\n");
  lf::Backend b;
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw lf::ParseError("malformed JSON input");
    b = forced.value_or(j.value("backend", "exact") == "approx"
                            ? lf::Backend::Approx
                            : lf::Backend::Exact);
    *out_backend = b;
    return lf::curve_to_motion(j, b);
  }
  b = forced.value_or(lf::detect_backend(text));
  *out_backend = b;
  return lf::parse_motion_poly(text, b);
}

lf::MPoly apply_drawing(const lf::MPoly& p) {
  if (!p.Z.is_real())
    throw lf::ParseError("--drawing needs a real primal part (curve motion)");
  lf::CPoly c = lf::drawing_multiplier(p.Z);
  return lf::mp_scale(c, p);
}

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream os(out);
  os << j.dump(2) << "\n";
}

int dispatch(int argc, char** argv) {
  CLI::App app{"planar linkage synthesis from motion polynomial factorization"};
  app.require_subcommand(1);

  std::string input, output, l_text, ordering_text, backend_name;
  bool drawing = false, weak = false, strong = false;
  bool trace = false, at_inf = false, with_layers = false;
  int search_budget = -1;
  std::vector<double> t_samples;

  auto add_backend = [&](CLI::App* c) {
    c->add_option("--backend", backend_name, "force backend: exact|approx")
        ->check(CLI::IsMember({"exact", "approx"}));
  };
  auto forced_backend = [&]() -> std::optional<lf::Backend> {
    if (backend_name == "exact") return lf::Backend::Exact;
    if (backend_name == "approx") return lf::Backend::Approx;
    return std::nullopt;
  };

  CLI::App* factor = app.add_subcommand(
      "factor", "factor a motion polynomial into revolute factors");
  factor->add_option("input", input, "file, inline expression, or curve JSON")
      ->required();
  factor->add_flag("--drawing", drawing,
                   "multiply by the drawing polynomial C (C conj(C) = h) first");
  factor->add_option("-o,--output", output, "output JSON path (default stdout)");
  add_backend(factor);

  CLI::App* synth = app.add_subcommand(
      "synthesize", "build a linkage drawing the motion's orbit curve");
  synth->add_option("input", input, "file, inline expression, or curve JSON")
      ->required();
  synth->add_flag("--weak", weak, "open kinematic chain only");
  synth->add_flag("--strong", strong, "mobility-one ladder linkage (default)");
  synth->add_flag("--drawing", drawing, "apply the drawing polynomial first");
  synth->add_option("--l", l_text, "override the auxiliary revolute l_1");
  synth->add_option("-o,--output", output, "output JSON path (default stdout)");
  add_backend(synth);

  CLI::App* collide =
      app.add_subcommand("collide", "self-collision report for a linkage document");
  collide->add_option("input", input, "linkage document (JSON)")->required();
  collide->add_option("--ordering", ordering_text,
                      "comma-separated link layer order, bottom first");
  collide->add_option("--search", search_budget,
                      "search for a low-collision ordering with this budget");
  collide->add_option("-o,--output", output, "output JSON path (default stdout)");

  CLI::App* render =
      app.add_subcommand("render", "SVG frames of linkage poses and traced curve");
  render->add_option("input", input, "linkage document (JSON)")->required();
  render->add_option("-t", t_samples, "pose sample times (one frame each)");
  render->add_flag("--inf", at_inf, "add the limit pose frame");
  render->add_flag("--trace", trace, "overlay the traced curve");
  render->add_flag("--layers", with_layers,
                   "shade links by assigned layer (ladders only)");
  render->add_option("-o,--output", output, "output path prefix (default 'frame')");

  CLI11_PARSE(app, argc, argv);

  if (factor->parsed()) {
    lf::Backend b;
    lf::MPoly p = load_motion(input, forced_backend(), &b);
    if (drawing) p = apply_drawing(p);
    if (!lf::is_bounded(p)) return kExitUnbounded;
    lf::Factorization f = lf::factor_motion_polynomial(p);
    emit(lf::factorization_to_json(f, b), output);
    return 0;
  }

  if (synth->parsed()) {
    if (weak && strong) throw CLI::ValidationError("--weak conflicts with --strong");
    lf::Backend b;
    lf::MPoly p = load_motion(input, forced_backend(), &b);
    if (drawing) p = apply_drawing(p);
    if (!lf::is_bounded(p)) return kExitUnbounded;
    lf::Linkage lk;
    if (weak) {
      lk = lf::construct_weak(p);
    } else if (!l_text.empty()) {
      lf::KElement l1 = lf::parse_k_element(l_text, b);
      lf::Stripped st = lf::strip_real_content(p);
      lf::Factorization f = lf::factor_motion_polynomial(st.P);
      if (!lf::ifm(l1, f.factors)) {
        std::cerr << "error: given l violates iterated flip mobility\n";
        return kExitMobility;
      }
      lk = lf::construct_strong_from(f.factors, l1, st.S, f.R);
    } else {
      lk = lf::construct_strong(p);
    }
    emit(lf::linkage_to_json(lk), output);
    return 0;
  }

  if (collide->parsed()) {
    lf::Linkage lk = lf::linkage_from_json(json::parse(slurp(input)));
    lf::Ordering ord;
    if (search_budget > 0) {
      ord = lf::search_ordering(lk, search_budget).ordering;
    } else if (!ordering_text.empty()) {
      std::istringstream is(ordering_text);
      std::string part;
      while (std::getline(is, part, ',')) ord.push_back(std::stoi(part));
      std::vector<bool> seen(lk.n_links + 1, false);
      if (static_cast<int>(ord.size()) != lk.n_links)
        throw lf::ParseError("ordering must list every link once");
      for (int v : ord) {
        if (v < 1 || v > lk.n_links || seen[v])
          throw lf::ParseError("ordering must be a permutation of 1..n_links");
        seen[v] = true;
      }
    } else {
      ord = lf::default_ordering(lk);
    }
    emit(lf::collisions_to_json(lf::detect_collisions(lk, ord), ord), output);
    return 0;
  }

  if (render->parsed()) {
    lf::Linkage lk = lf::linkage_from_json(json::parse(slurp(input)));
    std::optional<lf::LayerAssignment> layers;
    if (with_layers) layers = lf::assign_layers(lk);
    std::string prefix = output.empty() ? "frame" : output;
    auto write_frame = [&](const lf::RenderOptions& opt, const std::string& tag) {
      std::string path = prefix + "-" + tag + ".svg";
      std::ofstream os(path);
      os << lf::render_svg(lk, layers, opt);
      std::cout << path << "\n";
    };
    for (size_t k = 0; k < t_samples.size(); ++k) {
      lf::RenderOptions opt;
      opt.t = t_samples[k];
      opt.trace = trace;
      write_frame(opt, std::to_string(k));
    }
    if (at_inf) {
      lf::RenderOptions opt;
      opt.at_inf = true;
      opt.trace = trace;
      write_frame(opt, "inf");
    }
    if (t_samples.empty() && !at_inf) {
      lf::RenderOptions opt;
      opt.trace = true;
      write_frame(opt, "trace");
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const lf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const lf::NotBounded&) {
    std::cerr << "error: motion polynomial is not bounded\n";
    return kExitUnbounded;
  } catch (const lf::NotExactlySplit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const lf::NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const lf::MixedBackend& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const lf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
