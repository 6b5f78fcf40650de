#include "linkforge/document.hpp"

#include "linkforge/parse.hpp"

namespace linkforge {

using nlohmann::json;

namespace {

const char* backend_name(Backend b) {
  return b == Backend::Exact ? "exact" : "approx";
}

Backend backend_from(const json& j) {
  std::string s = j.value("backend", "exact");
  if (s == "exact") return Backend::Exact;
  if (s == "approx") return Backend::Approx;
  throw ParseError("unknown backend '" + s + "'");
}

const char* kind_name(LinkKind k) {
  switch (k) {
    case LinkKind::OpenChain: return "open_chain";
    case LinkKind::Ladder: return "ladder";
    case LinkKind::FourBar: return "four_bar";
    case LinkKind::Custom: return "custom";
  }
  return "custom";
}

LinkKind kind_from(const std::string& s) {
  if (s == "open_chain") return LinkKind::OpenChain;
  if (s == "ladder") return LinkKind::Ladder;
  if (s == "four_bar") return LinkKind::FourBar;
  if (s == "custom") return LinkKind::Custom;
  throw ParseError("unknown linkage kind '" + s + "'");
}

json k_list(const std::vector<KElement>& ks) {
  json a = json::array();
  for (const auto& k : ks) a.push_back(k_element_str(k));
  return a;
}

std::vector<KElement> k_list_from(const json& a, Backend b) {
  std::vector<KElement> ks;
  for (const auto& s : a) ks.push_back(parse_k_element(s.get<std::string>(), b));
  return ks;
}

}  // namespace

json linkage_to_json(const Linkage& l) {
  json j;
  j["schema"] = kLinkageSchema;
  j["backend"] = backend_name(l.backend);
  j["kind"] = kind_name(l.kind);
  j["n_links"] = l.n_links;
  json joints = json::array();
  for (const auto& jt : l.joints)
    joints.push_back({{"i", jt.i}, {"j", jt.j}, {"center", jt.center.str()}});
  j["joints"] = joints;
  if (l.meta) {
    const SynthMeta& m = *l.meta;
    json meta;
    meta["factors"] = k_list(m.factors);
    meta["S"] = cpoly_str(m.S);
    meta["R"] = cpoly_str(m.R);
    meta["base_link"] = m.base_link;
    meta["pen_link"] = m.pen_link;
    if (m.ladder) {
      meta["l"] = k_list(m.ladder->l);
      meta["ktilde"] = k_list(m.ladder->ktilde);
    }
    j["meta"] = meta;
  }
  return j;
}

Linkage linkage_from_json(const json& j) {
  try {
    if (j.value("schema", "") != kLinkageSchema)
      throw ParseError("not a linkage document");
    Backend b = backend_from(j);
    Linkage l;
    l.backend = b;
    l.kind = kind_from(j.at("kind").get<std::string>());
    l.n_links = j.at("n_links").get<int>();
    for (const auto& jt : j.at("joints"))
      l.joints.push_back({jt.at("i").get<int>(), jt.at("j").get<int>(),
                          parse_scalar(jt.at("center").get<std::string>(), b)});
    if (j.contains("meta")) {
      const json& m = j["meta"];
      SynthMeta sm;
      sm.factors = k_list_from(m.at("factors"), b);
      sm.S = parse_cpoly(m.value("S", "1"), b);
      sm.R = parse_cpoly(m.value("R", "1"), b);
      sm.base_link = m.value("base_link", static_cast<int>(sm.factors.size()) + 1);
      sm.pen_link = m.value("pen_link", 1);
      if (m.contains("l")) {
        LadderMeta lm;
        lm.l = k_list_from(m["l"], b);
        lm.ktilde = k_list_from(m.at("ktilde"), b);
        sm.ladder = lm;
      }
      l.meta = sm;
    }
    return l;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed linkage document: ") + e.what());
  }
}

json factorization_to_json(const Factorization& f, Backend b) {
  json j;
  j["schema"] = kFactorSchema;
  j["backend"] = backend_name(b);
  j["R"] = cpoly_str(f.R);
  j["factors"] = k_list(f.factors);
  json roots = json::array();
  for (const auto& z : f.perm) roots.push_back(z.str());
  j["primal_roots"] = roots;
  return j;
}

json collisions_to_json(const std::vector<CollisionEvent>& evs,
                        const Ordering& ordering) {
  json j;
  j["schema"] = kCollisionSchema;
  j["ordering"] = ordering;
  json a = json::array();
  int finite = 0;
  for (const auto& e : evs) {
    json ev;
    ev["joint"] = e.joint_index;
    ev["link"] = e.link;
    ev["segment"] = e.segment;
    ev["s"] = e.s;
    if (e.at_inf) {
      ev["t"] = "inf";
    } else {
      ev["t"] = e.t;
      if (e.t_exact) ev["t_exact"] = e.t_value.get_str();
      ++finite;
    }
    a.push_back(ev);
  }
  j["events"] = a;
  j["finite_count"] = finite;
  j["infinity_count"] = static_cast<int>(evs.size()) - finite;
  return j;
}

json layers_to_json(const LayerAssignment& a) {
  json j;
  j["n_layers"] = a.n_layers;
  json links = json::array();
  for (const auto& ll : a.links) {
    const char* s = ll.shape == LinkShape::F ? "F"
                    : ll.shape == LinkShape::U ? "U" : "Z";
    links.push_back({{"shape", s}, {"layers", {ll.a, ll.b}}});
  }
  j["links"] = links;
  json joints = json::array();
  for (auto t : a.joints) joints.push_back(t == JointType::T ? "T" : "Z");
  j["joints"] = joints;
  return j;
}

MPoly curve_to_motion(const json& j, Backend b) {
  try {
    if (j.value("schema", "") != kCurveSchema)
      throw ParseError("not a curve document");
    CPoly f = parse_cpoly(j.at("f").get<std::string>(), b);
    CPoly g = parse_cpoly(j.at("g").get<std::string>(), b);
    CPoly h = parse_cpoly(j.at("h").get<std::string>(), b);
    if (!f.is_real() || !g.is_real() || !h.is_real())
      throw ParseError("curve polynomials must be real");
    if (!h.is_monic() || h.degree() <= std::max(f.degree(), g.degree()))
      throw ParseError("h must be monic with deg h > max(deg f, deg g)");
    if (has_real_root(h)) throw NotBounded();
    CPoly w = f + g.scaled(Scalar::imag_unit(b));
    return MPoly(h, w);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed curve document: ") + e.what());
  }
}

}  // namespace linkforge
