#include "loopkit/report.hpp"

#include <json.hpp>

namespace loopkit {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::pair<const char*, bool PropertyReport::*> kFlags[] = {
    {"associative", &PropertyReport::associative},
    {"commutative", &PropertyReport::commutative},
    {"leftBol", &PropertyReport::left_bol},
    {"rightBol", &PropertyReport::right_bol},
    {"moufang", &PropertyReport::moufang},
    {"aip", &PropertyReport::aip},
    {"bruck", &PropertyReport::bruck},
    {"bLoop", &PropertyReport::b_loop},
    {"aLoop", &PropertyReport::a_loop},
    {"powerAssociative", &PropertyReport::power_associative},
    {"simple", &PropertyReport::simple},
    {"solvable", &PropertyReport::solvable},
    {"nilpotent", &PropertyReport::nilpotent},
};

const std::string* find_witness(const PropertyReport& r, const std::string& key) {
  for (const auto& [k, v] : r.witnesses)
    if (k == key) return &v;
  return nullptr;
}

ordered_json mask_json(const SubsetMask& m) {
  ordered_json a = ordered_json::array();
  for (Elem x : m.elements()) a.push_back(int(x));
  return a;
}

ordered_json certificate_json(const Certificate& c) {
  ordered_json j;
  j["kind"] = c.kind == LagrangeKind::Weak ? "weak" : "strong";
  switch (c.node) {
    case Certificate::Node::SimpleLeaf: j["node"] = "SimpleLeaf"; break;
    case Certificate::Node::Decompose: j["node"] = "Decompose"; break;
    case Certificate::Node::DirectFallback: j["node"] = "DirectFallback"; break;
  }
  j["order"] = c.order;
  if (c.node == Certificate::Node::Decompose) j["N"] = mask_json(c.normal);
  j["conclusion"] = c.holds ? "holds" : "fails";
  if (!c.holds && !c.witness.empty()) {
    ordered_json w;
    if (c.witness.size() == 2) {
      w["K"] = mask_json(c.witness[0]);
      w["H"] = mask_json(c.witness[1]);
    } else {
      w["H"] = mask_json(c.witness[0]);
    }
    j["witness"] = std::move(w);
  }
  if (c.node == Certificate::Node::Decompose) {
    ordered_json kids = ordered_json::array();
    for (const Certificate& child : c.children) kids.push_back(certificate_json(child));
    j["children"] = std::move(kids);
  }
  return j;
}

void append_flag_line(std::string& out, const PropertyReport& r, const char* key, bool value) {
  out += key;
  out += value ? ": yes" : ": no";
  if (!value) {
    if (const std::string* w = find_witness(r, key)) {
      out += "  (";
      out += *w;
      out += ')';
    }
  }
  out += '\n';
}

std::string elems_text(const SubsetMask& m) {
  std::string s = "{";
  bool first = true;
  for (Elem x : m.elements()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(x);
  }
  s += '}';
  return s;
}

}  // namespace

std::string report_properties(const PropertyReport& r, ReportFormat f) {
  if (f == ReportFormat::Structured) {
    ordered_json j;
    j["order"] = r.order;
    ordered_json flags;
    for (const auto& [key, member] : kFlags) flags[key] = r.*member;
    flags["weakLagrange"] = r.weak_lagrange ? ordered_json(*r.weak_lagrange) : ordered_json();
    flags["strongLagrange"] = r.strong_lagrange ? ordered_json(*r.strong_lagrange) : ordered_json();
    j["flags"] = std::move(flags);
    ordered_json params;
    params["nilpotencyClass"] =
        r.nilpotency_class ? ordered_json(*r.nilpotency_class) : ordered_json();
    params["derivedLength"] = r.derived_length ? ordered_json(*r.derived_length) : ordered_json();
    params["exponent"] = r.exponent ? ordered_json(*r.exponent) : ordered_json();
    params["mK"] = r.m_k ? ordered_json(*r.m_k) : ordered_json();
    j["parameters"] = std::move(params);
    ordered_json wit;
    for (const auto& [key, value] : r.witnesses) wit[key] = value;
    j["witnesses"] = std::move(wit);
    return j.dump(2) + "\n";
  }

  std::string out;
  out += "order: " + std::to_string(r.order) + "\n";
  for (const auto& [key, member] : kFlags) append_flag_line(out, r, key, r.*member);
  auto opt_flag = [&](const char* key, const std::optional<bool>& v) {
    if (v)
      append_flag_line(out, r, key, *v);
    else
      out += std::string(key) + ": skipped\n";
  };
  opt_flag("weakLagrange", r.weak_lagrange);
  opt_flag("strongLagrange", r.strong_lagrange);
  auto opt_param = [&](const char* key, const auto& v) {
    out += key;
    if (v)
      out += ": " + std::to_string(*v) + "\n";
    else
      out += ": absent\n";
  };
  opt_param("nilpotencyClass", r.nilpotency_class);
  opt_param("derivedLength", r.derived_length);
  opt_param("exponent", r.exponent);
  opt_param("mK", r.m_k);
  return out;
}

std::string report_lattice(const SubloopLattice& lat, ReportFormat f, bool with_edges) {
  if (f == ReportFormat::Structured) {
    ordered_json j;
    j["count"] = lat.subloops.size();
    ordered_json subs = ordered_json::array();
    for (const SubsetMask& m : lat.subloops) {
      ordered_json s;
      s["order"] = m.count();
      s["elements"] = mask_json(m);
      subs.push_back(std::move(s));
    }
    j["subloops"] = std::move(subs);
    if (with_edges) {
      ordered_json edges = ordered_json::array();
      for (const auto& [a, b] : lat.containment) edges.push_back(ordered_json::array({a, b}));
      j["containment"] = std::move(edges);
    }
    return j.dump(2) + "\n";
  }

  std::string out = "subloops: " + std::to_string(lat.subloops.size()) + "\n";
  for (std::size_t i = 0; i < lat.subloops.size(); ++i) {
    const SubsetMask& m = lat.subloops[i];
    out += std::to_string(i) + ": order " + std::to_string(m.count()) + " " + elems_text(m) + "\n";
  }
  if (with_edges) {
    out += "containment:";
    for (const auto& [a, b] : lat.containment)
      out += " " + std::to_string(a) + "<" + std::to_string(b);
    out += "\n";
  }
  return out;
}

std::string report_certificate(const Certificate& c, ReportFormat f) {
  if (f == ReportFormat::Structured) return certificate_json(c).dump(2) + "\n";
  return serialize_certificate(c);
}

}  // namespace loopkit
