#include "loopkit/certificates.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "loopkit/errors.hpp"
#include "loopkit/normal.hpp"

namespace loopkit {

namespace {

std::vector<SubsetMask> direct_witness(const WeakLagrange& w) {
  if (w.holds) return {};
  return {*w.witness};
}

std::vector<SubsetMask> direct_witness(const StrongLagrange& s) {
  if (s.holds) return {};
  return {s.witness->first, s.witness->second};
}

Certificate direct_leaf(const CayleyTable& L, LagrangeKind kind, Certificate::Node node,
                        const EnumerationLimits& limits, int threads) {
  Certificate c;
  c.kind = kind;
  c.node = node;
  c.order = L.order();
  if (kind == LagrangeKind::Weak) {
    WeakLagrange w = weak_lagrange(L, limits, threads);
    c.holds = w.holds;
    c.witness = direct_witness(w);
  } else {
    StrongLagrange s = strong_lagrange(L, limits, threads);
    c.holds = s.holds;
    c.witness = direct_witness(s);
  }
  return c;
}

Certificate decide(const CayleyTable& L, LagrangeKind kind, const EnumerationLimits& limits,
                   int threads) {
  if (L.order() == 1) {
    Certificate c;
    c.kind = kind;
    c.node = Certificate::Node::SimpleLeaf;
    c.order = 1;
    c.holds = true;
    return c;
  }
  if (is_simple(L, threads))
    return direct_leaf(L, kind, Certificate::Node::SimpleLeaf, limits, threads);

  SubsetMask N = *minimal_normal_subloop(L);
  SubloopTable sub = subloop_table(L, N);
  QuotientMap q = quotient(L, N);

  Certificate below = decide(sub.table, kind, limits, threads);
  Certificate above = decide(q.quotient, kind, limits, threads);
  if (below.holds && above.holds) {
    Certificate c;
    c.kind = kind;
    c.node = Certificate::Node::Decompose;
    c.order = L.order();
    c.holds = true;
    c.normal = N;
    c.children.push_back(std::move(below));
    c.children.push_back(std::move(above));
    return c;
  }
  return direct_leaf(L, kind, Certificate::Node::DirectFallback, limits, threads);
}

[[noreturn]] void reject(const std::string& path, const std::string& why) {
  throw InvalidCertificateError(path, why);
}

void check_leaf_conclusion(const CayleyTable& L, const Certificate& c, const std::string& path,
                           const EnumerationLimits& limits, int threads) {
  bool holds;
  std::vector<SubsetMask> witness;
  if (c.kind == LagrangeKind::Weak) {
    WeakLagrange w = weak_lagrange(L, limits, threads);
    holds = w.holds;
    witness = direct_witness(w);
  } else {
    StrongLagrange s = strong_lagrange(L, limits, threads);
    holds = s.holds;
    witness = direct_witness(s);
  }
  if (c.holds != holds)
    reject(path, std::string("leaf concludes ") + (c.holds ? "holds" : "fails") +
                     " but the direct check says otherwise");
  if (c.holds) {
    if (!c.witness.empty()) reject(path, "holding node carries a witness");
    return;
  }
  if (c.witness != witness) reject(path, "leaf witness does not match the direct check");
}

void verify_node(const CayleyTable& L, const Certificate& c, LagrangeKind kind,
                 const std::string& path, const EnumerationLimits& limits, int threads) {
  if (c.kind != kind) reject(path, "node kind differs from the root's");
  if (c.order != L.order())
    reject(path, "node order " + std::to_string(c.order) + " does not match loop order " +
                     std::to_string(L.order()));

  switch (c.node) {
    case Certificate::Node::SimpleLeaf: {
      if (!c.children.empty()) reject(path, "leaf has children");
      if (L.order() > 1 && !is_simple(L, threads))
        reject(path, "simple leaf for a loop with a proper normal subloop");
      if (L.order() == 1) {
        if (!c.holds) reject(path, "trivial loop marked as failing");
        return;
      }
      check_leaf_conclusion(L, c, path, limits, threads);
      return;
    }
    case Certificate::Node::DirectFallback: {
      if (!c.children.empty()) reject(path, "leaf has children");
      check_leaf_conclusion(L, c, path, limits, threads);
      return;
    }
    case Certificate::Node::Decompose: {
      auto size = c.normal.count();
      if (size < 2) reject(path, "decomposition subloop is trivial");
      if (size >= std::size_t(L.order())) reject(path, "decomposition subloop is not proper");
      if (!is_subloop(L, c.normal)) reject(path, "decomposition set is not a subloop");
      if (!is_normal(L, c.normal, threads)) reject(path, "decomposition subloop is not normal");
      if (c.children.size() != 2)
        reject(path, "decomposition needs exactly two children, found " +
                         std::to_string(c.children.size()));
      if (!c.holds) reject(path, "decomposition node concludes fails");
      if (!c.witness.empty()) reject(path, "holding node carries a witness");
      if (!c.children[0].holds || !c.children[1].holds)
        reject(path, "decomposition concludes holds from a failing child");

      SubloopTable sub = subloop_table(L, c.normal);
      QuotientMap q = [&] {
        try {
          return quotient(L, c.normal);
        } catch (const Error& e) {
          reject(path, std::string("quotient rejected: ") + e.what());
        }
      }();
      verify_node(sub.table, c.children[0], kind, path + ".sub", limits, threads);
      verify_node(q.quotient, c.children[1], kind, path + ".quot", limits, threads);
      return;
    }
  }
  reject(path, "unknown node type");
}

void serialize_node(const Certificate& c, int depth, std::string& out) {
  out.append(std::size_t(depth) * 2, ' ');
  out += c.kind == LagrangeKind::Weak ? "weak " : "strong ";
  switch (c.node) {
    case Certificate::Node::SimpleLeaf: out += "SimpleLeaf"; break;
    case Certificate::Node::Decompose: out += "Decompose"; break;
    case Certificate::Node::DirectFallback: out += "DirectFallback"; break;
  }
  out += " order=" + std::to_string(c.order);
  if (c.node == Certificate::Node::Decompose) {
    out += " N={";
    bool first = true;
    for (Elem x : c.normal.elements()) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(x);
    }
    out += '}';
  }
  out += c.holds ? " conclusion=holds" : " conclusion=fails";
  if (!c.holds && !c.witness.empty()) {
    out += " witness=";
    const char* tags[2] = {c.witness.size() == 2 ? "K={" : "H={", "H={"};
    for (std::size_t i = 0; i < c.witness.size(); ++i) {
      if (i) out += ' ';
      out += tags[i != 0];
      bool first = true;
      for (Elem x : c.witness[i].elements()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(x);
      }
      out += '}';
    }
  }
  out += '\n';
  for (const Certificate& child : c.children) serialize_node(child, depth + 1, out);
}

struct Line {
  int depth = 0;
  std::string body;
};

[[noreturn]] void bad(std::size_t lineno, const std::string& why) {
  throw SyntaxError("line " + std::to_string(lineno + 1) + ": " + why);
}

SubsetMask parse_mask(const std::string& s, std::size_t lineno) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') bad(lineno, "expected {e1,e2,...}");
  SubsetMask m;
  std::string inner = s.substr(1, s.size() - 2);
  if (inner.empty()) return m;
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &pos);
    } catch (...) {
      bad(lineno, "bad element '" + tok + "'");
    }
    if (pos != tok.size() || v < 0 || v >= kMaxOrder) bad(lineno, "bad element '" + tok + "'");
    m.set(v);
  }
  return m;
}

Certificate parse_node(const std::vector<Line>& lines, std::size_t& i, int depth) {
  if (i >= lines.size()) throw SyntaxError("unexpected end of certificate");
  const Line& ln = lines[i];
  if (ln.depth != depth) bad(i, "expected indent " + std::to_string(depth * 2));

  std::stringstream ss(ln.body);
  std::string kind_tok, node_tok;
  ss >> kind_tok >> node_tok;

  Certificate c;
  if (kind_tok == "weak")
    c.kind = LagrangeKind::Weak;
  else if (kind_tok == "strong")
    c.kind = LagrangeKind::Strong;
  else
    bad(i, "expected 'weak' or 'strong', got '" + kind_tok + "'");

  if (node_tok == "SimpleLeaf")
    c.node = Certificate::Node::SimpleLeaf;
  else if (node_tok == "Decompose")
    c.node = Certificate::Node::Decompose;
  else if (node_tok == "DirectFallback")
    c.node = Certificate::Node::DirectFallback;
  else
    bad(i, "unknown node type '" + node_tok + "'");

  bool saw_order = false, saw_conclusion = false;
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) bad(i, "expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "order") {
      try {
        c.order = std::stoi(val);
      } catch (...) {
        bad(i, "bad order '" + val + "'");
      }
      saw_order = true;
    } else if (key == "N") {
      c.normal = parse_mask(val, i);
    } else if (key == "conclusion") {
      if (val == "holds")
        c.holds = true;
      else if (val == "fails")
        c.holds = false;
      else
        bad(i, "conclusion must be holds or fails");
      saw_conclusion = true;
    } else if (key == "witness" || key == "H" || key == "K") {
      // "witness=K={...} H={...}" splits on spaces; accept each piece
      if (key == "witness") {
        auto eq2 = val.find('=');
        if (eq2 == std::string::npos) bad(i, "bad witness '" + val + "'");
        val = val.substr(eq2 + 1);
      }
      c.witness.push_back(parse_mask(val, i));
    } else {
      bad(i, "unknown key '" + key + "'");
    }
  }
  if (!saw_order) bad(i, "missing order");
  if (!saw_conclusion) bad(i, "missing conclusion");
  ++i;

  if (c.node == Certificate::Node::Decompose) {
    c.children.push_back(parse_node(lines, i, depth + 1));
    c.children.push_back(parse_node(lines, i, depth + 1));
  } else if (i < lines.size() && lines[i].depth > depth) {
    bad(i, "leaf node has children");
  }
  return c;
}

}  // namespace

Certificate decide_weak(const CayleyTable& L, const EnumerationLimits& limits, int threads) {
  return decide(L, LagrangeKind::Weak, limits, threads);
}

Certificate decide_strong(const CayleyTable& L, const EnumerationLimits& limits, int threads) {
  return decide(L, LagrangeKind::Strong, limits, threads);
}

bool verify_certificate(const CayleyTable& L, const Certificate& c, const EnumerationLimits& limits,
                        int threads) {
  verify_node(L, c, c.kind, "root", limits, threads);
  return true;
}

std::string serialize_certificate(const Certificate& c) {
  std::string out;
  serialize_node(c, 0, out);
  return out;
}

Certificate parse_certificate(const std::string& text) {
  std::vector<Line> lines;
  std::stringstream ss(text);
  std::string raw;
  while (std::getline(ss, raw)) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t spaces = 0;
    while (spaces < raw.size() && raw[spaces] == ' ') ++spaces;
    if (spaces == raw.size()) continue;  // blank line
    if (spaces % 2 != 0)
      throw SyntaxError("line " + std::to_string(lines.size() + 1) + ": odd indentation");
    lines.push_back({static_cast<int>(spaces / 2), raw.substr(spaces)});
  }
  if (lines.empty()) throw SyntaxError("empty certificate");
  std::size_t i = 0;
  Certificate c = parse_node(lines, i, 0);
  if (i != lines.size()) throw SyntaxError("trailing lines after the root certificate");
  return c;
}

}  // namespace loopkit
