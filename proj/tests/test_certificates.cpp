#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "corpus.hpp"
#include "loopkit/certificates.hpp"
#include "loopkit/constructions.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/normal.hpp"
#include "loopkit/subloops.hpp"

using namespace loopkit;

namespace {

// every certificate in this file should round-trip through text
void check_roundtrip(const Certificate& c) {
  std::string text = serialize_certificate(c);
  Certificate back = parse_certificate(text);
  CHECK(serialize_certificate(back) == text);
}

}  // namespace

TEST_CASE("decision procedure agrees with the direct check everywhere") {
  for (const auto& [name, L] : corpus::small()) {
    if (L.order() > 24) continue;
    CAPTURE(name);
    Certificate w = decide_weak(L);
    Certificate s = decide_strong(L);
    CHECK(w.holds == weak_lagrange(L).holds);
    CHECK(s.holds == strong_lagrange(L).holds);
    CHECK(verify_certificate(L, w));
    CHECK(verify_certificate(L, s));
    check_roundtrip(w);
    check_roundtrip(s);
  }
}

TEST_CASE("Z_6 decomposes through its minimal normal subgroup") {
  CayleyTable z6 = cyclic_group(6);
  Certificate c = decide_weak(z6);
  CHECK(c.node == Certificate::Node::Decompose);
  CHECK(c.holds);
  REQUIRE(c.children.size() == 2);
  CHECK(c.normal.count() == 2);
  CHECK(c.normal.test(0));
  CHECK(c.normal.test(3));
  CHECK(c.children[0].node == Certificate::Node::SimpleLeaf);
  CHECK(c.children[0].order == 2);
  CHECK(c.children[1].node == Certificate::Node::SimpleLeaf);
  CHECK(c.children[1].order == 3);
}

TEST_CASE("simple loops produce single leaves") {
  Certificate c = decide_weak(cyclic_group(7));
  CHECK(c.node == Certificate::Node::SimpleLeaf);
  CHECK(c.order == 7);
  CHECK(c.holds);
  CHECK(c.children.empty());

  Certificate t = decide_strong(cyclic_group(1));
  CHECK(t.node == Certificate::Node::SimpleLeaf);
  CHECK(t.holds);
}

TEST_CASE("a failing order-5 loop yields a leaf with a witness") {
  for (const CayleyTable& L : enumerate_loops(5)) {
    Certificate c = decide_weak(L);
    if (c.holds) continue;
    CHECK(c.node == Certificate::Node::SimpleLeaf);
    REQUIRE(c.witness.size() == 1);
    CHECK(c.witness[0].count() == 2);
    CHECK(5 % c.witness[0].count() != 0);
    CHECK(verify_certificate(L, c));
  }
}

TEST_CASE("the order-10 loop needs the direct fallback for strength") {
  const CayleyTable& L = corpus::order10();
  Certificate w = decide_weak(L);
  Certificate s = decide_strong(L);
  CHECK(w.holds);
  CHECK(!s.holds);
  CHECK(s.node == Certificate::Node::DirectFallback);
  REQUIRE(s.witness.size() == 2);
  const SubsetMask& K = s.witness[0];
  const SubsetMask& H = s.witness[1];
  CHECK(K.subset_of(H));
  CHECK(H.count() % K.count() != 0);
  CHECK(verify_certificate(L, w));
  CHECK(verify_certificate(L, s));
}

TEST_CASE("verification rejects a certificate for the wrong loop") {
  Certificate c = decide_weak(cyclic_group(6));
  CHECK_THROWS_AS(verify_certificate(chein_double(cyclic_group(3)), c),
                  InvalidCertificateError);
}

TEST_CASE("tampered certificates are rejected with the offending path") {
  CayleyTable z6 = cyclic_group(6);
  CayleyTable s3 = chein_double(cyclic_group(3));
  const CayleyTable& o10 = corpus::order10();
  Certificate base = decide_weak(z6);           // Decompose, two leaves
  Certificate strong10 = decide_strong(o10);    // failing DirectFallback
  Certificate weak10 = decide_weak(o10);        // holding DirectFallback
  Certificate leaf7 = decide_weak(cyclic_group(7));
  Certificate s3cert = decide_weak(s3);

  std::vector<std::pair<std::string, std::function<void()>>> mutations;
  auto expect_reject = [&](const std::string& label, const CayleyTable& L,
                           Certificate c) {
    CAPTURE(label);
    CHECK_THROWS_AS(verify_certificate(L, c), InvalidCertificateError);
  };

  // 1: flipped conclusion at the root
  {
    Certificate c = base;
    c.holds = false;
    expect_reject("flip root conclusion", z6, c);
  }
  // 2: flipped conclusion in a child
  {
    Certificate c = base;
    c.children[0].holds = false;
    expect_reject("flip child conclusion", z6, c);
  }
  // 3: wrong root order
  {
    Certificate c = base;
    c.order = 7;
    expect_reject("wrong root order", z6, c);
  }
  // 4: wrong child order
  {
    Certificate c = base;
    c.children[1].order = 4;
    expect_reject("wrong child order", z6, c);
  }
  // 5: kind mismatch between root and children
  {
    Certificate c = base;
    c.children[0].kind = LagrangeKind::Strong;
    expect_reject("child kind mismatch", z6, c);
  }
  // 6: non-normal subset substituted for N
  {
    Certificate c = decide_weak(s3);
    REQUIRE(c.node == Certificate::Node::Decompose);
    SubsetMask bad;
    bad.set(0);
    bad.set(3);  // order-2 subgroup of S_3, not normal
    c.normal = bad;
    expect_reject("non-normal N", s3, c);
  }
  // 7: N not even a subloop
  {
    Certificate c = base;
    SubsetMask bad;
    bad.set(0);
    bad.set(1);
    bad.set(3);
    c.normal = bad;
    expect_reject("N not a subloop", z6, c);
  }
  // 8: trivial N
  {
    Certificate c = base;
    SubsetMask bad;
    bad.set(0);
    c.normal = bad;
    expect_reject("trivial N", z6, c);
  }
  // 9: full N
  {
    Certificate c = base;
    SubsetMask bad;
    for (int i = 0; i < 6; ++i) bad.set(i);
    c.normal = bad;
    expect_reject("improper N", z6, c);
  }
  // 10: dropped child
  {
    Certificate c = base;
    c.children.pop_back();
    expect_reject("dropped child", z6, c);
  }
  // 11: duplicated child
  {
    Certificate c = base;
    c.children.push_back(c.children[0]);
    expect_reject("extra child", z6, c);
  }
  // 12: leaf claims children
  {
    Certificate c = leaf7;
    c.children.push_back(leaf7);
    expect_reject("leaf with children", cyclic_group(7), c);
  }
  // 13: SimpleLeaf on a non-simple loop
  {
    Certificate c = base;
    Certificate fake;
    fake.kind = LagrangeKind::Weak;
    fake.node = Certificate::Node::SimpleLeaf;
    fake.order = 6;
    fake.holds = true;
    expect_reject("simple leaf on composite loop", z6, fake);
  }
  // 14: decomposition node that claims failure
  {
    Certificate c = base;
    c.holds = false;
    SubsetMask w;
    w.set(0);
    w.set(1);
    c.witness.push_back(w);
    expect_reject("failing decompose", z6, c);
  }
  // 15: missing witness on a failing leaf
  {
    Certificate c = strong10;
    c.witness.clear();
    expect_reject("missing witness", o10, c);
  }
  // 16: wrong witness subset
  {
    Certificate c = strong10;
    REQUIRE(c.witness.size() == 2);
    c.witness[1].set(9);  // perturb H
    expect_reject("perturbed witness", o10, c);
  }
  // 17: spurious witness on a holding certificate
  {
    Certificate c = weak10;
    SubsetMask w;
    w.set(0);
    w.set(1);
    c.witness.push_back(w);
    expect_reject("witness on holding node", o10, c);
  }
  // 18: wrong kind at root
  {
    Certificate c = weak10;
    c.kind = LagrangeKind::Strong;  // strong fails for this loop
    expect_reject("kind flip changes truth", o10, c);
  }
  // 19: node type swapped to fallback with stale children
  {
    Certificate c = base;
    c.node = Certificate::Node::DirectFallback;
    expect_reject("fallback with children", z6, c);
  }
  // 20: child subtree replaced by the wrong loop's certificate
  {
    Certificate c = s3cert;
    REQUIRE(c.node == Certificate::Node::Decompose);
    c.children[0] = leaf7;
    expect_reject("foreign child subtree", s3, c);
  }

  // the error exposes where verification failed: a defect local to the
  // quotient child is reported under its path
  try {
    Certificate c = base;
    c.children[1].order = 4;
    verify_certificate(z6, c);
    FAIL("expected rejection");
  } catch (const InvalidCertificateError& e) {
    CHECK(std::string(e.path()).find("quot") != std::string::npos);
  }
}

TEST_CASE("serialization matches the documented shape") {
  Certificate c = decide_weak(cyclic_group(6));
  std::string text = serialize_certificate(c);
  CHECK(text.find("weak Decompose order=6 N={0,3} conclusion=holds") == 0);
  CHECK(text.find("\n  weak SimpleLeaf order=2 conclusion=holds") != std::string::npos);
  CHECK(text.find("\n  weak SimpleLeaf order=3 conclusion=holds") != std::string::npos);
}

TEST_CASE("failing leaves serialize their witnesses") {
  for (const CayleyTable& L : enumerate_loops(5)) {
    Certificate c = decide_weak(L);
    if (c.holds) continue;
    std::string text = serialize_certificate(c);
    CHECK(text.find("conclusion=fails witness=H={") != std::string::npos);
    check_roundtrip(c);
  }
  Certificate s = decide_strong(corpus::order10());
  std::string text = serialize_certificate(s);
  CHECK(text.find("witness=K={") != std::string::npos);
  CHECK(text.find("} H={") != std::string::npos);
}

TEST_CASE("parser rejects malformed text") {
  CHECK_THROWS_AS(parse_certificate(""), SyntaxError);
  CHECK_THROWS_AS(parse_certificate("weak Banana order=2 conclusion=holds"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_certificate("weak SimpleLeaf order=x conclusion=holds"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_certificate(" weak SimpleLeaf order=2 conclusion=holds"),
                  SyntaxError);  // odd indent
  CHECK_THROWS_AS(
      parse_certificate("weak SimpleLeaf order=2 conclusion=maybe"),
      SyntaxError);
  // child with no parent at depth 0
  CHECK_THROWS_AS(parse_certificate("  weak SimpleLeaf order=2 conclusion=holds"),
                  SyntaxError);
}

TEST_CASE("parse accepts windows line endings and trailing blank lines") {
  Certificate c = decide_weak(cyclic_group(6));
  std::string text = serialize_certificate(c);
  std::string crlf;
  for (char ch : text) {
    if (ch == '\n') crlf += '\r';
    crlf += ch;
  }
  crlf += "\r\n\r\n";
  Certificate back = parse_certificate(crlf);
  CHECK(serialize_certificate(back) == text);
}

TEST_CASE("deep decomposition on a 24-element group round-trips") {
  CayleyTable g = direct_product(cyclic_group(2), cyclic_group(12));
  Certificate c = decide_strong(g);
  CHECK(c.holds);
  CHECK(verify_certificate(g, c));
  check_roundtrip(c);
  // the tree bottoms out in simple leaves only
  std::function<void(const Certificate&)> walk = [&](const Certificate& n) {
    if (n.children.empty())
      CHECK(n.node != Certificate::Node::Decompose);
    for (const Certificate& ch : n.children) walk(ch);
  };
  walk(c);
}
