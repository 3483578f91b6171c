#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "loopkit/constructions.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/normal.hpp"
#include "loopkit/properties.hpp"
#include "loopkit/subloops.hpp"

using namespace loopkit;

TEST_CASE("groups are associative, Bol both ways, and Moufang") {
  for (const auto& [name, L] : corpus::groups()) {
    CAPTURE(name);
    CHECK(is_associative(L).holds);
    CHECK(is_left_bol(L).holds);
    CHECK(is_right_bol(L).holds);
    CHECK(is_moufang(L));
    CHECK(is_power_associative(L));
  }
}

TEST_CASE("S_3 is associative but not commutative") {
  CayleyTable s3 = chein_double(cyclic_group(3));
  CHECK(is_associative(s3).holds);
  PairLaw c = is_commutative(s3);
  CHECK(!c.holds);
  REQUIRE(c.witness.has_value());
  auto [x, y] = *c.witness;
  CHECK(s3.mul(x, y) != s3.mul(y, x));
}

TEST_CASE("failure witnesses are violations and lexicographically least") {
  for (const CayleyTable& L : enumerate_loops(5)) {
    TripleLaw a = is_associative(L);
    if (a.holds) continue;
    REQUIRE(a.witness.has_value());
    auto [x, y, z] = *a.witness;
    CHECK(L.mul(L.mul(x, y), z) != L.mul(x, L.mul(y, z)));
    // triples iterate in lexicographic order, so scanning up to the witness
    // must find no violation
    auto earlier_violation = [&] {
      for (Elem i = 0; i < 5; ++i)
        for (Elem j = 0; j < 5; ++j)
          for (Elem k = 0; k < 5; ++k) {
            if (std::array<Elem, 3>{i, j, k} == *a.witness) return false;
            if (L.mul(L.mul(i, j), k) != L.mul(i, L.mul(j, k))) return true;
          }
      return false;
    };
    CHECK(!earlier_violation());
  }
}

TEST_CASE("witnesses are identical across thread counts") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    CayleyTable L = random_loop(9, seed);
    CHECK(is_associative(L, 1).witness == is_associative(L, 4).witness);
    CHECK(is_left_bol(L, 1).witness == is_left_bol(L, 4).witness);
    CHECK(is_right_bol(L, 1).witness == is_right_bol(L, 4).witness);
    CHECK(is_commutative(L, 1).witness == is_commutative(L, 4).witness);
  }
}

TEST_CASE("some order-5 loop fails both Bol laws with a checkable witness") {
  bool found = false;
  for (const CayleyTable& L : enumerate_loops(5)) {
    TripleLaw lb = is_left_bol(L);
    TripleLaw rb = is_right_bol(L);
    if (lb.holds || rb.holds) continue;
    found = true;
    auto [x, y, z] = *lb.witness;
    // (x(yx))z != x(y(xz))
    CHECK(L.mul(L.mul(x, L.mul(y, x)), z) != L.mul(x, L.mul(y, L.mul(x, z))));
    auto [a, b, c] = *rb.witness;
    // ((ab)c)b != a((bc)b)
    CHECK(L.mul(L.mul(L.mul(a, b), c), b) != L.mul(a, L.mul(L.mul(b, c), b)));
  }
  CHECK(found);
}

TEST_CASE("moufang equals the conjunction of the Bol laws on the corpus") {
  for (const auto& [name, L] : corpus::small()) {
    CAPTURE(name);
    CHECK(is_moufang(L) == (is_left_bol(L).holds && is_right_bol(L).holds));
  }
}

TEST_CASE("Chein doubles of nonabelian groups are nonassociative Moufang loops") {
  for (const auto& [name, L] : corpus::moufang_doubles()) {
    CAPTURE(name);
    CHECK(is_moufang(L));
    CHECK(!is_associative(L).holds);
    CHECK(is_power_associative(L));
  }
}

TEST_CASE("Chein doubles of abelian groups stay associative") {
  // the double of an abelian group is the generalized dihedral group
  CHECK(is_associative(chein_double(cyclic_group(6))).holds);
  CHECK(is_associative(chein_double(direct_product(cyclic_group(2), cyclic_group(2)))).holds);
  // doubling something nonabelian breaks associativity
  CHECK(!is_associative(chein_double(chein_double(cyclic_group(3)))).holds);
}

TEST_CASE("chein_double rejects nonassociative input") {
  bool nonassoc_found = false;
  for (const CayleyTable& L : enumerate_loops(5)) {
    if (is_associative(L).holds) continue;
    nonassoc_found = true;
    CHECK_THROWS_AS(chein_double(L), NotAGroupError);
    break;
  }
  CHECK(nonassoc_found);
}

TEST_CASE("abelian groups have AIP and are Bruck; odd order makes a B-loop") {
  CayleyTable z7 = cyclic_group(7);
  CHECK(has_aip(z7).holds);
  CHECK(is_bruck(z7));
  CHECK(is_b_loop(z7));
  CayleyTable z6 = cyclic_group(6);
  CHECK(has_aip(z6).holds);
  CHECK(is_bruck(z6));
  CHECK(!is_b_loop(z6));  // even order
}

TEST_CASE("nonabelian groups fail AIP") {
  CayleyTable s3 = chein_double(cyclic_group(3));
  AipResult r = has_aip(s3);
  CHECK(!r.holds);
  CHECK(!is_bruck(s3));
}

TEST_CASE("aip reports an element whose two-sided inverse is missing") {
  bool found = false;
  for (const CayleyTable& L : enumerate_loops(5)) {
    AipResult r = has_aip(L);
    if (!r.holds && r.missing_inverse) {
      found = true;
      CHECK(!L.two_sided_inverse(*r.missing_inverse).has_value());
    }
  }
  CHECK(found);
}

TEST_CASE("groups are A-loops; a census loop fails with a generator witness") {
  for (const auto& [name, L] : corpus::groups()) {
    if (L.order() > 12) continue;
    CAPTURE(name);
    CHECK(is_a_loop(L).holds);
  }
  bool failing = false;
  for (const CayleyTable& L : enumerate_loops(5)) {
    ALoopResult r = is_a_loop(L);
    if (r.holds) continue;
    failing = true;
    REQUIRE(r.generator.has_value());
    REQUIRE(r.witness.has_value());
    // the named inner map is not an endomorphism on the witness pair
    auto [x, y] = *r.witness;
    Elem lhs = apply_inner(L, *r.generator, L.mul(x, y));
    Elem rhs = L.mul(apply_inner(L, *r.generator, x), apply_inner(L, *r.generator, y));
    CHECK(lhs != rhs);
  }
  CHECK(failing);
}

TEST_CASE("element orders and exponent on groups") {
  CayleyTable L = cyclic_group(12);
  CHECK(element_order(L, 0) == 1);
  CHECK(element_order(L, 1) == 12);
  CHECK(element_order(L, 2) == 6);
  CHECK(element_order(L, 8) == 3);
  CHECK(exponent(L) == 12);
  CayleyTable v4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(exponent(v4) == 2);
  CayleyTable z6z4 = direct_product(cyclic_group(6), cyclic_group(4));
  CHECK(exponent(z6z4) == 12);
}

TEST_CASE("exponent refuses loops that are not power-associative") {
  bool found = false;
  for (const CayleyTable& L : enumerate_loops(5)) {
    if (is_power_associative(L)) continue;
    found = true;
    CHECK_THROWS_AS(exponent(L), NotPowerAssociativeError);
  }
  CHECK(found);
}

TEST_CASE("derived subloop of S_3 is A_3 and the series reaches bottom") {
  CayleyTable s3 = chein_double(cyclic_group(3));
  SubsetMask d = derived_subloop(s3);
  CHECK(d.count() == 3);  // A_3 = {0, 1, 2} in this numbering
  auto series = derived_series(s3);
  CHECK(series.back().count() == 1);
  Solvability s = is_solvable(s3);
  CHECK(s.solvable);
  CHECK(s.derived_length == 2);
}

TEST_CASE("derived subloop is the least normal subloop with abelian group quotient") {
  for (const auto& [name, L] : corpus::small()) {
    if (L.order() > 12) continue;
    CAPTURE(name);
    SubsetMask d = derived_subloop(L);
    REQUIRE(is_normal(L, d));
    CayleyTable q = quotient(L, d).quotient;
    CHECK(is_associative(q).holds);
    CHECK(is_commutative(q).holds);
    // nothing smaller works
    for (const SubsetMask& N : all_normal_subloops(L)) {
      if (N == d || !N.subset_of(d)) continue;
      CayleyTable qn = quotient(L, N).quotient;
      CHECK(!(is_associative(qn).holds && is_commutative(qn).holds));
    }
  }
}

TEST_CASE("abelian groups are nilpotent of class 1, D_4 of class 2") {
  Nilpotency z = is_nilpotent(cyclic_group(9));
  CHECK(z.nilpotent);
  CHECK(z.nilpotency_class == 1);
  Nilpotency triv = is_nilpotent(cyclic_group(1));
  CHECK(triv.nilpotent);
  CHECK(triv.nilpotency_class == 0);
  Nilpotency d4 = is_nilpotent(chein_double(cyclic_group(4)));
  CHECK(d4.nilpotent);
  CHECK(d4.nilpotency_class == 2);
}

TEST_CASE("S_3 is solvable but not nilpotent") {
  CayleyTable s3 = chein_double(cyclic_group(3));
  CHECK(is_solvable(s3).solvable);
  CHECK(!is_nilpotent(s3).nilpotent);
}

TEST_CASE("nilpotent implies solvable implies strong Lagrange on the corpus") {
  for (const auto& [name, L] : corpus::small()) {
    CAPTURE(name);
    Nilpotency nil = is_nilpotent(L);
    Solvability sol = is_solvable(L);
    if (nil.nilpotent) CHECK(sol.solvable);
    if (sol.solvable) CHECK(strong_lagrange(L).holds);
  }
}

TEST_CASE("upper central series of D_4 climbs through the center") {
  CayleyTable d4 = chein_double(cyclic_group(4));
  auto series = upper_central_series(d4);
  REQUIRE(series.size() >= 3);
  CHECK(series[0].count() == 1);
  CHECK(series[1].count() == 2);  // Z(D_4)
  CHECK(series.back().count() == 8);
}

TEST_CASE("every group is an M_2 loop") {
  for (const auto& [name, L] : corpus::groups()) {
    if (L.order() > 12) continue;
    CAPTURE(name);
    auto k = m_k_class(L);
    REQUIRE(k.has_value());
    CHECK(*k == 2);
  }
}

TEST_CASE("m_k on nonassociative Moufang doubles is concrete") {
  // M(S_3, 2): the nucleus is trivial, so L/Nuc is the loop itself with
  // exponent 6 (elements of order 1, 2, 3)
  CayleyTable m12 = chein_double(chein_double(cyclic_group(3)));
  CHECK(nucleus(m12).count() == 1);
  auto k = m_k_class(m12);
  REQUIRE(k.has_value());
  CHECK(*k == 7);
  // M(D_4, 2): nucleus is the order-2 center of D_4; the order-8 quotient
  // has exponent 2
  CayleyTable m16 = chein_double(chein_double(cyclic_group(4)));
  CHECK(nucleus(m16).count() == 2);
  auto k16 = m_k_class(m16);
  REQUIRE(k16.has_value());
  CHECK(*k16 == 3);
}

TEST_CASE("m_k is absent off the Moufang class") {
  for (const CayleyTable& L : enumerate_loops(5)) {
    if (is_moufang(L)) continue;
    CHECK(!m_k_class(L).has_value());
  }
}

TEST_CASE("central Bol and nuclear class-2 predicates on known inputs") {
  CayleyTable z6 = cyclic_group(6);
  CHECK(is_central_bol(z6));
  CHECK(is_nuclearly_nilpotent_class2(z6));
  CayleyTable s3 = chein_double(cyclic_group(3));
  CHECK(is_nuclearly_nilpotent_class2(s3));  // Nuc = L, quotient trivial
  CHECK(!is_central_bol(s3));                // L' = A_3 not inside the trivial center
  const CayleyTable& p2 = corpus::paige2();
  CHECK(!is_central_bol(p2));
  CHECK(!is_nuclearly_nilpotent_class2(p2));
}

TEST_CASE("full_report flags are mutually consistent") {
  for (const auto& [name, L] : corpus::small()) {
    if (L.order() > 16) continue;
    CAPTURE(name);
    PropertyReport r = full_report(L);
    CHECK(r.moufang == (r.left_bol && r.right_bol));
    CHECK(r.bruck == ((r.left_bol || r.right_bol) && r.aip));
    CHECK(r.b_loop == (r.bruck && L.order() % 2 == 1));
    if (r.associative) {
      CHECK(r.left_bol);
      CHECK(r.right_bol);
      CHECK(r.power_associative);
      CHECK(r.a_loop);
    }
    if (r.nilpotent) CHECK(r.solvable);
    REQUIRE(r.weak_lagrange.has_value());
    REQUIRE(r.strong_lagrange.has_value());
    if (*r.strong_lagrange) CHECK(*r.weak_lagrange);
    CHECK(r.exponent.has_value() == r.power_associative);
    CHECK(r.m_k.has_value() == r.moufang);
    CHECK(r.nilpotency_class.has_value() == r.nilpotent);
    CHECK(r.derived_length.has_value() == r.solvable);
    // every false flag carries a witness entry
    auto has_witness = [&](const char* key) {
      return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                         [&](const auto& kv) { return kv.first == key; });
    };
    CHECK(r.associative == !has_witness("associative"));
    CHECK(r.commutative == !has_witness("commutative"));
    CHECK(r.left_bol == !has_witness("leftBol"));
    CHECK(r.right_bol == !has_witness("rightBol"));
    CHECK(r.aip == !has_witness("aip"));
    CHECK(r.a_loop == !has_witness("aLoop"));
    CHECK(r.power_associative == !has_witness("powerAssociative"));
    CHECK(r.simple == !has_witness("simple"));
    CHECK(r.solvable == !has_witness("solvable"));
    CHECK(r.nilpotent == !has_witness("nilpotent"));
    CHECK(*r.weak_lagrange == !has_witness("weakLagrange"));
    CHECK(*r.strong_lagrange == !has_witness("strongLagrange"));
  }
}

TEST_CASE("exponent of a quotient divides the exponent of the loop") {
  for (const auto& [name, L] : corpus::small()) {
    if (L.order() > 16 || !is_power_associative(L)) continue;
    CAPTURE(name);
    long long e = exponent(L);
    for (const SubsetMask& N : all_normal_subloops(L)) {
      CayleyTable q = quotient(L, N).quotient;
      if (!is_power_associative(q)) continue;
      CHECK(e % exponent(q) == 0);
    }
  }
}

TEST_CASE("quotient by the derived subloop is always an abelian group") {
  for (const auto& [name, L] : corpus::small()) {
    if (L.order() > 16) continue;
    CAPTURE(name);
    CayleyTable q = quotient(L, derived_subloop(L)).quotient;
    CHECK(is_associative(q).holds);
    CHECK(is_commutative(q).holds);
  }
}
