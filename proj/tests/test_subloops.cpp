#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "loopkit/constructions.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/subloops.hpp"

using namespace loopkit;

TEST_CASE("closure of the identity is the trivial subloop") {
  CayleyTable L = cyclic_group(8);
  SubsetMask e = SubsetMask::single(L.identity());
  CHECK(closure(L, e).count() == 1);
}

TEST_CASE("closure of a generator of a cyclic group is everything") {
  CayleyTable L = cyclic_group(9);
  CHECK(closure(L, SubsetMask::single(1)).count() == 9);
  CHECK(closure(L, SubsetMask::single(3)).count() == 3);
}

TEST_CASE("closure always contains the identity and the seed") {
  for (const auto& [name, L] : corpus::census()) {
    for (Elem x = 0; x < Elem(L.order()); ++x) {
      SubsetMask c = closure(L, SubsetMask::single(x));
      CAPTURE(name);
      CHECK(c.test(x));
      CHECK(c.test(L.identity()));
      CHECK(is_subloop(L, c));
    }
  }
}

TEST_CASE("closure is idempotent and monotone") {
  CayleyTable L = chein_double(chein_double(cyclic_group(3)));  // order 12
  for (Elem x = 0; x < 12; ++x) {
    SubsetMask c = closure(L, SubsetMask::single(x));
    CHECK(closure(L, c) == c);
    SubsetMask seed = SubsetMask::single(x);
    seed.set(L.identity());
    CHECK(c.subset_of(closure(L, seed)));
  }
}

TEST_CASE("is_subloop rejects sets missing the identity or not closed") {
  CayleyTable L = cyclic_group(6);
  SubsetMask no_e;
  no_e.set(2);
  no_e.set(4);
  CHECK(!is_subloop(L, no_e));
  SubsetMask not_closed;
  not_closed.set(0);
  not_closed.set(1);
  CHECK(!is_subloop(L, not_closed));
  SubsetMask good;
  good.set(0);
  good.set(2);
  good.set(4);
  CHECK(is_subloop(L, good));
}

TEST_CASE("enumeration matches the exhaustive oracle on every census loop") {
  for (const auto& [name, L] : corpus::census()) {
    CAPTURE(name);
    auto fast = enumerate_subloops(L);
    auto slow = brute_force_subloops(L).subloops;
    CHECK(fast == slow);
  }
}

TEST_CASE("enumeration matches the exhaustive oracle on random completions") {
  for (int order = 7; order <= 12; ++order) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      CayleyTable L = random_loop(order, seed);
      CAPTURE(order);
      CAPTURE(seed);
      CHECK(enumerate_subloops(L) == brute_force_subloops(L).subloops);
    }
  }
}

TEST_CASE("subloops of a cyclic group are one per divisor") {
  auto subs = enumerate_subloops(cyclic_group(12));
  std::multiset<std::size_t> orders;
  for (const auto& m : subs) orders.insert(m.count());
  CHECK(orders == std::multiset<std::size_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("subloop list is canonically sorted and duplicate-free") {
  for (const auto& [name, L] : corpus::small()) {
    if (L.order() > 16) continue;
    auto subs = enumerate_subloops(L);
    CAPTURE(name);
    for (std::size_t i = 1; i < subs.size(); ++i) {
      CHECK(canonical_less(subs[i - 1], subs[i]));
    }
  }
}

TEST_CASE("thread counts do not change the result") {
  CayleyTable L = corpus::order10();
  auto one = enumerate_subloops(L, {}, 1);
  auto four = enumerate_subloops(L, {}, 4);
  CHECK(one == four);
}

TEST_CASE("the subloop cap raises CapacityError") {
  EnumerationLimits limits;
  limits.max_subloops = 5;
  // Z_2^4 has 67 subgroups
  CayleyTable L = direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                 direct_product(cyclic_group(2), cyclic_group(2)));
  CHECK_THROWS_AS(enumerate_subloops(L, limits), CapacityError);
}

TEST_CASE("brute force oracle refuses large orders") {
  CHECK_THROWS_AS(brute_force_subloops(cyclic_group(13)), OracleBoundError);
}

TEST_CASE("containment edges are exactly the proper inclusions") {
  SubloopLattice lat = all_subloops(cyclic_group(12));
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges(lat.containment.begin(),
                                                          lat.containment.end());
  for (std::uint32_t i = 0; i < lat.subloops.size(); ++i)
    for (std::uint32_t j = 0; j < lat.subloops.size(); ++j) {
      bool proper = i != j && lat.subloops[i].subset_of(lat.subloops[j]);
      CHECK(edges.count({i, j}) == (proper ? 1u : 0u));
    }
}

TEST_CASE("weak Lagrange on groups always holds") {
  for (const auto& [name, L] : corpus::groups()) {
    CAPTURE(name);
    CHECK(weak_lagrange(L).holds);
    CHECK(strong_lagrange(L).holds);
  }
}

TEST_CASE("weak Lagrange failure carries the canonically least witness") {
  for (const CayleyTable& L : enumerate_loops(5)) {
    WeakLagrange w = weak_lagrange(L);
    if (w.holds) continue;
    REQUIRE(w.witness.has_value());
    CHECK(w.witness->count() == 2);  // order 2 does not divide 5
    CHECK(is_subloop(L, *w.witness));
    // no violating subloop is canonically smaller
    for (const SubsetMask& s : enumerate_subloops(L)) {
      if (5 % s.count() != 0) CHECK(!canonical_less(s, *w.witness));
    }
  }
}

TEST_CASE("strong Lagrange witness is a nested violating pair") {
  StrongLagrange s = strong_lagrange(corpus::order10());
  REQUIRE(!s.holds);
  REQUIRE(s.witness.has_value());
  const auto& [K, H] = *s.witness;
  CHECK(K.subset_of(H));
  CHECK(H.count() % K.count() != 0);
}

TEST_CASE("weak holds but strong fails on the order-10 example") {
  const CayleyTable& L = corpus::order10();
  CHECK(weak_lagrange(L).holds);
  CHECK(!strong_lagrange(L).holds);
}

TEST_CASE("strong Lagrange implies weak Lagrange on the corpus") {
  for (const auto& [name, L] : corpus::small()) {
    CAPTURE(name);
    if (strong_lagrange(L).holds) CHECK(weak_lagrange(L).holds);
  }
}

TEST_CASE("checkpoint seeds reproduce the full enumeration") {
  CayleyTable L = chein_double(chein_double(cyclic_group(4)));  // order 16
  auto full = enumerate_subloops(L);
  // simulate resuming from a truncated checkpoint
  std::vector<SubsetMask> seed(full.begin(), full.begin() + long(full.size()) / 2);
  auto resumed = enumerate_subloops(L, {}, 1, &seed, nullptr);
  CHECK(resumed == full);
}

TEST_CASE("checkpoint sink receives progress and the final state") {
  CayleyTable L = chein_double(cyclic_group(6));
  std::vector<SubsetMask> last;
  std::function<void(const std::vector<SubsetMask>&)> sink =
      [&](const std::vector<SubsetMask>& masks) { last = masks; };
  auto full = enumerate_subloops(L, {}, 1, nullptr, &sink);
  // the sink saw some prefix of the discovery; everything it saw is real
  for (const SubsetMask& m : last) CHECK(std::find(full.begin(), full.end(), m) != full.end());
}
