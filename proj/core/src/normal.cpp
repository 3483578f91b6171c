#include "loopkit/normal.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>

#include "loopkit/errors.hpp"
#include "loopkit/parallel.hpp"

namespace loopkit {

Elem apply_inner(const CayleyTable& L, const InnerGeneratorRef& g, Elem z) {
  switch (g.kind) {
    case InnerGeneratorRef::Kind::T:
      return L.left_div(g.x, L.mul(z, g.x));
    case InnerGeneratorRef::Kind::L:
      return L.left_div(L.mul(g.x, g.y), L.mul(g.x, L.mul(g.y, z)));
    case InnerGeneratorRef::Kind::R:
    default:
      return L.right_div(L.mul(g.x, g.y), L.mul(L.mul(z, g.x), g.y));
  }
}

std::size_t inner_generator_count(const CayleyTable& L) {
  auto n = static_cast<std::size_t>(L.order());
  return 2 * n * n + n;
}

InnerGeneratorRef inner_generator_at(const CayleyTable& L, std::size_t k) {
  auto n = static_cast<std::size_t>(L.order());
  if (k < n) return {InnerGeneratorRef::Kind::T, static_cast<Elem>(k), 0};
  k -= n;
  if (k < n * n)
    return {InnerGeneratorRef::Kind::L, static_cast<Elem>(k / n),
            static_cast<Elem>(k % n)};
  k -= n * n;
  return {InnerGeneratorRef::Kind::R, static_cast<Elem>(k / n),
          static_cast<Elem>(k % n)};
}

void inner_generator_images(const CayleyTable& L, const InnerGeneratorRef& g,
                            std::vector<Elem>& img) {
  const int n = L.order();
  img.resize(static_cast<std::size_t>(n));
  switch (g.kind) {
    case InnerGeneratorRef::Kind::T: {
      const Elem* lx = L.ldiv_row(g.x);
      for (int z = 0; z < n; ++z)
        img[static_cast<std::size_t>(z)] = lx[L.mul(static_cast<Elem>(z), g.x)];
      break;
    }
    case InnerGeneratorRef::Kind::L: {
      const Elem* ld = L.ldiv_row(L.mul(g.x, g.y));
      const Elem* rx = L.row(g.x);
      const Elem* ry = L.row(g.y);
      for (int z = 0; z < n; ++z)
        img[static_cast<std::size_t>(z)] = ld[rx[ry[z]]];
      break;
    }
    case InnerGeneratorRef::Kind::R: {
      const Elem* rd = L.rdiv_row(L.mul(g.x, g.y));
      for (int z = 0; z < n; ++z)
        img[static_cast<std::size_t>(z)] =
            rd[L.mul(L.mul(static_cast<Elem>(z), g.x), g.y)];
      break;
    }
  }
}

InnerGenerators inner_generators(const CayleyTable& L) {
  InnerGenerators gens;
  std::size_t count = inner_generator_count(L);
  gens.maps.reserve(count);
  std::vector<Elem> img;
  for (std::size_t k = 0; k < count; ++k) {
    inner_generator_images(L, inner_generator_at(L, k), img);
    gens.maps.push_back(Permutation{img});
  }
  return gens;
}

bool is_normal(const CayleyTable& L, const SubsetMask& N, int threads) {
  if (!is_subloop(L, N)) throw NotASubloopError("is_normal: set is not a subloop");
  const int n = L.order();
  std::vector<Elem> members = N.elements();
  if (static_cast<int>(members.size()) == n) return true;

  std::atomic<bool> ok{true};
  detail::parallel_chunks(static_cast<int>(members.size()), threads, [&](int lo, int hi) {
    std::vector<Elem> tm(static_cast<std::size_t>(n));
    for (int k = lo; k < hi && ok.load(std::memory_order_relaxed); ++k) {
      Elem m = members[static_cast<std::size_t>(k)];
      // T(x): x \ (m x)
      for (int x = 0; x < n; ++x) {
        if (!N.test(L.left_div(static_cast<Elem>(x), L.mul(m, static_cast<Elem>(x))))) {
          ok.store(false, std::memory_order_relaxed);
          return;
        }
      }
      // L(x,y): (xy) \ (x (y m))
      for (int y = 0; y < n; ++y) tm[static_cast<std::size_t>(y)] = L.mul(static_cast<Elem>(y), m);
      for (int x = 0; x < n; ++x) {
        const Elem* rx = L.row(static_cast<Elem>(x));
        for (int y = 0; y < n; ++y) {
          if (!N.test(L.left_div(rx[y], rx[tm[static_cast<std::size_t>(y)]]))) {
            ok.store(false, std::memory_order_relaxed);
            return;
          }
        }
      }
      // R(x,y): ((m x) y) / (xy)
      const Elem* rm = L.row(m);
      for (int x = 0; x < n; ++x) {
        const Elem* rx = L.row(static_cast<Elem>(x));
        const Elem* rs = L.row(rm[x]);
        for (int y = 0; y < n; ++y) {
          if (!N.test(L.right_div(rx[y], rs[y]))) {
            ok.store(false, std::memory_order_relaxed);
            return;
          }
        }
      }
    }
  });
  return ok.load();
}

namespace {

// Normal-closure fixpoint: alternates product closure with one sweep of
// all inner generators per member. If known_full is given and the working
// set touches it, the set is already doomed to be everything and the full
// mask is returned at once.
SubsetMask ncl_impl(const CayleyTable& L, const SubsetMask& seed,
                    const SubsetMask* known_full) {
  const int n = L.order();
  const SubsetMask full = SubsetMask::full(n);
  const Elem e = L.identity();

  SubsetMask mask = SubsetMask::single(e);
  std::vector<Elem> members{e};
  members.reserve(static_cast<std::size_t>(n));
  for (Elem s : seed.elements()) {
    if (!mask.test(s)) {
      mask.set(s);
      members.push_back(s);
    }
  }
  close_in_place(L, mask, members, 0);
  std::size_t closed = members.size();

  std::vector<Elem> tm(static_cast<std::size_t>(n));
  auto add = [&](Elem p) {
    if (!mask.test(p)) {
      mask.set(p);
      members.push_back(p);
    }
  };

  for (std::size_t swept = 0; swept < members.size(); ++swept) {
    if (mask.count() == n) return full;
    if (known_full && mask.intersects(*known_full)) return full;
    Elem m = members[swept];
    if (m == e) continue;  // generators fix the identity

    for (int x = 0; x < n; ++x)
      add(L.left_div(static_cast<Elem>(x), L.mul(m, static_cast<Elem>(x))));

    for (int y = 0; y < n; ++y) tm[static_cast<std::size_t>(y)] = L.mul(static_cast<Elem>(y), m);
    for (int x = 0; x < n; ++x) {
      const Elem* rx = L.row(static_cast<Elem>(x));
      for (int y = 0; y < n; ++y) add(L.left_div(rx[y], rx[tm[static_cast<std::size_t>(y)]]));
    }

    const Elem* rm = L.row(m);
    for (int x = 0; x < n; ++x) {
      const Elem* rx = L.row(static_cast<Elem>(x));
      const Elem* rs = L.row(rm[x]);
      for (int y = 0; y < n; ++y) add(L.right_div(rx[y], rs[y]));
    }

    if (members.size() > closed) {
      close_in_place(L, mask, members, closed);
      closed = members.size();
    }
  }
  return mask;
}

}  // namespace

SubsetMask normal_closure(const CayleyTable& L, const SubsetMask& seed) {
  return ncl_impl(L, seed, nullptr);
}

std::vector<SubsetMask> all_normal_subloops(const CayleyTable& L,
                                            const EnumerationLimits& limits,
                                            int threads) {
  std::vector<SubsetMask> subs = enumerate_subloops(L, limits, threads);
  std::vector<char> keep(subs.size(), 0);
  detail::parallel_chunks(static_cast<int>(subs.size()), threads, [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      keep[static_cast<std::size_t>(i)] = is_normal(L, subs[static_cast<std::size_t>(i)], 1) ? 1 : 0;
  });
  std::vector<SubsetMask> out;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (keep[i]) out.push_back(subs[i]);
  return out;
}

std::optional<SubsetMask> minimal_normal_subloop(const CayleyTable& L) {
  const int n = L.order();
  const Elem e = L.identity();
  SubsetMask known_full;
  bool any_full = false;
  std::optional<SubsetMask> best;
  for (int x = 0; x < n; ++x) {
    if (static_cast<Elem>(x) == e) continue;
    SubsetMask c = ncl_impl(L, SubsetMask::single(static_cast<Elem>(x)),
                            any_full ? &known_full : nullptr);
    if (c.count() == n) {
      known_full.set(static_cast<Elem>(x));
      any_full = true;
      continue;
    }
    if (!best || canonical_less(c, *best)) best = c;
  }
  return best;
}

QuotientMap quotient(const CayleyTable& L, const SubsetMask& N) {
  if (!is_subloop(L, N)) throw NotASubloopError("quotient: set is not a subloop");
  if (!is_normal(L, N)) throw NotNormalError("quotient: subloop is not normal");

  const int n = L.order();
  const Elem e = L.identity();
  std::vector<Elem> members = N.elements();
  const auto m = members.size();

  constexpr Elem kUnassigned = 0xFFFF;
  std::vector<Elem> block_of(static_cast<std::size_t>(n), kUnassigned);
  std::vector<std::vector<Elem>> cosets;
  for (int x = 0; x < n; ++x) {
    if (block_of[static_cast<std::size_t>(x)] != kUnassigned) continue;
    auto id = static_cast<Elem>(cosets.size());
    std::vector<Elem> block;
    block.reserve(m);
    for (Elem k : members) block.push_back(L.mul(static_cast<Elem>(x), k));
    std::sort(block.begin(), block.end());
    for (Elem v : block) {
      if (block_of[v] != kUnassigned)
        throw NotNormalError("quotient: cosets do not partition the loop");
      block_of[v] = id;
    }
    cosets.push_back(std::move(block));
  }

  // Blocks were discovered in order of their smallest member; move the
  // identity's coset to the front (a no-op when the identity is 0).
  std::size_t eb = block_of[e];
  if (eb != 0) {
    std::rotate(cosets.begin(), cosets.begin() + static_cast<long>(eb),
                cosets.begin() + static_cast<long>(eb) + 1);
    for (auto& b : block_of) {
      if (b == eb)
        b = 0;
      else if (b < eb)
        ++b;
    }
  }

  const auto q = static_cast<int>(cosets.size());
  std::vector<Elem> qt(static_cast<std::size_t>(q) * static_cast<std::size_t>(q), kUnassigned);
  for (int x = 0; x < n; ++x) {
    const Elem* rx = L.row(static_cast<Elem>(x));
    Elem bx = block_of[static_cast<std::size_t>(x)];
    for (int y = 0; y < n; ++y) {
      Elem& cell = qt[std::size_t(bx) * std::size_t(q) + block_of[static_cast<std::size_t>(y)]];
      Elem product_block = block_of[rx[y]];
      if (cell == kUnassigned)
        cell = product_block;
      else if (cell != product_block)
        throw NotNormalError("quotient: coset product is not well defined");
    }
  }

  QuotientMap result{std::move(cosets), std::move(block_of),
                     CayleyTable::validate(q, std::move(qt))};
  return result;
}

bool is_simple(const CayleyTable& L, int threads) {
  const int n = L.order();
  if (n <= 1) return false;
  const Elem e = L.identity();

  std::atomic<bool> nonsimple{false};
  std::mutex mu;
  SubsetMask known_full;
  bool any_full = false;

  detail::parallel_chunks(n, threads, [&](int lo, int hi) {
    for (int x = lo; x < hi; ++x) {
      if (static_cast<Elem>(x) == e) continue;
      if (nonsimple.load(std::memory_order_relaxed)) return;
      SubsetMask snapshot;
      bool have_snapshot;
      {
        std::lock_guard<std::mutex> g(mu);
        snapshot = known_full;
        have_snapshot = any_full;
      }
      SubsetMask c = ncl_impl(L, SubsetMask::single(static_cast<Elem>(x)),
                              have_snapshot ? &snapshot : nullptr);
      if (c.count() != n) {
        nonsimple.store(true, std::memory_order_relaxed);
        return;
      }
      std::lock_guard<std::mutex> g(mu);
      known_full.set(static_cast<Elem>(x));
      any_full = true;
    }
  });
  return !nonsimple.load();
}

SubsetMask nucleus(const CayleyTable& L, int threads) {
  const int n = L.order();
  std::vector<char> in_nuc(static_cast<std::size_t>(n), 0);
  detail::parallel_chunks(n, threads, [&](int lo, int hi) {
    for (int ai = lo; ai < hi; ++ai) {
      auto a = static_cast<Elem>(ai);
      const Elem* ra = L.row(a);
      bool ok = true;
      // (a x) y == a (x y)
      for (int x = 0; x < n && ok; ++x) {
        const Elem* rx = L.row(static_cast<Elem>(x));
        const Elem* rax = L.row(ra[x]);
        for (int y = 0; y < n; ++y) {
          if (rax[y] != ra[rx[y]]) {
            ok = false;
            break;
          }
        }
      }
      // (x a) y == x (a y)
      for (int x = 0; x < n && ok; ++x) {
        const Elem* rx = L.row(static_cast<Elem>(x));
        const Elem* rxa = L.row(rx[a]);
        for (int y = 0; y < n; ++y) {
          if (rxa[y] != rx[ra[y]]) {
            ok = false;
            break;
          }
        }
      }
      // (x y) a == x (y a)
      for (int x = 0; x < n && ok; ++x) {
        const Elem* rx = L.row(static_cast<Elem>(x));
        for (int y = 0; y < n; ++y) {
          if (L.mul(rx[y], a) != rx[L.mul(static_cast<Elem>(y), a)]) {
            ok = false;
            break;
          }
        }
      }
      in_nuc[static_cast<std::size_t>(ai)] = ok ? 1 : 0;
    }
  });
  SubsetMask mask;
  for (int a = 0; a < n; ++a)
    if (in_nuc[static_cast<std::size_t>(a)]) mask.set(static_cast<Elem>(a));
  return mask;
}

SubsetMask center(const CayleyTable& L, int threads) {
  const int n = L.order();
  SubsetMask nuc = nucleus(L, threads);
  SubsetMask mask;
  for (Elem a : nuc.elements()) {
    const Elem* ra = L.row(a);
    bool commutes = true;
    for (int x = 0; x < n; ++x) {
      if (ra[x] != L.mul(static_cast<Elem>(x), a)) {
        commutes = false;
        break;
      }
    }
    if (commutes) mask.set(a);
  }
  return mask;
}

SubloopTable subloop_table(const CayleyTable& L, const SubsetMask& S) {
  if (!S.test(L.identity()))
    throw NotASubloopError("subloop_table: set does not contain the identity");
  std::vector<Elem> elems = S.elements();
  const auto m = static_cast<int>(elems.size());
  std::vector<Elem> index_of(static_cast<std::size_t>(L.order()), 0);
  for (int i = 0; i < m; ++i) index_of[elems[static_cast<std::size_t>(i)]] = static_cast<Elem>(i);

  std::vector<Elem> t(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Elem* ri = L.row(elems[static_cast<std::size_t>(i)]);
    for (int j = 0; j < m; ++j) {
      Elem p = ri[elems[static_cast<std::size_t>(j)]];
      if (!S.test(p)) throw NotASubloopError("subloop_table: set is not closed");
      t[std::size_t(i) * std::size_t(m) + std::size_t(j)] = index_of[p];
    }
  }
  return {CayleyTable::validate(m, std::move(t)), std::move(elems)};
}

}  // namespace loopkit
