#include "loopkit/constructions.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <unordered_map>

#include "loopkit/errors.hpp"
#include "loopkit/properties.hpp"
#include "loopkit/subloops.hpp"

namespace loopkit {

long long paige_order(int q) {
  long long lq = q;
  long long v = lq * lq * lq * (lq * lq * lq * lq - 1);
  return q % 2 == 0 ? v : v / 2;
}

namespace {

std::uint64_t zorn_key(const ZornMatrix& m) {
  std::uint64_t k = m.a;
  k = k << 8 | m.b;
  for (int i = 0; i < 3; ++i) k = k << 8 | m.alpha.c[std::size_t(i)];
  for (int i = 0; i < 3; ++i) k = k << 8 | m.beta.c[std::size_t(i)];
  return k;
}

ZornMatrix zorn_from_key(std::uint64_t k) {
  ZornMatrix m;
  for (int i = 2; i >= 0; --i) {
    m.beta.c[std::size_t(i)] = GaloisField::Fe(k & 0xFF);
    k >>= 8;
  }
  for (int i = 2; i >= 0; --i) {
    m.alpha.c[std::size_t(i)] = GaloisField::Fe(k & 0xFF);
    k >>= 8;
  }
  m.b = GaloisField::Fe(k & 0xFF);
  k >>= 8;
  m.a = GaloisField::Fe(k & 0xFF);
  return m;
}

std::uint64_t canonical_key(const GaloisField& F, const ZornMatrix& m) {
  return std::min(zorn_key(m), zorn_key(zorn_neg(F, m)));
}

template <typename Fn>
void for_each_zorn(const GaloisField& F, Fn&& fn) {
  const int q = F.order();
  ZornMatrix m;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int a0 = 0; a0 < q; ++a0)
        for (int a1 = 0; a1 < q; ++a1)
          for (int a2 = 0; a2 < q; ++a2)
            for (int b0 = 0; b0 < q; ++b0)
              for (int b1 = 0; b1 < q; ++b1)
                for (int b2 = 0; b2 < q; ++b2) {
                  m.a = GaloisField::Fe(a);
                  m.b = GaloisField::Fe(b);
                  m.alpha = {{GaloisField::Fe(a0), GaloisField::Fe(a1), GaloisField::Fe(a2)}};
                  m.beta = {{GaloisField::Fe(b0), GaloisField::Fe(b1), GaloisField::Fe(b2)}};
                  fn(m);
                }
}

}  // namespace

long long count_norm_one_matrices(int q) {
  GaloisField F(q);
  long long count = 0;
  for_each_zorn(F, [&](const ZornMatrix& m) {
    if (zorn_norm(F, m) == 1) ++count;
  });
  return count;
}

CayleyTable paige_loop(int q) {
  GaloisField F(q);
  long long expected = paige_order(q);
  if (expected > kMaxOrder)
    throw CapacityError("order " + std::to_string(expected) + " exceeds capacity " +
                        std::to_string(kMaxOrder));

  std::vector<std::uint64_t> keys;
  for_each_zorn(F, [&](const ZornMatrix& m) {
    if (zorn_norm(F, m) == 1) keys.push_back(canonical_key(F, m));
  });
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  if (static_cast<long long>(keys.size()) != expected)
    throw OracleFailureError("expected " + std::to_string(expected) + " classes, found " +
                             std::to_string(keys.size()));

  std::uint64_t idkey = canonical_key(F, zorn_identity());
  auto idpos = std::find(keys.begin(), keys.end(), idkey);
  if (idpos == keys.end()) throw OracleFailureError("identity class missing");
  std::rotate(keys.begin(), idpos, idpos + 1);

  const auto n = static_cast<int>(keys.size());
  std::unordered_map<std::uint64_t, Elem> index_of;
  index_of.reserve(keys.size() * 2);
  std::vector<ZornMatrix> reps;
  reps.reserve(keys.size());
  for (int i = 0; i < n; ++i) {
    index_of.emplace(keys[std::size_t(i)], static_cast<Elem>(i));
    reps.push_back(zorn_from_key(keys[std::size_t(i)]));
  }

  std::vector<Elem> t(std::size_t(n) * std::size_t(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ZornMatrix p = zorn_mul(F, reps[std::size_t(i)], reps[std::size_t(j)]);
      auto it = index_of.find(canonical_key(F, p));
      if (it == index_of.end())
        throw OracleFailureError("product of norm-1 classes left the norm-1 set");
      t[std::size_t(i) * std::size_t(n) + std::size_t(j)] = it->second;
    }
  }

  CayleyTable L = [&] {
    try {
      return CayleyTable::validate(n, std::move(t));
    } catch (const Error& e) {
      throw OracleFailureError(std::string("constructed table is not a loop: ") + e.what());
    }
  }();
  if (L.identity() != 0) throw OracleFailureError("identity class is not element 0");

  if (q == 2) {
    // cheap enough to run on every construction; pins the sign conventions
    if (!is_moufang(L, 1)) throw OracleFailureError("order-120 table is not Moufang");
    if (!is_simple(L, 1)) throw OracleFailureError("order-120 table is not simple");
    if (is_associative(L, 1).holds) throw OracleFailureError("order-120 table is associative");
    if (is_commutative(L, 1).holds) throw OracleFailureError("order-120 table is commutative");
  }
  return L;
}

CayleyTable cyclic_group(int n) {
  std::vector<Elem> t(std::size_t(n) * std::size_t(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[std::size_t(i) * std::size_t(n) + std::size_t(j)] = static_cast<Elem>((i + j) % n);
  return CayleyTable::validate(n, std::move(t));
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  const int na = a.order(), nb = b.order();
  const long long n = static_cast<long long>(na) * nb;
  if (n > kMaxOrder)
    throw CapacityError("product order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxOrder));
  std::vector<Elem> t(std::size_t(n) * std::size_t(n));
  for (int ia = 0; ia < na; ++ia)
    for (int ib = 0; ib < nb; ++ib)
      for (int ja = 0; ja < na; ++ja)
        for (int jb = 0; jb < nb; ++jb) {
          auto x = std::size_t(ia) * std::size_t(nb) + std::size_t(ib);
          auto y = std::size_t(ja) * std::size_t(nb) + std::size_t(jb);
          t[x * std::size_t(n) + y] = static_cast<Elem>(
              a.mul(static_cast<Elem>(ia), static_cast<Elem>(ja)) * nb +
              b.mul(static_cast<Elem>(ib), static_cast<Elem>(jb)));
        }
  return CayleyTable::validate(static_cast<int>(n), std::move(t));
}

CayleyTable chein_double(const CayleyTable& G) {
  TripleLaw assoc = is_associative(G, 1);
  if (!assoc.holds)
    throw NotAGroupError("chein_double needs a group; associativity fails at x=" +
                         std::to_string((*assoc.witness)[0]) + " y=" +
                         std::to_string((*assoc.witness)[1]) + " z=" +
                         std::to_string((*assoc.witness)[2]));
  const int m = G.order();
  const int n = 2 * m;
  if (n > kMaxOrder)
    throw CapacityError("double order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxOrder));
  std::vector<Elem> inv(static_cast<std::size_t>(m));
  for (int g = 0; g < m; ++g) inv[std::size_t(g)] = *G.two_sided_inverse(static_cast<Elem>(g));

  std::vector<Elem> t(std::size_t(n) * std::size_t(n));
  auto at = [&](int i, int j) -> Elem& { return t[std::size_t(i) * std::size_t(n) + std::size_t(j)]; };
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) {
      auto ge = static_cast<Elem>(g), he = static_cast<Elem>(h);
      at(g, h) = G.mul(ge, he);
      at(g, m + h) = static_cast<Elem>(m + G.mul(he, ge));
      at(m + g, h) = static_cast<Elem>(m + G.mul(ge, inv[std::size_t(h)]));
      at(m + g, m + h) = G.mul(inv[std::size_t(h)], ge);
    }
  }
  return CayleyTable::validate(n, std::move(t));
}

namespace {

// Cheap isomorphism invariants used to prefilter representative lists and
// prune the bijection search.
struct IsoSignature {
  std::vector<int> closure_orders;  // sorted
  int commuting = 0;
  int idempotents = 0;
  friend bool operator==(const IsoSignature&, const IsoSignature&) = default;
};

std::vector<int> element_closure_orders(const CayleyTable& L) {
  std::vector<int> orders(std::size_t(L.order()));
  for (int x = 0; x < L.order(); ++x)
    orders[std::size_t(x)] =
        static_cast<int>(closure(L, SubsetMask::single(static_cast<Elem>(x))).count());
  return orders;
}

IsoSignature signature_of(const CayleyTable& L) {
  IsoSignature s;
  s.closure_orders = element_closure_orders(L);
  std::sort(s.closure_orders.begin(), s.closure_orders.end());
  const int n = L.order();
  for (int x = 0; x < n; ++x) {
    const Elem* rx = L.row(static_cast<Elem>(x));
    if (rx[x] == x) ++s.idempotents;
    for (int y = x + 1; y < n; ++y)
      if (rx[y] == L.mul(static_cast<Elem>(y), static_cast<Elem>(x))) ++s.commuting;
  }
  return s;
}

bool isomorphic_impl(const CayleyTable& A, const CayleyTable& B,
                     const std::vector<int>& orders_a, const std::vector<int>& orders_b) {
  const int n = A.order();
  constexpr Elem kFree = 0xFFFF;
  std::vector<Elem> map(std::size_t(n), kFree);      // A element -> B element
  std::vector<Elem> preimage(std::size_t(n), kFree); // B element -> A element
  std::vector<int> assigned;                         // assignment order
  assigned.reserve(std::size_t(n));

  map[A.identity()] = B.identity();
  preimage[B.identity()] = A.identity();
  assigned.push_back(A.identity());

  // which A element gets chosen at each depth: identity first, then 0..n-1
  std::vector<int> slot;
  slot.reserve(std::size_t(n));
  for (int x = 0; x < n; ++x)
    if (static_cast<Elem>(x) != A.identity()) slot.push_back(x);

  auto consistent = [&](int x) {
    // verify every product between x and the assigned elements
    for (int y : assigned) {
      auto ye = static_cast<Elem>(y), xe = static_cast<Elem>(x);
      Elem p = A.mul(xe, ye);
      Elem q = B.mul(map[xe], map[ye]);
      if (map[p] != kFree ? map[p] != q : preimage[q] != kFree) return false;
      p = A.mul(ye, xe);
      q = B.mul(map[ye], map[xe]);
      if (map[p] != kFree ? map[p] != q : preimage[q] != kFree) return false;
    }
    return true;
  };

  // iterative DFS over candidate images
  std::vector<int> cand(std::size_t(slot.size()), 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == slot.size()) return true;
    int x = slot[depth];
    bool advanced = false;
    for (int v = cand[depth]; v < n; ++v) {
      if (preimage[std::size_t(v)] != kFree) continue;
      if (orders_b[std::size_t(v)] != orders_a[std::size_t(x)]) continue;
      map[std::size_t(x)] = static_cast<Elem>(v);
      preimage[std::size_t(v)] = static_cast<Elem>(x);
      if (consistent(x)) {
        assigned.push_back(x);
        cand[depth] = v + 1;
        ++depth;
        if (depth < slot.size()) cand[depth] = 0;
        advanced = true;
        break;
      }
      map[std::size_t(x)] = kFree;
      preimage[std::size_t(v)] = kFree;
    }
    if (advanced) continue;
    if (depth == 0) return false;
    --depth;
    int px = slot[depth];
    assigned.pop_back();
    preimage[map[std::size_t(px)]] = kFree;
    map[std::size_t(px)] = kFree;
  }
}

}  // namespace

bool are_isomorphic(const CayleyTable& a, const CayleyTable& b) {
  if (a.order() != b.order()) return false;
  if (a.order() > 10)
    throw BoundExceededError("isomorphism search limited to order 10, got " +
                             std::to_string(a.order()));
  if (a.order() <= 1) return true;
  std::vector<int> oa = element_closure_orders(a);
  std::vector<int> ob = element_closure_orders(b);
  std::vector<int> sa = oa, sb = ob;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return isomorphic_impl(a, b, oa, ob);
}

namespace {

// Shared backtracking Latin-square filler. Cells are (row, col) pairs to
// fill; prefs[k] lists candidate values for cell k in the order to try.
// on_complete returns true to accept and stop, false to keep searching.
template <typename OnComplete>
bool fill_cells(int n, std::vector<Elem>& t, const std::vector<std::pair<int, int>>& cells,
                const std::vector<std::vector<Elem>>& prefs, OnComplete&& on_complete) {
  const auto total = cells.size();
  std::vector<std::uint16_t> row_used(std::size_t(n), 0), col_used(std::size_t(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem v = t[std::size_t(i) * std::size_t(n) + std::size_t(j)];
      if (v != 0xFFFF) {
        row_used[std::size_t(i)] |= std::uint16_t(1u << v);
        col_used[std::size_t(j)] |= std::uint16_t(1u << v);
      }
    }

  std::vector<std::size_t> next_cand(total, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == total) {
      if (on_complete()) return true;
      // treat the completed assignment as exhausted and backtrack
      if (total == 0) return false;
      --depth;
      auto [ri, ci] = cells[depth];
      Elem v = t[std::size_t(ri) * std::size_t(n) + std::size_t(ci)];
      row_used[std::size_t(ri)] &= std::uint16_t(~(1u << v));
      col_used[std::size_t(ci)] &= std::uint16_t(~(1u << v));
      t[std::size_t(ri) * std::size_t(n) + std::size_t(ci)] = 0xFFFF;
      continue;
    }
    auto [r, c] = cells[depth];
    bool placed = false;
    const auto& pref = prefs[depth];
    for (std::size_t k = next_cand[depth]; k < pref.size(); ++k) {
      Elem v = pref[k];
      std::uint16_t bit = std::uint16_t(1u << v);
      if ((row_used[std::size_t(r)] & bit) || (col_used[std::size_t(c)] & bit)) continue;
      t[std::size_t(r) * std::size_t(n) + std::size_t(c)] = v;
      row_used[std::size_t(r)] |= bit;
      col_used[std::size_t(c)] |= bit;
      next_cand[depth] = k + 1;
      ++depth;
      if (depth < total) next_cand[depth] = 0;
      placed = true;
      break;
    }
    if (placed) continue;
    if (depth == 0) return false;
    --depth;
    auto [ri, ci] = cells[depth];
    Elem v = t[std::size_t(ri) * std::size_t(n) + std::size_t(ci)];
    row_used[std::size_t(ri)] &= std::uint16_t(~(1u << v));
    col_used[std::size_t(ci)] &= std::uint16_t(~(1u << v));
    t[std::size_t(ri) * std::size_t(n) + std::size_t(ci)] = 0xFFFF;
  }
}

}  // namespace

std::vector<CayleyTable> enumerate_loops(int n) {
  if (n < 1 || n > 6)
    throw BoundExceededError("loop census limited to order 6, got " + std::to_string(n));
  if (n == 1) return {cyclic_group(1)};

  std::vector<Elem> t(std::size_t(n) * std::size_t(n), 0xFFFF);
  for (int j = 0; j < n; ++j) t[std::size_t(j)] = static_cast<Elem>(j);
  for (int i = 1; i < n; ++i) t[std::size_t(i) * std::size_t(n)] = static_cast<Elem>(i);

  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) cells.emplace_back(i, j);
  std::vector<Elem> ascending;
  for (int v = 0; v < n; ++v) ascending.push_back(static_cast<Elem>(v));
  std::vector<std::vector<Elem>> prefs(cells.size(), ascending);

  std::vector<CayleyTable> reps;
  std::vector<IsoSignature> sigs;
  std::vector<std::vector<int>> rep_orders;

  fill_cells(n, t, cells, prefs, [&] {
    CayleyTable cand = CayleyTable::validate(n, t);
    IsoSignature sig = signature_of(cand);
    std::vector<int> orders = element_closure_orders(cand);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (sigs[i] == sig && isomorphic_impl(cand, reps[i], orders, rep_orders[i]))
        return false;  // seen this class; keep searching
    }
    reps.push_back(std::move(cand));
    sigs.push_back(std::move(sig));
    rep_orders.push_back(std::move(orders));
    return false;  // never stop early; we want every class
  });
  return reps;
}

CayleyTable search_order10_counterexample() {
  std::vector<CayleyTable> fives = enumerate_loops(5);
  const CayleyTable* K = nullptr;
  for (const CayleyTable& C : fives) {
    if (weak_lagrange(C).holds) continue;
    // every proper subloop must have order 1 or 2, so that the order-10
    // extension can keep the weak property (3 and 4 do not divide 10)
    bool orders_fit = true;
    for (const SubsetMask& S : all_subloops(C).subloops) {
      auto c = S.count();
      if (c != 5 && c > 2) {
        orders_fit = false;
        break;
      }
    }
    if (orders_fit) {
      K = &C;
      break;
    }
  }
  if (!K) throw SearchExhaustedError("no usable order-5 subloop candidate");

  const int n = 10;
  std::vector<Elem> t(std::size_t(n) * std::size_t(n), 0xFFFF);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      t[std::size_t(i) * std::size_t(n) + std::size_t(j)] =
          K->mul(static_cast<Elem>(i), static_cast<Elem>(j));
  for (int j = 5; j < n; ++j) t[std::size_t(j)] = static_cast<Elem>(j);
  for (int i = 5; i < n; ++i) t[std::size_t(i) * std::size_t(n)] = static_cast<Elem>(i);

  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < 5; ++i)
    for (int j = 5; j < n; ++j) cells.emplace_back(i, j);
  for (int i = 5; i < n; ++i)
    for (int j = 1; j < n; ++j) cells.emplace_back(i, j);
  std::vector<Elem> ascending;
  for (int v = 0; v < n; ++v) ascending.push_back(static_cast<Elem>(v));
  std::vector<std::vector<Elem>> prefs(cells.size(), ascending);

  CayleyTable result = cyclic_group(1);
  bool found = fill_cells(n, t, cells, prefs, [&] {
    CayleyTable cand = CayleyTable::validate(n, t);
    for (int c = 5; c < n; ++c)
      if (closure(cand, SubsetMask::single(static_cast<Elem>(c))).count() != std::size_t(n))
        return false;
    if (!weak_lagrange(cand).holds) return false;
    if (strong_lagrange(cand).holds) return false;
    result = std::move(cand);
    return true;
  });
  if (!found) throw SearchExhaustedError("no order-10 completion satisfies the constraints");
  return result;
}

CayleyTable random_loop(int order, std::uint64_t seed) {
  if (order < 1 || order > 16)
    throw BoundExceededError("random completion limited to order 16, got " +
                             std::to_string(order));
  if (order == 1) return cyclic_group(1);

  const int n = order;
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + std::uint64_t(order));
  std::vector<Elem> t(std::size_t(n) * std::size_t(n), 0xFFFF);
  for (int j = 0; j < n; ++j) t[std::size_t(j)] = static_cast<Elem>(j);
  for (int i = 1; i < n; ++i) t[std::size_t(i) * std::size_t(n)] = static_cast<Elem>(i);

  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) cells.emplace_back(i, j);
  std::vector<std::vector<Elem>> prefs;
  prefs.reserve(cells.size());
  std::vector<Elem> base;
  for (int v = 0; v < n; ++v) base.push_back(static_cast<Elem>(v));
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::vector<Elem> p = base;
    std::shuffle(p.begin(), p.end(), rng);
    prefs.push_back(std::move(p));
  }

  CayleyTable result = cyclic_group(1);
  bool found = fill_cells(n, t, cells, prefs, [&] {
    result = CayleyTable::validate(n, t);
    return true;
  });
  if (!found) throw SearchExhaustedError("random Latin completion failed");
  return result;
}

}  // namespace loopkit
