#include "loopkit/properties.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "loopkit/errors.hpp"
#include "loopkit/parallel.hpp"

namespace loopkit {

namespace {

// Parallel scan over the outer index x for the least violating tuple.
// per_x(x) returns the least tail (y[, z]) violating the law at that x, or
// nullopt. Violations order lexicographically, so a hit at x0 lets every
// worker skip all x > x0.
template <std::size_t Tail, typename PerX>
std::optional<std::array<Elem, Tail + 1>> least_scan(int n, int threads, PerX&& per_x) {
  std::atomic<int> bound{n};
  std::mutex mu;
  std::optional<std::array<Elem, Tail + 1>> best;
  detail::parallel_chunks(n, threads, [&](int lo, int hi) {
    for (int x = lo; x < hi; ++x) {
      if (x >= bound.load(std::memory_order_relaxed)) return;
      std::optional<std::array<Elem, Tail>> tail = per_x(x);
      if (!tail) continue;
      std::array<Elem, Tail + 1> cand;
      cand[0] = static_cast<Elem>(x);
      for (std::size_t i = 0; i < Tail; ++i) cand[i + 1] = (*tail)[i];
      std::lock_guard<std::mutex> g(mu);
      if (!best || cand < *best) best = cand;
      int b = bound.load();
      while (x < b && !bound.compare_exchange_weak(b, x)) {
      }
      return;  // later x in this chunk are all larger
    }
  });
  return best;
}

}  // namespace

TripleLaw is_associative(const CayleyTable& L, int threads) {
  const int n = L.order();
  auto w = least_scan<2>(n, threads, [&](int xi) -> std::optional<std::array<Elem, 2>> {
    const Elem* rx = L.row(static_cast<Elem>(xi));
    for (int y = 0; y < n; ++y) {
      const Elem* rt = L.row(rx[y]);
      const Elem* ry = L.row(static_cast<Elem>(y));
      for (int z = 0; z < n; ++z)
        if (rt[z] != rx[ry[z]])
          return std::array<Elem, 2>{static_cast<Elem>(y), static_cast<Elem>(z)};
    }
    return std::nullopt;
  });
  return w ? TripleLaw{false, w} : TripleLaw{};
}

PairLaw is_commutative(const CayleyTable& L, int threads) {
  const int n = L.order();
  auto w = least_scan<1>(n, threads, [&](int xi) -> std::optional<std::array<Elem, 1>> {
    const Elem* rx = L.row(static_cast<Elem>(xi));
    for (int y = xi + 1; y < n; ++y)
      if (rx[y] != L.mul(static_cast<Elem>(y), static_cast<Elem>(xi)))
        return std::array<Elem, 1>{static_cast<Elem>(y)};
    return std::nullopt;
  });
  return w ? PairLaw{false, w} : PairLaw{};
}

TripleLaw is_left_bol(const CayleyTable& L, int threads) {
  const int n = L.order();
  auto w = least_scan<2>(n, threads, [&](int xi) -> std::optional<std::array<Elem, 2>> {
    auto x = static_cast<Elem>(xi);
    const Elem* rx = L.row(x);
    for (int y = 0; y < n; ++y) {
      const Elem* ry = L.row(static_cast<Elem>(y));
      const Elem* rh = L.row(rx[ry[x]]);  // x(yx)
      for (int z = 0; z < n; ++z)
        if (rh[z] != rx[ry[rx[z]]])
          return std::array<Elem, 2>{static_cast<Elem>(y), static_cast<Elem>(z)};
    }
    return std::nullopt;
  });
  return w ? TripleLaw{false, w} : TripleLaw{};
}

TripleLaw is_right_bol(const CayleyTable& L, int threads) {
  const int n = L.order();
  auto w = least_scan<2>(n, threads, [&](int xi) -> std::optional<std::array<Elem, 2>> {
    auto x = static_cast<Elem>(xi);
    const Elem* rx = L.row(x);
    for (int y = 0; y < n; ++y) {
      const Elem* rxy = L.row(rx[y]);
      const Elem* ry = L.row(static_cast<Elem>(y));
      for (int z = 0; z < n; ++z)
        if (L.mul(rxy[z], static_cast<Elem>(y)) != rx[L.mul(ry[z], static_cast<Elem>(y))])
          return std::array<Elem, 2>{static_cast<Elem>(y), static_cast<Elem>(z)};
    }
    return std::nullopt;
  });
  return w ? TripleLaw{false, w} : TripleLaw{};
}

bool is_moufang(const CayleyTable& L, int threads) {
  return is_left_bol(L, threads).holds && is_right_bol(L, threads).holds;
}

AipResult has_aip(const CayleyTable& L) {
  const int n = L.order();
  std::vector<Elem> inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    auto i = L.two_sided_inverse(static_cast<Elem>(x));
    if (!i) {
      AipResult r;
      r.holds = false;
      r.missing_inverse = static_cast<Elem>(x);
      return r;
    }
    inv[static_cast<std::size_t>(x)] = *i;
  }
  for (int x = 0; x < n; ++x) {
    const Elem* rx = L.row(static_cast<Elem>(x));
    const Elem* ri = L.row(inv[static_cast<std::size_t>(x)]);
    for (int y = 0; y < n; ++y) {
      if (ri[inv[static_cast<std::size_t>(y)]] != inv[rx[y]]) {
        AipResult r;
        r.holds = false;
        r.witness = std::array<Elem, 2>{static_cast<Elem>(x), static_cast<Elem>(y)};
        return r;
      }
    }
  }
  return {};
}

bool is_bruck(const CayleyTable& L, int threads) {
  if (!has_aip(L).holds) return false;
  return is_left_bol(L, threads).holds || is_right_bol(L, threads).holds;
}

bool is_b_loop(const CayleyTable& L, int threads) {
  return L.order() % 2 == 1 && is_bruck(L, threads);
}

ALoopResult is_a_loop(const CayleyTable& L, int threads) {
  const int n = L.order();
  const auto count = static_cast<int>(inner_generator_count(L));
  std::atomic<int> bound{count};
  std::mutex mu;
  std::optional<std::tuple<int, Elem, Elem>> best;

  detail::parallel_chunks(count, threads, [&](int lo, int hi) {
    std::vector<Elem> img;
    for (int k = lo; k < hi; ++k) {
      if (k >= bound.load(std::memory_order_relaxed)) return;
      inner_generator_images(L, inner_generator_at(L, static_cast<std::size_t>(k)), img);
      bool ident = true;
      for (int z = 0; z < n; ++z) {
        if (img[static_cast<std::size_t>(z)] != z) {
          ident = false;
          break;
        }
      }
      if (ident) continue;

      bool hit = false;
      Elem wx = 0, wy = 0;
      for (int x = 0; x < n && !hit; ++x) {
        const Elem* rx = L.row(static_cast<Elem>(x));
        const Elem* rix = L.row(img[static_cast<std::size_t>(x)]);
        for (int y = 0; y < n; ++y) {
          if (img[rx[y]] != rix[img[static_cast<std::size_t>(y)]]) {
            hit = true;
            wx = static_cast<Elem>(x);
            wy = static_cast<Elem>(y);
            break;
          }
        }
      }
      if (!hit) continue;
      std::lock_guard<std::mutex> g(mu);
      std::tuple<int, Elem, Elem> cand{k, wx, wy};
      if (!best || cand < *best) best = cand;
      int b = bound.load();
      while (k < b && !bound.compare_exchange_weak(b, k)) {
      }
      return;
    }
  });

  if (!best) return {};
  ALoopResult r;
  r.holds = false;
  r.generator = inner_generator_at(L, static_cast<std::size_t>(std::get<0>(*best)));
  r.witness = std::array<Elem, 2>{std::get<1>(*best), std::get<2>(*best)};
  return r;
}

int element_order(const CayleyTable& L, Elem x) {
  return static_cast<int>(closure(L, SubsetMask::single(x)).count());
}

bool is_power_associative(const CayleyTable& L) {
  const int n = L.order();
  std::unordered_set<SubsetMask, SubsetMaskHash> checked;
  for (int x = 0; x < n; ++x) {
    SubsetMask S = closure(L, SubsetMask::single(static_cast<Elem>(x)));
    if (S.count() <= 2) continue;  // orders 1 and 2 are always associative
    if (!checked.insert(S).second) continue;
    if (!is_associative(subloop_table(L, S).table, 1).holds) return false;
  }
  return true;
}

long long exponent(const CayleyTable& L) {
  if (!is_power_associative(L))
    throw NotPowerAssociativeError("exponent: loop has an ambiguous power");
  long long ex = 1;
  for (int x = 0; x < L.order(); ++x)
    ex = std::lcm(ex, static_cast<long long>(element_order(L, static_cast<Elem>(x))));
  return ex;
}

SubsetMask derived_subloop(const CayleyTable& L) {
  const int n = L.order();
  SubsetMask devs;
  for (int x = 0; x < n; ++x) {
    const Elem* rx = L.row(static_cast<Elem>(x));
    for (int y = 0; y < n; ++y)
      devs.set(L.left_div(L.mul(static_cast<Elem>(y), static_cast<Elem>(x)), rx[y]));
  }
  for (int x = 0; x < n && devs.count() < static_cast<std::size_t>(n); ++x) {
    const Elem* rx = L.row(static_cast<Elem>(x));
    for (int y = 0; y < n; ++y) {
      const Elem* rt = L.row(rx[y]);  // (xy)·
      const Elem* ry = L.row(static_cast<Elem>(y));
      for (int z = 0; z < n; ++z) devs.set(L.left_div(rx[ry[z]], rt[z]));
    }
  }
  return normal_closure(L, devs);
}

std::vector<SubsetMask> derived_series(const CayleyTable& L) {
  const int n = L.order();
  SubsetMask cur = SubsetMask::full(n);
  std::vector<SubsetMask> series{cur};
  while (cur.count() > 1) {
    SubsetMask next;
    if (cur.count() == static_cast<std::size_t>(n)) {
      next = derived_subloop(L);
    } else {
      SubloopTable st = subloop_table(L, cur);
      for (Elem i : derived_subloop(st.table).elements()) next.set(st.elems[i]);
    }
    if (next == cur) break;
    series.push_back(next);
    cur = next;
  }
  return series;
}

Solvability is_solvable(const CayleyTable& L) {
  std::vector<SubsetMask> series = derived_series(L);
  Solvability s;
  s.solvable = series.back().count() == 1;
  s.derived_length = static_cast<int>(series.size()) - 1;
  return s;
}

std::vector<SubsetMask> upper_central_series(const CayleyTable& L) {
  const int n = L.order();
  std::vector<SubsetMask> series{SubsetMask::single(L.identity())};
  while (series.back().count() < static_cast<std::size_t>(n)) {
    QuotientMap qm = quotient(L, series.back());
    SubsetMask zq = center(qm.quotient, 1);
    SubsetMask next;
    for (int x = 0; x < n; ++x)
      if (zq.test(qm.block_of[static_cast<std::size_t>(x)])) next.set(static_cast<Elem>(x));
    if (next == series.back()) break;
    series.push_back(next);
  }
  return series;
}

Nilpotency is_nilpotent(const CayleyTable& L) {
  std::vector<SubsetMask> series = upper_central_series(L);
  Nilpotency r;
  r.nilpotent = series.back().count() == static_cast<std::size_t>(L.order());
  r.nilpotency_class = static_cast<int>(series.size()) - 1;
  return r;
}

std::optional<int> m_k_class(const CayleyTable& L, int threads) {
  if (!is_moufang(L, threads)) return std::nullopt;
  SubsetMask nuc = nucleus(L, threads);
  if (!is_normal(L, nuc, threads))
    throw NucleusNotNormalError("m_k_class: nucleus is not a normal subloop");
  return static_cast<int>(exponent(quotient(L, nuc).quotient) + 1);
}

bool is_central_bol(const CayleyTable& L, int threads) {
  if (!is_left_bol(L, threads).holds && !is_right_bol(L, threads).holds) return false;
  return derived_subloop(L).subset_of(center(L, threads));
}

bool is_nuclearly_nilpotent_class2(const CayleyTable& L, int threads) {
  SubsetMask nuc = nucleus(L, threads);
  if (!is_normal(L, nuc, threads))
    throw NucleusNotNormalError("nuclear class check: nucleus is not normal");
  return is_associative(quotient(L, nuc).quotient, threads).holds;
}

namespace {

std::string format_elems(const std::vector<Elem>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << '}';
  return out.str();
}

std::string format_mask(const SubsetMask& m) { return format_elems(m.elements()); }

std::string format_triple(const std::array<Elem, 3>& t) {
  std::ostringstream out;
  out << "x=" << t[0] << " y=" << t[1] << " z=" << t[2];
  return out.str();
}

std::string format_pair(const std::array<Elem, 2>& p) {
  std::ostringstream out;
  out << "x=" << p[0] << " y=" << p[1];
  return out.str();
}

std::string format_generator(const InnerGeneratorRef& g) {
  std::ostringstream out;
  switch (g.kind) {
    case InnerGeneratorRef::Kind::T:
      out << "T(" << g.x << ")";
      break;
    case InnerGeneratorRef::Kind::L:
      out << "L(" << g.x << "," << g.y << ")";
      break;
    case InnerGeneratorRef::Kind::R:
      out << "R(" << g.x << "," << g.y << ")";
      break;
  }
  return out.str();
}

std::string aip_reason(const AipResult& aip) {
  if (aip.missing_inverse) {
    return "no two-sided inverse for " + std::to_string(*aip.missing_inverse);
  }
  return format_pair(*aip.witness);
}

}  // namespace

PropertyReport full_report(const CayleyTable& L, const EnumerationLimits& limits,
                           int threads, bool with_lagrange) {
  const int n = L.order();
  PropertyReport r;
  r.order = n;
  auto witness = [&r](const std::string& flag, const std::string& text) {
    r.witnesses.emplace_back(flag, text);
  };

  TripleLaw assoc = is_associative(L, threads);
  r.associative = assoc.holds;
  if (!assoc.holds) witness("associative", format_triple(*assoc.witness));

  PairLaw comm = is_commutative(L, threads);
  r.commutative = comm.holds;
  if (!comm.holds) witness("commutative", format_pair(*comm.witness));

  TripleLaw lb = is_left_bol(L, threads);
  r.left_bol = lb.holds;
  if (!lb.holds) witness("leftBol", format_triple(*lb.witness));

  TripleLaw rb = is_right_bol(L, threads);
  r.right_bol = rb.holds;
  if (!rb.holds) witness("rightBol", format_triple(*rb.witness));

  r.moufang = lb.holds && rb.holds;
  if (!r.moufang) {
    witness("moufang", !lb.holds ? "leftBol " + format_triple(*lb.witness)
                                 : "rightBol " + format_triple(*rb.witness));
  }

  AipResult aip = has_aip(L);
  r.aip = aip.holds;
  if (!aip.holds) witness("aip", aip_reason(aip));

  r.bruck = (lb.holds || rb.holds) && aip.holds;
  if (!r.bruck) {
    witness("bruck", !aip.holds ? "aip " + aip_reason(aip)
                                : "leftBol " + format_triple(*lb.witness));
  }

  r.b_loop = r.bruck && n % 2 == 1;
  if (!r.b_loop) {
    witness("bLoop", r.bruck ? "order " + std::to_string(n) + " is even"
                             : "not a Bruck loop");
  }

  ALoopResult al = is_a_loop(L, threads);
  r.a_loop = al.holds;
  if (!al.holds)
    witness("aLoop", format_generator(*al.generator) + " at " + format_pair(*al.witness));

  r.power_associative = is_power_associative(L);
  if (r.power_associative) {
    long long ex = 1;
    for (int x = 0; x < n; ++x)
      ex = std::lcm(ex, static_cast<long long>(element_order(L, static_cast<Elem>(x))));
    r.exponent = ex;
  } else {
    for (int x = 0; x < n; ++x) {
      SubsetMask S = closure(L, SubsetMask::single(static_cast<Elem>(x)));
      if (!is_associative(subloop_table(L, S).table, 1).holds) {
        witness("powerAssociative", "x=" + std::to_string(x));
        break;
      }
    }
  }

  r.simple = is_simple(L, threads);
  if (!r.simple) {
    if (auto N = minimal_normal_subloop(L)) {
      witness("simple", "N=" + format_mask(*N));
    } else {
      witness("simple", "trivial loop");
    }
  }

  Solvability sol = is_solvable(L);
  r.solvable = sol.solvable;
  if (sol.solvable) {
    r.derived_length = sol.derived_length;
  } else {
    witness("solvable", "series stalls at " + format_mask(derived_series(L).back()));
  }

  Nilpotency nil = is_nilpotent(L);
  r.nilpotent = nil.nilpotent;
  if (nil.nilpotent) {
    r.nilpotency_class = nil.nilpotency_class;
  } else {
    witness("nilpotent", "series stalls at " + format_mask(upper_central_series(L).back()));
  }

  if (r.moufang) r.m_k = m_k_class(L, threads);

  if (with_lagrange) {
    WeakLagrange wl = weak_lagrange(L, limits, threads);
    r.weak_lagrange = wl.holds;
    if (!wl.holds) witness("weakLagrange", "H=" + format_mask(*wl.witness));

    StrongLagrange sl = strong_lagrange(L, limits, threads);
    r.strong_lagrange = sl.holds;
    if (!sl.holds)
      witness("strongLagrange",
              "K=" + format_mask(sl.witness->first) + " H=" + format_mask(sl.witness->second));
  }

  return r;
}

}  // namespace loopkit
