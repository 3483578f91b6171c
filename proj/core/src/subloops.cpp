#include "loopkit/subloops.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_set>

#include "loopkit/parallel.hpp"

namespace loopkit {

// Core closure loop: members[0..start) are pairwise closed already; every
// ordered pair gets multiplied once, when its later member is reached.
void close_in_place(const CayleyTable& L, SubsetMask& mask, std::vector<Elem>& members,
                    std::size_t start) {
  for (std::size_t i = start; i < members.size(); ++i) {
    Elem z = members[i];
    const Elem* rz = L.row(z);
    for (std::size_t j = 0; j <= i; ++j) {
      Elem m = members[j];
      Elem p = rz[m];
      if (!mask.test(p)) {
        mask.set(p);
        members.push_back(p);
      }
      p = L.mul(m, z);
      if (!mask.test(p)) {
        mask.set(p);
        members.push_back(p);
      }
    }
  }
}

SubsetMask closure(const CayleyTable& L, const SubsetMask& gens) {
  SubsetMask mask = gens;
  mask.set(L.identity());
  std::vector<Elem> members = mask.elements();
  members.reserve(static_cast<std::size_t>(L.order()));
  close_in_place(L, mask, members, 0);
  return mask;
}

SubsetMask closure_extend(const CayleyTable& L, SubsetMask mask, std::vector<Elem> members,
                          const std::vector<Elem>& extra) {
  std::size_t start = members.size();
  for (Elem x : extra) {
    if (!mask.test(x)) {
      mask.set(x);
      members.push_back(x);
    }
  }
  members.reserve(static_cast<std::size_t>(L.order()));
  close_in_place(L, mask, members, start);
  return mask;
}

bool is_subloop(const CayleyTable& L, const SubsetMask& mask) {
  if (!mask.test(L.identity())) return false;
  std::vector<Elem> members = mask.elements();
  if (!members.empty() && members.back() >= L.order()) return false;
  for (Elem a : members) {
    const Elem* ra = L.row(a);
    for (Elem b : members)
      if (!mask.test(ra[b])) return false;
  }
  return true;
}

std::vector<SubsetMask> enumerate_subloops(
    const CayleyTable& L, const EnumerationLimits& limits, int threads,
    const std::vector<SubsetMask>* checkpoint_seed,
    const std::function<void(const std::vector<SubsetMask>&)>* checkpoint_sink) {
  const int n = L.order();
  const SubsetMask full = SubsetMask::full(n);

  std::unordered_set<SubsetMask, SubsetMaskHash> found;
  std::deque<SubsetMask> queue;  // proper subloops pending extension

  auto admit = [&](const SubsetMask& s) {
    if (found.insert(s).second) {
      if (found.size() > limits.max_subloops)
        throw CapacityError("subloop count exceeded cap " + std::to_string(limits.max_subloops));
      if (s != full) {
        queue.push_back(s);
        if (queue.size() > limits.max_queue)
          throw CapacityError("work queue exceeded cap " + std::to_string(limits.max_queue));
      }
    }
  };

  admit(full);
  for (int x = 0; x < n; ++x) admit(closure(L, SubsetMask::single(x)));
  if (checkpoint_seed)
    for (const SubsetMask& s : *checkpoint_seed) {
      if (!is_subloop(L, s))
        throw NotASubloopError("checkpoint entry is not a subloop of this table");
      admit(s);
    }

  std::size_t processed_since_checkpoint = 0;
  std::mutex merge_mutex;

  while (!queue.empty()) {
    // One generation: extend everything pending, then merge. `found` is
    // read-only during the parallel phase, so lookups need no lock.
    std::vector<SubsetMask> work(queue.begin(), queue.end());
    queue.clear();

    std::vector<SubsetMask> produced;
    detail::parallel_chunks(static_cast<int>(work.size()), threads, [&](int lo, int hi) {
      std::vector<SubsetMask> local;
      for (int k = lo; k < hi; ++k) {
        const SubsetMask& H = work[static_cast<std::size_t>(k)];
        std::vector<Elem> members = H.elements();
        std::vector<Elem> one(1);
        for (int x = 0; x < n; ++x) {
          if (H.test(x)) continue;
          one[0] = static_cast<Elem>(x);
          SubsetMask S = closure_extend(L, H, members, one);
          if (!found.count(S)) local.push_back(S);
        }
      }
      std::lock_guard<std::mutex> g(merge_mutex);
      produced.insert(produced.end(), local.begin(), local.end());
    });

    for (const SubsetMask& s : produced) admit(s);

    processed_since_checkpoint += work.size();
    if (checkpoint_sink && processed_since_checkpoint >= 64) {
      processed_since_checkpoint = 0;
      std::vector<SubsetMask> snapshot(found.begin(), found.end());
      std::sort(snapshot.begin(), snapshot.end(), canonical_less);
      (*checkpoint_sink)(snapshot);
    }
  }

  std::vector<SubsetMask> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), canonical_less);
  if (checkpoint_sink) (*checkpoint_sink)(out);
  return out;
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> containment_pairs(
    const std::vector<SubsetMask>& sorted) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<int> counts(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) counts[i] = sorted[i].count();
  for (std::size_t j = 0; j < sorted.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (counts[i] < counts[j] && sorted[i].subset_of(sorted[j]))
        edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  return edges;
}

}  // namespace

SubloopLattice all_subloops(const CayleyTable& L, const EnumerationLimits& limits,
                            int threads) {
  SubloopLattice lat;
  lat.subloops = enumerate_subloops(L, limits, threads);
  lat.containment = containment_pairs(lat.subloops);
  return lat;
}

SubloopLattice brute_force_subloops(const CayleyTable& L, int oracle_bound) {
  const int n = L.order();
  if (n > oracle_bound || n > 20)
    throw OracleBoundError("order " + std::to_string(n) + " exceeds oracle bound " +
                           std::to_string(std::min(oracle_bound, 20)));
  const std::uint32_t e_bit = 1u << L.identity();
  SubloopLattice lat;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    if (!(u & e_bit)) continue;
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (!(u >> i & 1)) continue;
      for (int j = 0; j < n && closed; ++j) {
        if (!(u >> j & 1)) continue;
        closed = (u >> L.mul(static_cast<Elem>(i), static_cast<Elem>(j))) & 1;
      }
    }
    if (!closed) continue;
    SubsetMask m;
    for (int i = 0; i < n; ++i)
      if (u >> i & 1) m.set(i);
    lat.subloops.push_back(m);
  }
  std::sort(lat.subloops.begin(), lat.subloops.end(), canonical_less);
  // containment recomputed directly; this function is the oracle
  std::vector<int> counts(lat.subloops.size());
  for (std::size_t i = 0; i < lat.subloops.size(); ++i) counts[i] = lat.subloops[i].count();
  for (std::size_t j = 0; j < lat.subloops.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (counts[i] >= counts[j]) continue;
      bool inside = true;
      for (int w = 0; w < SubsetMask::kWords && inside; ++w)
        inside = !(lat.subloops[i].words[w] & ~lat.subloops[j].words[w]);
      if (inside)
        lat.containment.emplace_back(static_cast<std::uint32_t>(i),
                                     static_cast<std::uint32_t>(j));
    }
  return lat;
}

WeakLagrange weak_lagrange(const CayleyTable& L, const EnumerationLimits& limits,
                           int threads) {
  std::vector<SubsetMask> subs = enumerate_subloops(L, limits, threads);
  const int n = L.order();
  for (const SubsetMask& s : subs) {
    if (n % s.count() != 0) return WeakLagrange{false, s};  // canonically least violator
  }
  return WeakLagrange{true, std::nullopt};
}

StrongLagrange strong_lagrange(const CayleyTable& L, const EnumerationLimits& limits,
                               int threads) {
  SubloopLattice lat = all_subloops(L, limits, threads);
  std::vector<int> counts(lat.subloops.size());
  for (std::size_t i = 0; i < lat.subloops.size(); ++i) counts[i] = lat.subloops[i].count();
  bool have = false;
  std::pair<std::uint32_t, std::uint32_t> best{0, 0};
  for (const auto& [i, j] : lat.containment) {
    if (counts[j] % counts[i] == 0) continue;
    if (!have || std::pair(i, j) < best) {
      best = {i, j};
      have = true;
    }
  }
  if (!have) return StrongLagrange{true, std::nullopt};
  return StrongLagrange{false,
                        std::pair(lat.subloops[best.first], lat.subloops[best.second])};
}

}  // namespace loopkit
