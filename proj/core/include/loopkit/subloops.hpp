#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "loopkit/cayley_table.hpp"
#include "loopkit/subset_mask.hpp"

namespace loopkit {

struct EnumerationLimits {
  std::size_t max_subloops = 1'000'000;
  std::size_t max_queue = 8'000'000;
  int oracle_bound = 12;
};

// Smallest product-closed subset containing gens and the identity. In a
// finite loop a nonempty product-closed subset is division-closed as well,
// so the result is a subloop.
SubsetMask closure(const CayleyTable& L, const SubsetMask& gens);

// Grows mask/members to their product closure, assuming the members before
// `start` are already pairwise closed. Each ordered pair is multiplied
// exactly once. Building block for closure, closure_extend, and the
// normal-closure fixpoint.
void close_in_place(const CayleyTable& L, SubsetMask& mask, std::vector<Elem>& members,
                    std::size_t start);

// Subloop generated by base (already closed, with member list) plus the
// extra elements; only products involving a new element are recomputed.
SubsetMask closure_extend(const CayleyTable& L, SubsetMask mask,
                          std::vector<Elem> members,
                          const std::vector<Elem>& extra);

bool is_subloop(const CayleyTable& L, const SubsetMask& mask);

struct SubloopLattice {
  std::vector<SubsetMask> subloops;  // canonical order: (order, lex elements)
  // (i, j) with subloops[i] a proper subset of subloops[j]; i < j always.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> containment;
};

// Every subloop, canonically sorted, without the containment relation.
// Seeds with the cyclic closures and extends each found proper subloop by
// each outside element to a fixpoint. Deterministic regardless of thread
// count. Throws CapacityError when limits.max_subloops is exceeded.
//
// checkpoint_sink, if set, is called periodically with the masks found so
// far; checkpoint_seed masks are injected as already-found subloops (they
// are re-extended, so a truncated checkpoint stays correct).
std::vector<SubsetMask> enumerate_subloops(
    const CayleyTable& L, const EnumerationLimits& limits = {}, int threads = 1,
    const std::vector<SubsetMask>* checkpoint_seed = nullptr,
    const std::function<void(const std::vector<SubsetMask>&)>* checkpoint_sink = nullptr);

SubloopLattice all_subloops(const CayleyTable& L, const EnumerationLimits& limits = {},
                            int threads = 1);

// Independent test oracle: scans all 2^n subsets containing the identity
// and keeps the product-closed ones. Throws OracleBoundError for
// n > oracle_bound.
SubloopLattice brute_force_subloops(const CayleyTable& L, int oracle_bound = 12);

struct WeakLagrange {
  bool holds = false;
  std::optional<SubsetMask> witness;  // subloop whose order does not divide |L|
};

struct StrongLagrange {
  bool holds = false;
  // (K, H): K subset of H with |K| not dividing |H|
  std::optional<std::pair<SubsetMask, SubsetMask>> witness;
};

WeakLagrange weak_lagrange(const CayleyTable& L, const EnumerationLimits& limits = {},
                           int threads = 1);
StrongLagrange strong_lagrange(const CayleyTable& L, const EnumerationLimits& limits = {},
                               int threads = 1);

}  // namespace loopkit
