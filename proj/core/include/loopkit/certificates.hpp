#pragma once

#include <string>
#include <vector>

#include "loopkit/cayley_table.hpp"
#include "loopkit/subloops.hpp"
#include "loopkit/subset_mask.hpp"

namespace loopkit {

enum class LagrangeKind { Weak, Strong };

// Proof tree for a Lagrange-property decision. Three node shapes:
//
//   SimpleLeaf      the loop is simple (or trivial); conclusion comes from
//                   the direct lattice check and is re-verifiable from the
//                   table alone.
//   Decompose       a nontrivial proper normal subloop N was found; the two
//                   children certify N and L/N. Such a node always concludes
//                   holds, because the property lifts from N and L/N to L,
//                   and the lift is only valid in that direction.
//   DirectFallback  a decomposition existed but at least one child failed,
//                   which says nothing about L itself; the conclusion is the
//                   direct lattice check on L.
//
// Failing leaves carry the offending subloops: {H} for the weak property
// (|H| does not divide |L|), {K, H} for the strong one (K inside H with
// |K| not dividing |H|).
struct Certificate {
  enum class Node { SimpleLeaf, Decompose, DirectFallback };

  LagrangeKind kind = LagrangeKind::Weak;
  Node node = Node::SimpleLeaf;
  int order = 0;
  bool holds = true;
  std::vector<SubsetMask> witness;    // empty when holds
  SubsetMask normal;                  // Decompose only: N as elements of this loop
  std::vector<Certificate> children;  // Decompose only: {sub, quot}
};

// Recursive decision procedure. Simple and trivial loops become leaves with
// the direct check. Otherwise the canonical minimal nontrivial proper normal
// subloop N (fewest elements, ties by smallest members) splits the problem
// into N and L/N; if both branches hold so does L, and if either fails the
// node degrades to a direct lattice check. The conclusion therefore always
// equals the direct check. CapacityError propagates from the lattice runs.
Certificate decide_weak(const CayleyTable& L, const EnumerationLimits& limits = {},
                        int threads = 1);
Certificate decide_strong(const CayleyTable& L, const EnumerationLimits& limits = {},
                          int threads = 1);

// Independent audit of a certificate against the table it was issued for.
// Re-checks every node: simplicity claims, normality of each N, validity of
// each quotient, leaf conclusions by direct enumeration, and the combination
// rule at each Decompose node. Returns true when everything checks out and
// throws InvalidCertificateError naming the failing node path (for example
// "root.quot.sub") otherwise.
bool verify_certificate(const CayleyTable& L, const Certificate& c,
                        const EnumerationLimits& limits = {}, int threads = 1);

// Indented-tree text form, one node per line:
//   weak Decompose order=6 N={0,3} conclusion=holds
//     weak SimpleLeaf order=2 conclusion=holds
//     weak SimpleLeaf order=3 conclusion=holds
// Children are indented two spaces, subloop branch first. Failing nodes
// append witness=H={...} (weak) or witness=K={...} H={...} (strong).
// parse_certificate inverts serialize_certificate exactly and throws
// SyntaxError on malformed input.
std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

}  // namespace loopkit
