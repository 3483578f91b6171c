#pragma once

#include <cstdint>
#include <vector>

#include "loopkit/cayley_table.hpp"
#include "loopkit/gf.hpp"

namespace loopkit {

// q^3(q^4-1) for even q, q^3(q^4-1)/2 for odd q.
long long paige_order(int q);

// The loop of norm-1 Zorn matrices over GF(q) modulo {I, -I}. Classes are
// canonicalized by the lexicographically smaller of the two coordinate
// tuples (a, b, alpha, beta), ordered with the identity class first and
// the rest ascending, so the table is byte-identical across runs.
//
// The q = 2 table additionally self-checks Moufang, simplicity, and
// nonassociativity/noncommutativity after construction; larger orders
// verify the Latin/identity structure here and leave the cubic-time
// identity checks to callers. Throws UnsupportedOrderError, CapacityError,
// OracleFailureError.
CayleyTable paige_loop(int q);

// Brute-force count of norm-1 Zorn matrices over GF(q) (no {M,-M}
// identification); scans all q^8 coordinate tuples.
long long count_norm_one_matrices(int q);

CayleyTable cyclic_group(int n);

// Componentwise product on pairs; (i, j) is encoded as i*|b| + j.
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

// M(G, 2): order 2|G| on G u Gu with
//   g h = gh, g (hu) = (hg)u, (gu) h = (g h^-1)u, (gu)(hu) = h^-1 g.
// Always Moufang; nonassociative exactly when G is nonabelian. Throws
// NotAGroupError when G is not associative.
CayleyTable chein_double(const CayleyTable& G);

// One representative per isomorphism class, for n <= 6 (throws
// BoundExceededError above that). Backtracks over tables with the identity
// fixed as element 0, in lexicographic row-major order, filtering each
// completed table against the representatives found so far.
std::vector<CayleyTable> enumerate_loops(int n);

// Brute-force isomorphism test for orders <= 10 (BoundExceededError
// above): backtracking over identity-fixing bijections with element-order
// pruning.
bool are_isomorphic(const CayleyTable& a, const CayleyTable& b);

// Smallest-lexicographic order-10 loop containing a weak-Lagrange-failing
// order-5 subloop K on {0..4} such that every proper subloop lies inside
// K. The result satisfies the weak Lagrange property but not the strong
// one. Throws SearchExhaustedError if no completion works (cannot happen;
// it would signal a bug in the search).
CayleyTable search_order10_counterexample();

// Seeded random loop of the given order via randomized Latin-square
// completion with backtracking; identity is element 0. Deterministic for a
// fixed (order, seed). Test-corpus builder.
CayleyTable random_loop(int order, std::uint64_t seed);

}  // namespace loopkit
