#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loopkit/cayley_table.hpp"
#include "loopkit/permutation.hpp"
#include "loopkit/subloops.hpp"
#include "loopkit/subset_mask.hpp"

namespace loopkit {

// Generators of the inner mapping group. All of them fix the identity:
//   T(x):   z -> x \ (z x)
//   L(x,y): z -> (x y) \ (x (y z))
//   R(x,y): z -> ((z x) y) / (x y)
struct InnerGeneratorRef {
  enum class Kind : std::uint8_t { T, L, R };
  Kind kind;
  Elem x = 0;
  Elem y = 0;  // unused for T
};

Elem apply_inner(const CayleyTable& L, const InnerGeneratorRef& g, Elem z);

// Generators are indexed 0 .. 2n^2+n-1 in a fixed order: T(0..n-1), then
// L(x,y) row-major in (x, y), then R(x,y) row-major.
std::size_t inner_generator_count(const CayleyTable& L);
InnerGeneratorRef inner_generator_at(const CayleyTable& L, std::size_t k);

// img[z] = image of z under g, for all z at once.
void inner_generator_images(const CayleyTable& L, const InnerGeneratorRef& g,
                            std::vector<Elem>& img);

// All generators as explicit permutations, in index order. Memory grows as
// n^3; meant for small orders and tests. Large-order callers stream via
// inner_generator_at / apply_inner instead.
struct InnerGenerators {
  std::vector<Permutation> maps;
};

InnerGenerators inner_generators(const CayleyTable& L);

// True iff every inner generator maps N into N. Invariance under the
// generators extends to the whole inner mapping group, so this is
// invariance under every inner mapping. Throws NotASubloopError.
bool is_normal(const CayleyTable& L, const SubsetMask& N, int threads = 1);

// Smallest normal subloop containing seed: the fixpoint of alternating
// product closure and inner-generator images. normal_closure of the empty
// set is {identity}.
SubsetMask normal_closure(const CayleyTable& L, const SubsetMask& seed);

// all_subloops filtered by is_normal; canonical order.
std::vector<SubsetMask> all_normal_subloops(const CayleyTable& L,
                                            const EnumerationLimits& limits = {},
                                            int threads = 1);

// The canonically least nontrivial proper normal subloop (smallest order,
// then canonical set order), or nullopt when none exists. Every minimal
// normal subloop is the normal closure of one of its elements, so the
// search needs only the n-1 singleton closures, not the full lattice.
std::optional<SubsetMask> minimal_normal_subloop(const CayleyTable& L);

// Coset partition and quotient loop by a normal subloop.
struct QuotientMap {
  std::vector<std::vector<Elem>> cosets;  // block index -> sorted members
  std::vector<Elem> block_of;             // element of L -> block index
  CayleyTable quotient;
};

// Throws NotASubloopError / NotNormalError. Blocks are ordered with the
// identity's coset first, then by smallest member; the quotient table is
// validated and the natural map checked to be a homomorphism on every
// pair before returning.
QuotientMap quotient(const CayleyTable& L, const SubsetMask& N);

// True iff |L| > 1 and normal_closure({x}) = L for every x other than the
// identity. Elements whose closure already came out full short-circuit
// later ones, which keeps the order-1080 case tractable.
bool is_simple(const CayleyTable& L, int threads = 1);

// nucleus: elements associating in all three positions with every pair.
// center: nucleus elements commuting with everything. Both are subloops.
SubsetMask nucleus(const CayleyTable& L, int threads = 1);
SubsetMask center(const CayleyTable& L, int threads = 1);

// Multiplication table of a subloop on its own elements, relabelled in
// increasing order. elems maps new index -> element of L.
struct SubloopTable {
  CayleyTable table;
  std::vector<Elem> elems;
};

SubloopTable subloop_table(const CayleyTable& L, const SubsetMask& S);

}  // namespace loopkit
