#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/cayley_table.hpp"
#include "loopkit/normal.hpp"
#include "loopkit/subloops.hpp"
#include "loopkit/subset_mask.hpp"

namespace loopkit {

// Exhaustive identity checks return the lexicographically least violating
// tuple, which keeps results stable under any thread count.
struct TripleLaw {
  bool holds = true;
  std::optional<std::array<Elem, 3>> witness;
};

struct PairLaw {
  bool holds = true;
  std::optional<std::array<Elem, 2>> witness;
};

// (xy)z = x(yz) over all triples.
TripleLaw is_associative(const CayleyTable& L, int threads = 1);

// xy = yx over all pairs; witness has x < y.
PairLaw is_commutative(const CayleyTable& L, int threads = 1);

// (x(yx))z = x(y(xz)) over all triples.
TripleLaw is_left_bol(const CayleyTable& L, int threads = 1);

// ((xy)z)y = x((yz)y) over all triples.
TripleLaw is_right_bol(const CayleyTable& L, int threads = 1);

// Moufang loops are exactly the loops that are both left and right Bol.
bool is_moufang(const CayleyTable& L, int threads = 1);

// x⁻¹y⁻¹ = (xy)⁻¹ over all pairs. Fails with missing_inverse set when some
// element has no two-sided inverse at all.
struct AipResult {
  bool holds = true;
  std::optional<Elem> missing_inverse;
  std::optional<std::array<Elem, 2>> witness;
};

AipResult has_aip(const CayleyTable& L);

// Bruck: (left or right) Bol with the automorphic inverse property.
bool is_bruck(const CayleyTable& L, int threads = 1);

// B-loop: Bruck of odd order.
bool is_b_loop(const CayleyTable& L, int threads = 1);

// A-loop: every inner mapping is an automorphism. Checking the generators
// suffices, since automorphisms are closed under composition and inverse.
struct ALoopResult {
  bool holds = true;
  std::optional<InnerGeneratorRef> generator;       // first offender
  std::optional<std::array<Elem, 2>> witness;       // pair it fails on
};

ALoopResult is_a_loop(const CayleyTable& L, int threads = 1);

// |closure({x})|; well-defined with or without power-associativity.
int element_order(const CayleyTable& L, Elem x);

// True iff closure({x}) is an associative (hence cyclic) subloop for
// every x.
bool is_power_associative(const CayleyTable& L);

// lcm of all element orders. Throws NotPowerAssociativeError when powers
// are ambiguous.
long long exponent(const CayleyTable& L);

// Smallest normal subloop with an abelian group quotient: the normal
// closure of all commutator deviations (xy = (yx)·c) and associator
// deviations ((xy)z = (x(yz))·a).
SubsetMask derived_subloop(const CayleyTable& L);

// [L, L', L'', ...] until stable.
std::vector<SubsetMask> derived_series(const CayleyTable& L);

struct Solvability {
  bool solvable = false;
  int derived_length = 0;  // steps to reach {e}; meaningful when solvable
};

Solvability is_solvable(const CayleyTable& L);

// [Z_0 = {e}, Z_1, ...] where Z_{i+1} is the preimage of center(L/Z_i);
// stops when the series stalls or reaches L.
std::vector<SubsetMask> upper_central_series(const CayleyTable& L);

struct Nilpotency {
  bool nilpotent = false;
  int nilpotency_class = 0;  // meaningful when nilpotent
};

Nilpotency is_nilpotent(const CayleyTable& L);

// k with exponent(L/Nuc(L)) = k-1 for Moufang L; nullopt for non-Moufang
// input. Throws NucleusNotNormalError if the nucleus fails the normality
// check (it never does for Moufang loops, but the check is kept).
std::optional<int> m_k_class(const CayleyTable& L, int threads = 1);

// Bol loop whose derived subloop lies inside the center.
bool is_central_bol(const CayleyTable& L, int threads = 1);

// L/Nuc(L) is a group. Throws NucleusNotNormalError.
bool is_nuclearly_nilpotent_class2(const CayleyTable& L, int threads = 1);

// Flat summary of every predicate over one loop. Witness strings are
// preformatted, one per failed flag that has a finite witness.
struct PropertyReport {
  int order = 0;
  bool associative = false;
  bool commutative = false;
  bool left_bol = false;
  bool right_bol = false;
  bool moufang = false;
  bool aip = false;
  bool bruck = false;
  bool b_loop = false;
  bool a_loop = false;
  bool power_associative = false;
  bool simple = false;
  bool solvable = false;
  bool nilpotent = false;
  std::optional<bool> weak_lagrange;    // unset when Lagrange checks skipped
  std::optional<bool> strong_lagrange;
  std::optional<int> nilpotency_class;  // set when nilpotent
  std::optional<int> derived_length;    // set when solvable
  std::optional<long long> exponent;    // set when power-associative
  std::optional<int> m_k;               // set when Moufang
  std::vector<std::pair<std::string, std::string>> witnesses;
};

PropertyReport full_report(const CayleyTable& L, const EnumerationLimits& limits = {},
                           int threads = 1, bool with_lagrange = true);

}  // namespace loopkit
