#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "loopkit/errors.hpp"
#include "loopkit/permutation.hpp"
#include "loopkit/subset_mask.hpp"

namespace loopkit {

// A finite loop given by its multiplication table: an n x n Latin square
// with a two-sided identity. Immutable once validated; division tables are
// precomputed so mul/left_div/right_div are O(1) lookups.
//
// Tables are stored row-major as flat arrays of 16-bit indices
// (1080^2 entries ~ 2.3 MB).
class CayleyTable {
public:
  // Checks the Latin property and locates the two-sided identity.
  // Throws NotLatinError / NoIdentityError / CapacityError.
  static CayleyTable validate(int n, std::vector<Elem> entries);

  int order() const { return n_; }
  Elem identity() const { return identity_; }

  Elem mul(Elem x, Elem y) const { return table_[std::size_t(x) * std::size_t(n_) + y]; }
  // unique z with x*z == y
  Elem left_div(Elem x, Elem y) const { return ldiv_[std::size_t(x) * std::size_t(n_) + y]; }
  // unique z with z*x == y
  Elem right_div(Elem x, Elem y) const { return rdiv_[std::size_t(x) * std::size_t(n_) + y]; }

  const Elem* row(Elem x) const { return table_.data() + std::size_t(x) * std::size_t(n_); }
  const Elem* ldiv_row(Elem x) const { return ldiv_.data() + std::size_t(x) * std::size_t(n_); }
  const Elem* rdiv_row(Elem x) const { return rdiv_.data() + std::size_t(x) * std::size_t(n_); }

  // y with x*y == y*x == identity, if one exists.
  std::optional<Elem> two_sided_inverse(Elem x) const;

  Permutation left_translation(Elem x) const;   // z -> x*z
  Permutation right_translation(Elem x) const;  // z -> z*x

  const std::vector<Elem>& entries() const { return table_; }

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

private:
  CayleyTable() = default;

  int n_ = 0;
  Elem identity_ = 0;
  std::vector<Elem> table_, ldiv_, rdiv_;
};

struct NormalizedTable {
  CayleyTable table;
  Permutation relabeling;  // old index -> new index
};

// Relabels via the transposition (0 identity) so the identity is element 0.
NormalizedTable normalize_identity(const CayleyTable& L);

// `.tbl` format: '#' comment lines and blank lines are skipped; first
// remaining token is the order n, followed by n*n entries in [0, n),
// row-major (entry j of row i is i*j). Any identity position is accepted;
// the parsed table is normalized so the identity is element 0.
CayleyTable parse_table(std::istream& in);
CayleyTable parse_table(const std::string& text);

// Inverse of parse_table on normalized tables; normalizes first if needed,
// so parse_table(serialize_table(L)) == normalize_identity(L).table.
std::string serialize_table(const CayleyTable& L);

}  // namespace loopkit
