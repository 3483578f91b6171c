#include "loopkit/cayley_table.hpp"

#include <istream>
#include <sstream>
#include <string>

namespace loopkit {

CayleyTable CayleyTable::validate(int n, std::vector<Elem> entries) {
  if (n <= 0) throw NotLatinError("order must be positive, got " + std::to_string(n));
  if (n > kMaxOrder)
    throw CapacityError("order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxOrder));
  if (entries.size() != std::size_t(n) * std::size_t(n))
    throw NotLatinError("table has " + std::to_string(entries.size()) +
                        " entries, expected " + std::to_string(n) + "x" + std::to_string(n));

  CayleyTable L;
  L.n_ = n;
  L.table_ = std::move(entries);
  L.ldiv_.assign(L.table_.size(), 0);
  L.rdiv_.assign(L.table_.size(), 0);

  std::vector<bool> seen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    const Elem* r = L.table_.data() + std::size_t(i) * std::size_t(n);
    for (int j = 0; j < n; ++j) {
      Elem v = r[j];
      if (v >= n)
        throw NotLatinError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") = " + std::to_string(v) + " out of range");
      if (seen[v])
        throw NotLatinError("row " + std::to_string(i) + " repeats value " + std::to_string(v));
      seen[v] = true;
      // i * ldiv[i][i*j] == i*j, i.e. ldiv[i][v] = j
      L.ldiv_[std::size_t(i) * std::size_t(n) + v] = static_cast<Elem>(j);
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (int i = 0; i < n; ++i) {
      Elem v = L.table_[std::size_t(i) * std::size_t(n) + j];
      if (seen[v])
        throw NotLatinError("column " + std::to_string(j) + " repeats value " +
                            std::to_string(v));
      seen[v] = true;
      // rdiv[j][i*j] = i
      L.rdiv_[std::size_t(j) * std::size_t(n) + v] = static_cast<Elem>(i);
    }
  }

  // two-sided identity: row e and column e are both the identity map
  int found = -1;
  for (int e = 0; e < n; ++e) {
    const Elem* r = L.table_.data() + std::size_t(e) * std::size_t(n);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = r[j] == j;
    for (int i = 0; i < n && ok; ++i) ok = L.table_[std::size_t(i) * std::size_t(n) + e] == i;
    if (ok) {
      found = e;
      break;
    }
  }
  if (found < 0) throw NoIdentityError("no two-sided identity element");
  L.identity_ = static_cast<Elem>(found);
  return L;
}

std::optional<Elem> CayleyTable::two_sided_inverse(Elem x) const {
  Elem y = left_div(x, identity_);  // x*y == e
  if (mul(y, x) != identity_) return std::nullopt;
  return y;
}

Permutation CayleyTable::left_translation(Elem x) const {
  Permutation p;
  p.img.assign(row(x), row(x) + n_);
  return p;
}

Permutation CayleyTable::right_translation(Elem x) const {
  Permutation p;
  p.img.resize(static_cast<std::size_t>(n_));
  for (int z = 0; z < n_; ++z) p.img[static_cast<std::size_t>(z)] = mul(static_cast<Elem>(z), x);
  return p;
}

NormalizedTable normalize_identity(const CayleyTable& L) {
  int n = L.order();
  Permutation phi = Permutation::identity(n);
  if (L.identity() != 0) {
    phi.img[0] = L.identity();
    phi.img[L.identity()] = 0;
  }
  std::vector<Elem> t(std::size_t(n) * std::size_t(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[std::size_t(phi(static_cast<Elem>(i))) * std::size_t(n) + phi(static_cast<Elem>(j))] =
          phi(L.mul(static_cast<Elem>(i), static_cast<Elem>(j)));
  return NormalizedTable{CayleyTable::validate(n, std::move(t)), std::move(phi)};
}

namespace {

// Strips comment/blank lines, then tokenizes the rest.
std::vector<long> tokenize_tbl(std::istream& in) {
  std::vector<long> tokens;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        tokens.push_back(v);
      } catch (const std::exception&) {
        throw SyntaxError("not an integer: '" + tok + "'");
      }
    }
  }
  return tokens;
}

}  // namespace

CayleyTable parse_table(std::istream& in) {
  std::vector<long> tokens = tokenize_tbl(in);
  if (tokens.empty()) throw SyntaxError("empty input");
  long n = tokens[0];
  if (n <= 0) throw SyntaxError("order must be positive, got " + std::to_string(n));
  if (n > kMaxOrder)
    throw CapacityError("order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxOrder));
  std::size_t need = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (tokens.size() != need + 1)
    throw SyntaxError("expected " + std::to_string(need) + " entries, got " +
                      std::to_string(tokens.size() - 1));
  std::vector<Elem> entries(need);
  for (std::size_t k = 0; k < need; ++k) {
    long v = tokens[k + 1];
    if (v < 0 || v >= n)
      throw SyntaxError("entry " + std::to_string(v) + " out of range [0, " +
                        std::to_string(n) + ")");
    entries[k] = static_cast<Elem>(v);
  }
  CayleyTable L = CayleyTable::validate(static_cast<int>(n), std::move(entries));
  if (L.identity() != 0) return normalize_identity(L).table;
  return L;
}

CayleyTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

std::string serialize_table(const CayleyTable& L) {
  const CayleyTable* p = &L;
  std::optional<NormalizedTable> norm;
  if (L.identity() != 0) {
    norm = normalize_identity(L);
    p = &norm->table;
  }
  std::ostringstream out;
  int n = p->order();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    const Elem* r = p->row(static_cast<Elem>(i));
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << r[j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace loopkit
