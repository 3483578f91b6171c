#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace loopkit {

// Arithmetic tables for one GF(q), q in {2, 3, 4, 5, 7, 8, 9}. Elements
// are indices 0..q-1 with 0 and 1 the additive and multiplicative
// identities. Prime q uses integer residues. Prime powers q = p^k encode a
// polynomial over GF(p) as its coefficient digits in base p (index =
// sum c_i p^i), reduced by a fixed irreducible:
//   GF(4): x^2 + x + 1     GF(8): x^3 + x + 1     GF(9): x^2 + 1
class GaloisField {
public:
  using Fe = std::uint8_t;

  explicit GaloisField(int q);  // throws UnsupportedOrderError

  int order() const { return q_; }
  int characteristic() const { return p_; }

  Fe add(Fe a, Fe b) const { return add_[idx(a, b)]; }
  Fe mul(Fe a, Fe b) const { return mul_[idx(a, b)]; }
  Fe neg(Fe a) const { return neg_[a]; }
  Fe sub(Fe a, Fe b) const { return add_[idx(a, neg_[b])]; }
  Fe inv(Fe a) const { return inv_[a]; }  // a must be nonzero

  std::vector<Fe> elements() const;

private:
  std::size_t idx(Fe a, Fe b) const {
    return std::size_t(a) * std::size_t(q_) + std::size_t(b);
  }

  int q_ = 0;
  int p_ = 0;
  std::vector<Fe> add_, mul_, neg_, inv_;
};

struct Vec3 {
  std::array<GaloisField::Fe, 3> c{0, 0, 0};
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

Vec3 vec_add(const GaloisField& F, const Vec3& u, const Vec3& v);
Vec3 vec_neg(const GaloisField& F, const Vec3& u);
Vec3 vec_scale(const GaloisField& F, GaloisField::Fe s, const Vec3& u);
GaloisField::Fe dot(const GaloisField& F, const Vec3& u, const Vec3& v);
Vec3 cross(const GaloisField& F, const Vec3& u, const Vec3& v);

// Zorn vector matrix (a, alpha; beta, b) with scalars on the diagonal and
// 3-vectors off it.
struct ZornMatrix {
  GaloisField::Fe a = 0;
  GaloisField::Fe b = 0;
  Vec3 alpha, beta;
  friend bool operator==(const ZornMatrix&, const ZornMatrix&) = default;
};

ZornMatrix zorn_identity();

// (a,A;B,b)(c,C;D,d) = (ac + A.D, aC + dA - BxD; cB + bD + AxC, bd + B.C)
ZornMatrix zorn_mul(const GaloisField& F, const ZornMatrix& m, const ZornMatrix& k);

// det analogue: ab - alpha.beta; multiplicative over zorn_mul.
GaloisField::Fe zorn_norm(const GaloisField& F, const ZornMatrix& m);

ZornMatrix zorn_neg(const GaloisField& F, const ZornMatrix& m);

// Adjugate (b, -alpha; -beta, a); a two-sided inverse when norm(m) = 1.
ZornMatrix zorn_adjugate(const GaloisField& F, const ZornMatrix& m);

}  // namespace loopkit
