#include "loopkit/gf.hpp"

#include <string>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {

struct FieldSpec {
  int q;
  int p;
  int k;
  // coefficients of x^k in terms of lower powers, i.e. x^k = red[0] +
  // red[1] x + ... (mod p); unused for k = 1
  std::array<int, 3> red;
};

// GF(4): x^2 = x + 1; GF(8): x^3 = x + 1; GF(9): x^2 = -1 = 2.
constexpr FieldSpec kSpecs[] = {
    {2, 2, 1, {0, 0, 0}}, {3, 3, 1, {0, 0, 0}}, {4, 2, 2, {1, 1, 0}},
    {5, 5, 1, {0, 0, 0}}, {7, 7, 1, {0, 0, 0}}, {8, 2, 3, {1, 1, 0}},
    {9, 3, 2, {2, 0, 0}},
};

const FieldSpec* find_spec(int q) {
  for (const auto& s : kSpecs)
    if (s.q == q) return &s;
  return nullptr;
}

void to_digits(int v, int p, int k, int* d) {
  for (int i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
}

int from_digits(const int* d, int p, int k) {
  int v = 0;
  for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

int poly_mul(int a, int b, const FieldSpec& s) {
  int da[3], db[3];
  to_digits(a, s.p, s.k, da);
  to_digits(b, s.p, s.k, db);
  int prod[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < s.k; ++i)
    for (int j = 0; j < s.k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % s.p;
  // reduce degrees k .. 2k-2 top down via x^k = red
  for (int d = 2 * s.k - 2; d >= s.k; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < s.k; ++i)
      prod[d - s.k + i] = (prod[d - s.k + i] + c * s.red[std::size_t(i)]) % s.p;
  }
  return from_digits(prod, s.p, s.k);
}

}  // namespace

GaloisField::GaloisField(int q) {
  const FieldSpec* spec = find_spec(q);
  if (!spec)
    throw UnsupportedOrderError("no GF(" + std::to_string(q) + ") support; q must be in {2,3,4,5,7,8,9}");
  q_ = q;
  p_ = spec->p;
  auto n = static_cast<std::size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.resize(n, 0);

  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (spec->k == 1) {
        add_[idx(Fe(a), Fe(b))] = Fe((a + b) % q);
        mul_[idx(Fe(a), Fe(b))] = Fe((a * b) % q);
      } else {
        int da[3], db[3], sum[3];
        to_digits(a, p_, spec->k, da);
        to_digits(b, p_, spec->k, db);
        for (int i = 0; i < spec->k; ++i) sum[i] = (da[i] + db[i]) % p_;
        add_[idx(Fe(a), Fe(b))] = Fe(from_digits(sum, p_, spec->k));
        mul_[idx(Fe(a), Fe(b))] = Fe(poly_mul(a, b, *spec));
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[idx(Fe(a), Fe(b))] == 0) neg_[std::size_t(a)] = Fe(b);
      if (a != 0 && mul_[idx(Fe(a), Fe(b))] == 1) inv_[std::size_t(a)] = Fe(b);
    }
  }
}

std::vector<GaloisField::Fe> GaloisField::elements() const {
  std::vector<Fe> out(static_cast<std::size_t>(q_));
  for (int i = 0; i < q_; ++i) out[std::size_t(i)] = Fe(i);
  return out;
}

Vec3 vec_add(const GaloisField& F, const Vec3& u, const Vec3& v) {
  return {{F.add(u.c[0], v.c[0]), F.add(u.c[1], v.c[1]), F.add(u.c[2], v.c[2])}};
}

Vec3 vec_neg(const GaloisField& F, const Vec3& u) {
  return {{F.neg(u.c[0]), F.neg(u.c[1]), F.neg(u.c[2])}};
}

Vec3 vec_scale(const GaloisField& F, GaloisField::Fe s, const Vec3& u) {
  return {{F.mul(s, u.c[0]), F.mul(s, u.c[1]), F.mul(s, u.c[2])}};
}

GaloisField::Fe dot(const GaloisField& F, const Vec3& u, const Vec3& v) {
  return F.add(F.add(F.mul(u.c[0], v.c[0]), F.mul(u.c[1], v.c[1])), F.mul(u.c[2], v.c[2]));
}

Vec3 cross(const GaloisField& F, const Vec3& u, const Vec3& v) {
  return {{F.sub(F.mul(u.c[1], v.c[2]), F.mul(u.c[2], v.c[1])),
           F.sub(F.mul(u.c[2], v.c[0]), F.mul(u.c[0], v.c[2])),
           F.sub(F.mul(u.c[0], v.c[1]), F.mul(u.c[1], v.c[0]))}};
}

ZornMatrix zorn_identity() {
  ZornMatrix m;
  m.a = 1;
  m.b = 1;
  return m;
}

ZornMatrix zorn_mul(const GaloisField& F, const ZornMatrix& m, const ZornMatrix& k) {
  ZornMatrix r;
  r.a = F.add(F.mul(m.a, k.a), dot(F, m.alpha, k.beta));
  r.alpha = vec_add(F, vec_add(F, vec_scale(F, m.a, k.alpha), vec_scale(F, k.b, m.alpha)),
                    vec_neg(F, cross(F, m.beta, k.beta)));
  r.beta = vec_add(F, vec_add(F, vec_scale(F, k.a, m.beta), vec_scale(F, m.b, k.beta)),
                   cross(F, m.alpha, k.alpha));
  r.b = F.add(F.mul(m.b, k.b), dot(F, m.beta, k.alpha));
  return r;
}

GaloisField::Fe zorn_norm(const GaloisField& F, const ZornMatrix& m) {
  return F.sub(F.mul(m.a, m.b), dot(F, m.alpha, m.beta));
}

ZornMatrix zorn_neg(const GaloisField& F, const ZornMatrix& m) {
  ZornMatrix r;
  r.a = F.neg(m.a);
  r.b = F.neg(m.b);
  r.alpha = vec_neg(F, m.alpha);
  r.beta = vec_neg(F, m.beta);
  return r;
}

ZornMatrix zorn_adjugate(const GaloisField& F, const ZornMatrix& m) {
  ZornMatrix r;
  r.a = m.b;
  r.b = m.a;
  r.alpha = vec_neg(F, m.alpha);
  r.beta = vec_neg(F, m.beta);
  return r;
}

}  // namespace loopkit
