#pragma once

#include <vector>

#include "pgt/gf.hpp"

namespace pgt {

// Polynomials over GF(p) stored low degree first; the zero polynomial is {}.
namespace poly {

inline Vec trim(Vec a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline int deg(const Vec& a) { return (int)a.size() - 1; }

inline Vec add(const PrimeField& F, Vec a, const Vec& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
  return trim(std::move(a));
}

inline Vec mul(const PrimeField& F, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return trim(std::move(r));
}

// remainder of a modulo monic m
inline Vec mod(const PrimeField& F, Vec a, const Vec& m) {
  a = trim(std::move(a));
  int dm = deg(m);
  while (deg(a) >= dm) {
    int shift = deg(a) - dm;
    int c = a.back();
    for (int i = 0; i <= dm; ++i)
      a[i + shift] = F.sub(a[i + shift], F.mul(c, m[i]));
    a = trim(std::move(a));
  }
  return a;
}

inline std::pair<Vec, Vec> divmod(const PrimeField& F, Vec a, const Vec& b) {
  int db = deg(b);
  require(db >= 0, "DivisionByZero", "polynomial division by zero");
  int lead_inv = F.inv(b[db]);
  Vec q;
  a = trim(std::move(a));
  if (deg(a) >= db) q.assign(deg(a) - db + 1, 0);
  while (deg(a) >= db) {
    int shift = deg(a) - db;
    int c = F.mul(a.back(), lead_inv);
    q[shift] = c;
    for (int i = 0; i <= db; ++i)
      a[i + shift] = F.sub(a[i + shift], F.mul(c, b[i]));
    a = trim(std::move(a));
  }
  return {trim(std::move(q)), std::move(a)};
}

}  // namespace poly

// GF(p^a) as GF(p)[x] modulo a monic irreducible reduction polynomial.
// Elements are coefficient vectors of fixed length a, low degree first.
class ExtField {
 public:
  // poly: full coefficient list c_0..c_a with c_a = 1
  static ExtField make(int p, int a, Vec reduction_poly) {
    PrimeField F = PrimeField::make(p);
    require(a >= 1 && a <= caps().max_ext_degree, "InvalidDegree",
            "extension degree " + std::to_string(a) + " outside [1, " +
                std::to_string(caps().max_ext_degree) + "]");
    require((int)reduction_poly.size() == a + 1 && reduction_poly[a] == 1,
            "NotMonic", "reduction polynomial must be monic of degree a");
    for (int c : reduction_poly)
      require(0 <= c && c < p, "InvalidCoefficient", "coefficient outside [0, p)");
    require(is_irreducible(F, reduction_poly), "NotIrreducible",
            "reduction polynomial factors over GF(" + std::to_string(p) + ")");
    ExtField E;
    E.F_ = F;
    E.a_ = a;
    E.poly_ = std::move(reduction_poly);
    return E;
  }

  // canonically least monic irreducible of degree a: minimal (c_0, c_1, ...)
  static ExtField make_default(int p, int a) {
    PrimeField F = PrimeField::make(p);
    require(a >= 1 && a <= caps().max_ext_degree, "InvalidDegree", "degree out of range");
    Vec cand(a + 1, 0);
    cand[a] = 1;
    while (true) {
      if (is_irreducible(F, cand)) return make(p, a, cand);
      int i = 0;
      while (i < a && cand[i] == p - 1) cand[i++] = 0;
      require(i < a, "NotIrreducible", "no irreducible polynomial found");
      ++cand[i];
    }
  }

  int p() const { return F_.p; }
  int degree() const { return a_; }
  i64 order() const { return ipow(F_.p, a_); }
  const Vec& reduction_poly() const { return poly_; }
  const PrimeField& base() const { return F_; }

  Vec zero() const { return Vec(a_, 0); }
  Vec one() const {
    Vec v(a_, 0);
    if (a_ > 0) v[0] = 1;
    return v;
  }
  // the class of x, generator of the power basis
  Vec gen() const {
    Vec v(a_, 0);
    if (a_ > 1) v[1] = 1;
    else v[0] = F_.norm(-poly_[0]);  // degree 1: x = -c_0
    return v;
  }

  Vec add(const Vec& x, const Vec& y) const { return F_.vadd(x, y); }
  Vec sub(const Vec& x, const Vec& y) const { return F_.vsub(x, y); }
  Vec neg(const Vec& x) const { return F_.vscale(F_.neg(1), x); }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec r = poly::mod(F_, poly::mul(F_, poly::trim(x), poly::trim(y)), poly_);
    r.resize(a_, 0);
    return r;
  }

  Vec inv(const Vec& x) const {
    Vec a = poly::trim(x);
    require(!a.empty(), "DivisionByZero", "inverse of 0 in extension field");
    // extended Euclid over GF(p)[x]
    Vec r0 = poly_, r1 = a, t0 = {}, t1 = {1};
    while (!r1.empty()) {
      auto [q, r2] = poly::divmod(F_, r0, r1);
      Vec t2 = poly::add(F_, t0, F_neg_poly(poly::mul(F_, q, t1)));
      r0 = std::move(r1);
      r1 = std::move(r2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 is a nonzero constant gcd
    int c = F_.inv(r0[0]);
    Vec out(a_, 0);
    Vec t = poly::mod(F_, t0, poly_);
    for (size_t i = 0; i < t.size(); ++i) out[i] = F_.mul(c, t[i]);
    return out;
  }

  // no roots and no monic irreducible factor of degree <= deg/2
  static bool is_irreducible(const PrimeField& F, const Vec& f) {
    int d = poly::deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false;  // x divides
    for (int r = 0; r < F.p; ++r) {
      int v = 0;
      for (int i = d; i >= 0; --i) v = F.add(F.mul(v, r), f[i]);
      if (v == 0) return false;
    }
    for (int dd = 2; dd <= d / 2; ++dd) {
      Vec g(dd + 1, 0);
      g[dd] = 1;
      while (true) {
        auto [q, rem] = poly::divmod(F, f, g);
        (void)q;
        if (rem.empty()) return false;
        int i = 0;
        while (i < dd && g[i] == F.p - 1) g[i++] = 0;
        if (i == dd) break;
        ++g[i];
      }
    }
    return true;
  }

 private:
  Vec F_neg_poly(Vec v) const {
    for (int& c : v) c = F_.neg(c);
    return v;
  }

  PrimeField F_{2};
  int a_ = 1;
  Vec poly_;
};

}  // namespace pgt
