#pragma once

#include <optional>
#include <vector>

#include "pgt/extfield.hpp"
#include "pgt/gf.hpp"

namespace pgt {

// Finite presemifield/semifield data: a bilinear product on GF(p)^n given by
// structure constants C[i][j][k] with e_i * e_j = sum_k C[i][j][k] e_k.
// Bilinearity (both distributive laws) is structural; no zero divisors and a
// two-sided identity are what validation checks.
struct Semifield {
  int p = 3;
  int n = 1;
  std::vector<int> c;  // n*n*n, index ((i*n)+j)*n+k

  int cat(int i, int j, int k) const { return c[((size_t)i * n + j) * n + k]; }
  int& cat(int i, int j, int k) { return c[((size_t)i * n + j) * n + k]; }
  i64 order() const { return ipow(p, n); }

  Vec mul(const Vec& x, const Vec& y) const {
    PrimeField F{p};
    Vec r(n, 0);
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        int xy = F.mul(x[i], y[j]);
        for (int k = 0; k < n; ++k)
          r[k] = F.add(r[k], F.mul(xy, cat(i, j, k)));
      }
    }
    return r;
  }

  // matrix of y -> x*y, rows indexed by output coordinate
  Mat left_matrix(const Vec& x) const {
    PrimeField F{p};
    Mat M(n, Vec(n, 0));
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          M[k][j] = F.add(M[k][j], F.mul(x[i], cat(i, j, k)));
    return M;
  }

  Mat right_matrix(const Vec& y) const {
    PrimeField F{p};
    Mat M(n, Vec(n, 0));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          M[k][i] = F.add(M[k][i], F.mul(y[j], cat(i, j, k)));
    return M;
  }
};

inline Semifield semifield_from_field(const ExtField& E) {
  Semifield S;
  S.p = E.p();
  S.n = E.degree();
  S.c.assign((size_t)S.n * S.n * S.n, 0);
  for (int i = 0; i < S.n; ++i)
    for (int j = 0; j < S.n; ++j) {
      Vec ei(S.n, 0), ej(S.n, 0);
      ei[i] = 1;
      ej[j] = 1;
      Vec prod = E.mul(ei, ej);
      for (int k = 0; k < S.n; ++k) S.cat(i, j, k) = prod[k];
    }
  return S;
}

struct SemifieldReport {
  bool ok = false;
  bool has_identity = false;
  bool no_zero_divisors = false;
  std::optional<Vec> identity;
  std::vector<std::pair<Vec, Vec>> zero_divisor_witnesses;  // first few, lex order
  std::string message;
};

// Exhaustive validation: every nonzero left-multiplication matrix must be
// nonsingular (no zero divisors) and some element must be a two-sided
// identity.  Exhaustive only up to caps().semifield_limit elements.
inline SemifieldReport semifield_validate(const Semifield& S) {
  require(PrimeField::is_prime(S.p), "NotPrime", "semifield characteristic must be prime");
  require(S.n >= 1, "InvalidDegree", "semifield dimension must be >= 1");
  require(S.c.size() == (size_t)S.n * S.n * S.n, "DimensionMismatch",
          "structure constant array has wrong size");
  require(S.order() <= caps().semifield_limit, "CapExceeded",
          "semifield order exceeds exhaustive validation cap");

  PrimeField F{S.p};
  SemifieldReport rep;

  // enumerate all vectors in lex order once
  std::vector<Vec> all;
  all.reserve((size_t)S.order());
  Vec v(S.n, 0);
  while (true) {
    all.push_back(v);
    int i = S.n - 1;
    while (i >= 0 && v[i] == S.p - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }

  rep.no_zero_divisors = true;
  constexpr int kMaxWitnesses = 8;
  for (const Vec& x : all) {
    if (PrimeField::is_zero(x)) continue;
    Mat L = S.left_matrix(x);
    RankKernel rk = rank_and_kernel(F, L, S.n);
    if (rk.rank < S.n) {
      rep.no_zero_divisors = false;
      if ((int)rep.zero_divisor_witnesses.size() < kMaxWitnesses) {
        Vec y = rk.kernel.basis().front();
        rep.zero_divisor_witnesses.emplace_back(x, y);
      }
    }
  }

  for (const Vec& e : all) {
    bool two_sided = true;
    for (const Vec& x : all) {
      if (S.mul(e, x) != x || S.mul(x, e) != x) {
        two_sided = false;
        break;
      }
    }
    if (two_sided) {
      rep.has_identity = true;
      rep.identity = e;
      break;  // identity is unique when it exists; lex scan fixes the witness
    }
  }

  rep.ok = rep.has_identity && rep.no_zero_divisors;
  if (rep.ok)
    rep.message = "valid semifield of order " + std::to_string(S.order());
  else if (!rep.has_identity)
    rep.message = "no two-sided identity found";
  else
    rep.message = "zero divisors present";
  return rep;
}

}  // namespace pgt
