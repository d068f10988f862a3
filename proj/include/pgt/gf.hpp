#pragma once

#include <algorithm>
#include <vector>

#include "pgt/common.hpp"

namespace pgt {

// Coordinate vectors and row-major matrices over GF(p), entries always
// normalized into [0, p).
using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

struct PrimeField {
  int p;

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (i64)d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static PrimeField make(int p) {
    require(is_prime(p), "NotPrime", "p = " + std::to_string(p) + " is not prime");
    return PrimeField{p};
  }

  int norm(i64 a) const {
    int r = (int)(a % p);
    return r < 0 ? r + p : r;
  }
  int add(int a, int b) const { return (a + b) % p; }
  int sub(int a, int b) const { return (a - b + p) % p; }
  int mul(int a, int b) const { return (int)((i64)a * b % p); }
  int neg(int a) const { return a == 0 ? 0 : p - a; }

  int inv(int a) const {
    require(a % p != 0, "DivisionByZero", "inverse of 0 in GF(" + std::to_string(p) + ")");
    // extended Euclid
    int t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
      int q = r / nr;
      int tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return norm(t);
  }

  Vec vadd(const Vec& a, const Vec& b) const {
    require(a.size() == b.size(), "DimensionMismatch", "vector sizes differ");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
    return r;
  }
  Vec vsub(const Vec& a, const Vec& b) const {
    require(a.size() == b.size(), "DimensionMismatch", "vector sizes differ");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
    return r;
  }
  Vec vscale(int c, const Vec& a) const {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mul(c, a[i]);
    return r;
  }
  static bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
  }
};

// In-place reduced row echelon form.  Returns pivot column indices.
// Rows of zeros are removed, pivots are 1, pivot columns are cleared,
// pivot columns strictly increase: the result is the canonical basis of the
// row space, so equal row spaces give bit-identical matrices.
inline std::vector<int> rref(const PrimeField& F, Mat& M) {
  std::vector<int> pivots;
  if (M.empty()) return pivots;
  size_t ncols = M[0].size();
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < M.size(); ++col) {
    size_t sel = row;
    while (sel < M.size() && M[sel][col] == 0) ++sel;
    if (sel == M.size()) continue;
    std::swap(M[row], M[sel]);
    int iv = F.inv(M[row][col]);
    for (size_t j = col; j < ncols; ++j) M[row][j] = F.mul(iv, M[row][j]);
    for (size_t i = 0; i < M.size(); ++i) {
      if (i == row || M[i][col] == 0) continue;
      int c = M[i][col];
      for (size_t j = col; j < ncols; ++j) M[i][j] = F.sub(M[i][j], F.mul(c, M[row][j]));
    }
    pivots.push_back((int)col);
    ++row;
  }
  M.resize(row);
  return pivots;
}

class Subspace;
struct RankKernel {
  int rank;
  Subspace kernel;  // canonical basis of the right null space
};

// Subspace of GF(p)^n held in canonical RREF basis form.
class Subspace {
 public:
  Subspace() : p_(2), ambient_(0) {}

  static Subspace zero(const PrimeField& F, int ambient) {
    Subspace s;
    s.p_ = F.p;
    s.ambient_ = ambient;
    return s;
  }

  static Subspace full(const PrimeField& F, int ambient) {
    Mat rows(ambient, Vec(ambient, 0));
    for (int i = 0; i < ambient; ++i) rows[i][i] = 1;
    return span(F, ambient, rows);
  }

  static Subspace span(const PrimeField& F, int ambient, Mat vectors) {
    for (const Vec& v : vectors)
      require((int)v.size() == ambient, "DimensionMismatch",
              "span vector length != ambient dimension");
    Subspace s;
    s.p_ = F.p;
    s.ambient_ = ambient;
    s.basis_ = std::move(vectors);
    rref(F, s.basis_);
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return (int)basis_.size(); }
  int p() const { return p_; }
  i64 size() const { return ipow(p_, dim()); }
  const Mat& basis() const { return basis_; }

  // residual of v after elimination against the basis; zero iff v is a member
  Vec reduce(const Vec& v) const {
    PrimeField F{p_};
    require((int)v.size() == ambient_, "DimensionMismatch", "vector/ambient mismatch");
    Vec r = v;
    for (const Vec& b : basis_) {
      int lead = lead_col(b);
      if (r[lead] != 0) r = F.vsub(r, F.vscale(r[lead], b));
    }
    return r;
  }

  bool contains(const Vec& v) const { return PrimeField::is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    for (const Vec& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    check_compatible(other);
    Mat rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(PrimeField{p_}, ambient_, rows);
  }

  Subspace intersect(const Subspace& other) const {
    check_compatible(other);
    PrimeField F{p_};
    if (dim() == 0 || other.dim() == 0) return zero(F, ambient_);
    // x = a*U = b*W  <=>  [U^T | -W^T] (a,b)^T = 0
    int ku = dim(), kw = other.dim();
    Mat M(ambient_, Vec(ku + kw, 0));
    for (int i = 0; i < ku; ++i)
      for (int c = 0; c < ambient_; ++c) M[c][i] = basis_[i][c];
    for (int i = 0; i < kw; ++i)
      for (int c = 0; c < ambient_; ++c) M[c][ku + i] = F.neg(other.basis_[i][c]);
    Mat ker = kernel_basis(F, M, ku + kw);
    Mat rows;
    for (const Vec& coef : ker) {
      Vec v(ambient_, 0);
      for (int i = 0; i < ku; ++i)
        for (int c = 0; c < ambient_; ++c) v[c] = F.add(v[c], F.mul(coef[i], basis_[i][c]));
      rows.push_back(std::move(v));
    }
    return span(F, ambient_, rows);
  }

  // all member vectors in lexicographic order
  std::vector<Vec> enumerate() const {
    PrimeField F{p_};
    std::vector<Vec> out;
    out.reserve((size_t)size());
    Vec coef(dim(), 0);
    Vec cur(ambient_, 0);
    // iterate coefficient tuples, then sort; dim is small everywhere we enumerate
    while (true) {
      Vec v(ambient_, 0);
      for (int i = 0; i < dim(); ++i)
        if (coef[i] != 0) v = F.vadd(v, F.vscale(coef[i], basis_[i]));
      out.push_back(std::move(v));
      int i = dim() - 1;
      while (i >= 0 && coef[i] == p_ - 1) coef[i--] = 0;
      if (i < 0) break;
      ++coef[i];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const Subspace& o) const {
    return p_ == o.p_ && ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_ < o.basis_;
  }

  // canonical kernel basis of M acting on column vectors of length ncols
  static Mat kernel_basis(const PrimeField& F, Mat M, int ncols) {
    for (const Vec& row : M)
      require((int)row.size() == ncols, "DimensionMismatch", "matrix row length != ncols");
    std::vector<int> piv = rref(F, M);
    std::vector<bool> is_piv(ncols, false);
    for (int c : piv) is_piv[c] = true;
    Mat ker;
    for (int freec = 0; freec < ncols; ++freec) {
      if (is_piv[freec]) continue;
      Vec v(ncols, 0);
      v[freec] = 1;
      for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(M[r][freec]);
      ker.push_back(std::move(v));
    }
    return ker;
  }

 private:
  static int lead_col(const Vec& b) {
    for (size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) return (int)i;
    return -1;
  }
  void check_compatible(const Subspace& o) const {
    require(p_ == o.p_ && ambient_ == o.ambient_, "DimensionMismatch",
            "subspace operands live in different ambient spaces");
  }

  int p_;
  int ambient_;
  Mat basis_;
};

// rank of M together with the canonical basis of {v : M v = 0}
inline RankKernel rank_and_kernel(const PrimeField& F, const Mat& M, int ncols) {
  Mat ker = Subspace::kernel_basis(F, M, ncols);
  Subspace k = Subspace::span(F, ncols, ker);
  return RankKernel{ncols - k.dim(), k};
}

}  // namespace pgt
