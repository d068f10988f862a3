#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pgt/gf.hpp"

namespace pgt {

// Explicit multiplication table over element indices 0..order-1.
// Validated on construction: Latin square, two-sided identity, inverses,
// associativity (all triples up to caps().assoc_exhaustive_limit, a fixed
// deterministic sample of triples above that).
struct GroupTable {
  int order = 1;
  std::vector<int> mul;  // order*order, row i = left factor
  std::vector<int> inv;
  int identity = 0;
  std::vector<std::string> labels;  // optional, empty or size == order

  int at(int i, int j) const { return mul[(size_t)i * order + j]; }
};

inline GroupTable group_from_table(int order, std::vector<int> mul,
                                   std::vector<std::string> labels = {}) {
  require(order >= 1, "InvalidOrder", "order must be positive");
  require(order <= caps().max_table_order, "CapExceeded",
          "order " + std::to_string(order) + " exceeds table cap");
  require((i64)mul.size() == (i64)order * order, "DimensionMismatch",
          "multiplication table must have order^2 entries");
  require(labels.empty() || (int)labels.size() == order, "DimensionMismatch",
          "label list must be empty or match order");
  for (int v : mul)
    require(0 <= v && v < order, "InvalidEntry", "table entry out of range");

  GroupTable G;
  G.order = order;
  G.mul = std::move(mul);
  G.labels = std::move(labels);

  // Latin square: each row and column is a permutation
  std::vector<char> seen(order);
  for (int i = 0; i < order; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < order; ++j) {
      int v = G.at(i, j);
      require(!seen[v], "NotLatinSquare",
              "row " + std::to_string(i) + " repeats value " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int j = 0; j < order; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < order; ++i) {
      int v = G.at(i, j);
      require(!seen[v], "NotLatinSquare",
              "column " + std::to_string(j) + " repeats value " + std::to_string(v));
      seen[v] = 1;
    }
  }

  int id = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      ok = G.at(e, x) == x && G.at(x, e) == x;
    if (ok) {
      id = e;
      break;
    }
  }
  require(id >= 0, "NoIdentity", "no two-sided identity element");
  G.identity = id;

  G.inv.assign(order, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y)
      if (G.at(x, y) == id && G.at(y, x) == id) {
        G.inv[x] = y;
        break;
      }
    require(G.inv[x] >= 0, "NoInverse", "element " + std::to_string(x) + " has no inverse");
  }

  auto check_triple = [&](int a, int b, int c) {
    int lhs = G.at(G.at(a, b), c);
    int rhs = G.at(a, G.at(b, c));
    require(lhs == rhs, "NotAssociative",
            "witness (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                std::to_string(c) + ")");
  };
  if (order <= caps().assoc_exhaustive_limit) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ (unsigned long long)order);
    std::uniform_int_distribution<int> pick(0, order - 1);
    for (i64 s = 0; s < caps().assoc_samples; ++s)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
  return G;
}

// Elementwise composition convention everywhere: (x*y) means "apply x, then y"
// for permutations; mul(i, j) is the product with i as left factor.
inline std::vector<int> perm_compose(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> r(x.size());
  for (size_t pt = 0; pt < x.size(); ++pt) r[pt] = y[x[pt]];
  return r;
}

// Breadth-first closure of the generators; element 0 is the identity and
// discovery order fixes the labeling, so the output is deterministic.
inline GroupTable group_from_permutations(int degree,
                                          const std::vector<std::vector<int>>& gens) {
  require(degree >= 1, "InvalidDegree", "degree must be positive");
  for (const auto& g : gens) {
    require((int)g.size() == degree, "DimensionMismatch", "generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      require(0 <= v && v < degree, "InvalidEntry", "permutation image out of range");
      require(!seen[v], "NotBijective", "generator repeats an image point");
      seen[v] = 1;
    }
  }

  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;

  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<int> nxt = perm_compose(elems[head], g);
      if (index.emplace(nxt, (int)elems.size()).second) {
        elems.push_back(std::move(nxt));
        require((i64)elems.size() <= caps().max_table_order, "CapExceeded",
                "permutation closure exceeds table cap");
      }
    }
  }

  int n = (int)elems.size();
  std::vector<int> mul((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(perm_compose(elems[i], elems[j]));
      require(it != index.end(), "NotClosed", "closure invariant violated");
      mul[(size_t)i * n + j] = it->second;
    }
  return group_from_table(n, std::move(mul));
}

// Finite p-group of exponent p and nilpotency class <= 2, odd p, presented by
// an alternating bilinear map B: GF(p)^d x GF(p)^d -> GF(p)^m.
// Elements are pairs (v, z); the product is
//   (v1, z1)(v2, z2) = (v1 + v2, z1 + z2 + g*B(v1, v2)),  g = inverse of 2,
// which makes the commutator [(v1, .), (v2, .)] = (0, B(v1, v2)) exactly.
struct BilinearPGroup {
  int p = 3;
  int d = 1;
  int m = 1;
  int gamma = 2;        // 2^{-1} mod p
  std::vector<Vec> b;   // d*d entries, each an m-vector; b[i*d+j] = B(e_i, e_j)

  const Vec& bat(int i, int j) const { return b[(size_t)i * d + j]; }
  i64 order() const { return ipow(p, d + m); }

  Vec commutator_map(const Vec& v1, const Vec& v2) const {
    PrimeField F{p};
    Vec r(m, 0);
    for (int i = 0; i < d; ++i) {
      if (v1[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (v2[j] == 0) continue;
        int cc = F.mul(v1[i], v2[j]);
        const Vec& bij = bat(i, j);
        for (int k = 0; k < m; ++k) r[k] = F.add(r[k], F.mul(cc, bij[k]));
      }
    }
    return r;
  }

  // matrix of w -> B(v, w), m rows, d columns
  Mat adjoint(const Vec& v) const {
    PrimeField F{p};
    Mat M(m, Vec(d, 0));
    for (int i = 0; i < d; ++i) {
      if (v[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        const Vec& bij = bat(i, j);
        for (int k = 0; k < m; ++k)
          M[k][j] = F.add(M[k][j], F.mul(v[i], bij[k]));
      }
    }
    return M;
  }

  // element index <-> coordinates; (v||z) read as base-p digits, v first,
  // so index order is lexicographic order on (v, z)
  i64 encode(const Vec& v, const Vec& z) const {
    i64 idx = 0;
    for (int i = 0; i < d; ++i) idx = idx * p + v[i];
    for (int k = 0; k < m; ++k) idx = idx * p + z[k];
    return idx;
  }
  std::pair<Vec, Vec> decode(i64 idx) const {
    Vec v(d), z(m);
    for (int k = m - 1; k >= 0; --k) {
      z[k] = (int)(idx % p);
      idx /= p;
    }
    for (int i = d - 1; i >= 0; --i) {
      v[i] = (int)(idx % p);
      idx /= p;
    }
    return {std::move(v), std::move(z)};
  }
};

inline BilinearPGroup group_from_bilinear(int p, int d, int m, std::vector<Vec> B) {
  require(PrimeField::is_prime(p), "NotPrime", "p must be prime");
  require(p != 2, "EvenPrime", "the bilinear model requires odd p");
  require(d >= 1 && m >= 1, "InvalidDegree", "d and m must be positive");
  require((i64)B.size() == (i64)d * d, "DimensionMismatch", "B must have d*d entries");
  i64 ord = 1;
  for (int i = 0; i < d + m; ++i) {
    ord *= p;
    require(ord <= (i64)1 << 60, "CapExceeded", "p^(d+m) overflows the element index");
  }
  PrimeField F{p};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vec& bij = B[(size_t)i * d + j];
      require((int)bij.size() == m, "DimensionMismatch", "B entries must be m-vectors");
      for (int c : bij)
        require(0 <= c && c < p, "InvalidEntry", "B coefficient out of range");
    }
  for (int i = 0; i < d; ++i)
    require(PrimeField::is_zero(B[(size_t)i * d + i]), "NotAlternating",
            "B(e_" + std::to_string(i) + ", e_" + std::to_string(i) + ") != 0");
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec neg = F.vscale(F.neg(1), B[(size_t)i * d + j]);
      require(B[(size_t)j * d + i] == neg, "NotAlternating",
              "B(e_" + std::to_string(j) + ", e_" + std::to_string(i) +
                  ") != -B(e_" + std::to_string(i) + ", e_" + std::to_string(j) + ")");
    }

  BilinearPGroup G;
  G.p = p;
  G.d = d;
  G.m = m;
  G.gamma = F.inv(2);
  G.b = std::move(B);
  return G;
}

// One value type over both models.  Payloads are shared immutably so that
// subgroup handles can hold cheap back references.
class GroupValue {
 public:
  GroupValue() = default;
  GroupValue(GroupTable t, std::string name = {})
      : table_(std::make_shared<GroupTable>(std::move(t))), name_(std::move(name)) {}
  GroupValue(BilinearPGroup b, std::string name = {})
      : bilinear_(std::make_shared<BilinearPGroup>(std::move(b))), name_(std::move(name)) {}

  bool is_table() const { return table_ != nullptr; }
  bool is_bilinear() const { return bilinear_ != nullptr; }
  const GroupTable& table() const {
    require(is_table(), "WrongModel", "table model required");
    return *table_;
  }
  const BilinearPGroup& bilinear() const {
    require(is_bilinear(), "WrongModel", "bilinear model required");
    return *bilinear_;
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  i64 order() const { return is_table() ? table_->order : bilinear_->order(); }
  i64 identity() const { return is_table() ? table_->identity : 0; }

  i64 mul(i64 x, i64 y) const {
    if (is_table()) return table_->at((int)x, (int)y);
    const BilinearPGroup& B = *bilinear_;
    PrimeField F{B.p};
    auto [v1, z1] = B.decode(x);
    auto [v2, z2] = B.decode(y);
    Vec v = F.vadd(v1, v2);
    Vec z = F.vadd(F.vadd(z1, z2), F.vscale(B.gamma, B.commutator_map(v1, v2)));
    return B.encode(v, z);
  }

  i64 inv(i64 x) const {
    if (is_table()) return table_->inv[(size_t)x];
    const BilinearPGroup& B = *bilinear_;
    PrimeField F{B.p};
    auto [v, z] = B.decode(x);
    return B.encode(F.vscale(F.neg(1), v), F.vscale(F.neg(1), z));
  }

  i64 conj(i64 x, i64 g) const {  // g^{-1} x g
    return mul(mul(inv(g), x), g);
  }
  i64 comm(i64 x, i64 y) const {  // [x, y] = x^{-1} y^{-1} x y
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }

  std::string describe(i64 x) const {
    if (is_table()) {
      const GroupTable& T = *table_;
      if (!T.labels.empty()) return T.labels[(size_t)x];
      return std::to_string(x);
    }
    auto [v, z] = bilinear_->decode(x);
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    s += " | ";
    for (size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + std::to_string(z[i]);
    return s + ")";
  }

  bool same_payload(const GroupValue& o) const {
    return table_ == o.table_ && bilinear_ == o.bilinear_;
  }

 private:
  std::shared_ptr<const GroupTable> table_;
  std::shared_ptr<const BilinearPGroup> bilinear_;
  std::string name_;
};

// Full table expansion of a bilinear group under the canonical index order.
// Element i of the output is element i of the input, so cross-model results
// compare index for index.
inline GroupValue expand_bilinear_to_table(const GroupValue& G) {
  const BilinearPGroup& B = G.bilinear();
  i64 n = B.order();
  require(n <= caps().max_table_order, "CapExceeded",
          "expansion of order " + std::to_string(n) + " exceeds table cap");
  std::vector<int> mul((size_t)n * n);
  for (i64 i = 0; i < n; ++i)
    for (i64 j = 0; j < n; ++j) mul[(size_t)i * n + j] = (int)G.mul(i, j);
  GroupValue out(group_from_table((int)n, std::move(mul)));
  out.set_name(G.name().empty() ? "expanded" : G.name() + "-expanded");
  return out;
}

}  // namespace pgt
