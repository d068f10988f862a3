#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgt/subgroup.hpp"

namespace pgt {

namespace lin {

// {v : B(v, w) = 0 for all w}
inline Subspace radical(const BilinearPGroup& B) {
  PrimeField F{B.p};
  Mat M((size_t)B.d * B.m, Vec(B.d, 0));
  for (int j = 0; j < B.d; ++j)
    for (int k = 0; k < B.m; ++k)
      for (int i = 0; i < B.d; ++i)
        M[(size_t)j * B.m + k][i] = B.bat(i, j)[k];
  return rank_and_kernel(F, M, B.d).kernel;
}

// ker of w -> B(v, w)
inline Subspace kernel_of(const BilinearPGroup& B, const Vec& v) {
  PrimeField F{B.p};
  return rank_and_kernel(F, B.adjoint(v), B.d).kernel;
}

inline int adjoint_rank(const BilinearPGroup& B, const Vec& v) {
  PrimeField F{B.p};
  return rank_and_kernel(F, B.adjoint(v), B.d).rank;
}

// {w : B(u, w) = 0 for all u in U}
inline Subspace perp(const BilinearPGroup& B, const Subspace& U) {
  PrimeField F{B.p};
  Mat M;
  for (const Vec& u : U.basis()) {
    Mat Mu = B.adjoint(u);
    M.insert(M.end(), Mu.begin(), Mu.end());
  }
  if (M.empty()) return Subspace::full(F, B.d);
  return rank_and_kernel(F, M, B.d).kernel;
}

inline bool isotropic(const BilinearPGroup& B, const Subspace& U) {
  for (const Vec& u1 : U.basis())
    for (const Vec& u2 : U.basis())
      if (!PrimeField::is_zero(B.commutator_map(u1, u2))) return false;
  return true;
}

// one representative per line of `within` outside `excluding`, in lex order;
// representatives are normalized so the first nonzero coordinate is 1
inline std::vector<Vec> line_reps(const BilinearPGroup& B, const Subspace& within,
                                  const Subspace& excluding) {
  PrimeField F{B.p};
  std::vector<Vec> reps;
  for (const Vec& v : within.enumerate()) {
    if (PrimeField::is_zero(v) || excluding.contains(v)) continue;
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    reps.push_back(v);
  }
  return reps;
}

}  // namespace lin

inline bool is_abelian_group(const GroupValue& G) {
  if (G.is_bilinear()) {
    for (const Vec& e : G.bilinear().b)
      if (!PrimeField::is_zero(e)) return false;
    return true;
  }
  const GroupTable& T = G.table();
  for (int i = 0; i < T.order; ++i)
    for (int j = i + 1; j < T.order; ++j)
      if (T.at(i, j) != T.at(j, i)) return false;
  return true;
}

inline SubgroupHandle center(const GroupValue& G) {
  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    return SubgroupHandle::bilinear_split(G, lin::radical(B),
                                          Subspace::full(PrimeField{B.p}, B.m));
  }
  const GroupTable& T = G.table();
  std::vector<i64> z;
  for (int x = 0; x < T.order; ++x) {
    bool central = true;
    for (int y = 0; y < T.order && central; ++y) central = T.at(x, y) == T.at(y, x);
    if (central) z.push_back(x);
  }
  return SubgroupHandle::from_elements(G, std::move(z));
}

inline SubgroupHandle centralizer(const GroupValue& G, i64 g) {
  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    Vec v = B.decode(g).first;
    return SubgroupHandle::bilinear_split(G, lin::kernel_of(B, v),
                                          Subspace::full(PrimeField{B.p}, B.m));
  }
  const GroupTable& T = G.table();
  std::vector<i64> c;
  for (int x = 0; x < T.order; ++x)
    if (T.at(x, (int)g) == T.at((int)g, x)) c.push_back(x);
  return SubgroupHandle::from_elements(G, std::move(c));
}

// {x in G : x commutes with every element of H}
inline SubgroupHandle centralizer_of_subgroup(const GroupValue& G, const SubgroupHandle& H) {
  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    PrimeField F{B.p};
    Mat vs;
    for (const auto& g : H.bilinear_gens()) vs.push_back(g.first);
    Subspace U = Subspace::span(F, B.d, vs);
    return SubgroupHandle::bilinear_split(G, lin::perp(B, U),
                                          Subspace::full(F, B.m));
  }
  std::vector<i64> c;
  std::vector<i64> hs = H.elements();
  for (i64 x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (i64 h : hs) {
      if (G.mul(x, h) != G.mul(h, x)) {
        ok = false;
        break;
      }
    }
    if (ok) c.push_back(x);
  }
  return SubgroupHandle::from_elements(G, std::move(c));
}

// center of an arbitrary subgroup: elements of H commuting with all of H
inline SubgroupHandle subgroup_center(const GroupValue& G, const SubgroupHandle& H) {
  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    PrimeField F{B.p};
    const auto& gens = H.bilinear_gens();
    int r = (int)gens.size();
    // coefficient tuples c with B(sum c_i v_i, v_j) = 0 exactly, for all j
    Mat M((size_t)r * B.m, Vec(r, 0));
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) {
        Vec bij = B.commutator_map(gens[i].first, gens[j].first);
        for (int k = 0; k < B.m; ++k) M[(size_t)j * B.m + k][i] = bij[k];
      }
    Mat coef = r == 0 ? Mat{} : Subspace::kernel_basis(F, M, r);
    std::vector<i64> zgens;
    for (const Vec& c : coef) {
      Vec v(B.d, 0), z(B.m, 0);
      for (int i = 0; i < r; ++i) {
        if (c[i] == 0) continue;
        v = F.vadd(v, F.vscale(c[i], gens[i].first));
        z = F.vadd(z, F.vscale(c[i], gens[i].second));
      }
      zgens.push_back(B.encode(v, z));
    }
    for (const Vec& w : H.zspace().basis()) zgens.push_back(B.encode(Vec(B.d, 0), w));
    return SubgroupHandle::generated(G, zgens);
  }
  std::vector<i64> zc;
  std::vector<i64> all = H.elements();
  for (i64 x : all) {
    bool central = true;
    for (i64 y : all) {
      if (G.mul(x, y) != G.mul(y, x)) {
        central = false;
        break;
      }
    }
    if (central) zc.push_back(x);
  }
  return SubgroupHandle::from_elements(G, std::move(zc));
}

// Z(g) = Z(C_G(g)), the center of the centralizer
inline SubgroupHandle element_center(const GroupValue& G, i64 g) {
  SubgroupHandle Z = center(G);
  require(!Z.contains(g), "CentralElement",
          "Z(g) is only defined for noncentral g (got " + G.describe(g) + ")");
  return subgroup_center(G, centralizer(G, g));
}

struct ConjugacyClass {
  i64 rep;
  i64 size;
  std::vector<i64> members;
};

// explicit class partition; reps are the least members, classes sorted by rep
inline std::vector<ConjugacyClass> conjugacy_classes(const GroupValue& G) {
  i64 n = G.order();
  require(n <= caps().max_table_order, "CapExceeded",
          "explicit class listing capped at " + std::to_string(caps().max_table_order));
  std::vector<ConjugacyClass> out;
  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    PrimeField F{B.p};
    std::vector<char> done((size_t)n, 0);
    for (i64 x = 0; x < n; ++x) {
      if (done[(size_t)x]) continue;
      auto [v, z] = B.decode(x);
      // class of (v, z) = {v} x (z + im B(v, .))
      Mat Mv = B.adjoint(v);
      Mat cols(B.d, Vec(B.m, 0));
      for (int k = 0; k < B.m; ++k)
        for (int j = 0; j < B.d; ++j) cols[j][k] = Mv[k][j];
      Subspace im = Subspace::span(F, B.m, cols);
      ConjugacyClass cls;
      cls.rep = x;
      for (const Vec& w : im.enumerate()) {
        i64 e = B.encode(v, F.vadd(z, w));
        cls.members.push_back(e);
        done[(size_t)e] = 1;
      }
      std::sort(cls.members.begin(), cls.members.end());
      cls.size = (i64)cls.members.size();
      out.push_back(std::move(cls));
    }
    return out;
  }
  const GroupTable& T = G.table();
  std::vector<char> done((size_t)n, 0);
  for (int x = 0; x < T.order; ++x) {
    if (done[(size_t)x]) continue;
    std::vector<char> hit((size_t)n, 0);
    ConjugacyClass cls;
    cls.rep = x;
    for (int g = 0; g < T.order; ++g) {
      int y = T.at(T.at(T.inv[(size_t)g], x), g);
      if (!hit[(size_t)y]) {
        hit[(size_t)y] = 1;
        cls.members.push_back(y);
        done[(size_t)y] = 1;
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.size = (i64)cls.members.size();
    out.push_back(std::move(cls));
  }
  return out;
}

// class size -> number of classes of that size; no order cap
inline std::map<i64, i64> class_size_multiset(const GroupValue& G) {
  std::map<i64, i64> ms;
  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    Vec v(B.d, 0);
    while (true) {
      int r = lin::adjoint_rank(B, v);
      ms[ipow(B.p, r)] += ipow(B.p, B.m - r);  // the classes {v} x (z + im B(v,.))
      int i = B.d - 1;
      while (i >= 0 && v[i] == B.p - 1) v[i--] = 0;
      if (i < 0) break;
      ++v[i];
    }
    return ms;
  }
  for (const ConjugacyClass& c : conjugacy_classes(G)) ms[c.size] += 1;
  return ms;
}

struct GroupParameters {
  int p = 0;
  int n_total = 0;  // |G : Z(G)| = p^n_total
  int m = 0;        // |Z(G)| = p^m
  int b = 0;        // largest class size is p^b
  int l = 0;        // largest |Z(g) : Z(G)| is p^l
  int k = -1;       // smallest |Z(g):Z(G)| below p^{n_total/2}; special-type
                    // analysis only, -1 elsewhere
};

inline int group_prime(const GroupValue& G) {
  if (G.is_bilinear()) return G.bilinear().p;
  i64 n = G.order();
  if (n == 1) return 0;
  int p = 2;
  while (n % p != 0) ++p;
  return p;
}

inline GroupParameters parameters(const GroupValue& G) {
  int p = group_prime(G);
  require(p != 0 && plog(p, G.order()) >= 0, "NotPrimePower",
          "|G| = " + std::to_string(G.order()) + " is not a prime power");
  SubgroupHandle Z = center(G);
  require(Z.size() != G.order(), "AbelianGroup",
          "class and center-quotient parameters are undefined for abelian groups");

  GroupParameters P;
  P.p = p;
  P.m = plog(p, Z.size());
  P.n_total = plog(p, G.order()) - P.m;

  for (const auto& [size, count] : class_size_multiset(G))
    P.b = std::max(P.b, plog(p, size));

  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    PrimeField F{B.p};
    Subspace rad = lin::radical(B);
    for (const Vec& v : lin::line_reps(B, Subspace::full(F, B.d), rad)) {
      Subspace zv = lin::perp(B, lin::kernel_of(B, v));
      P.l = std::max(P.l, zv.dim() - rad.dim());
    }
  } else {
    for (i64 x = 0; x < G.order(); ++x) {
      if (Z.contains(x)) continue;
      SubgroupHandle zg = element_center(G, x);
      P.l = std::max(P.l, plog(p, zg.size() / Z.size()));
    }
  }
  return P;
}

struct CenterFamilyEntry {
  i64 rep;             // least element whose Z(g) this is
  SubgroupHandle zg;
};

struct CenterFamily {
  std::vector<CenterFamilyEntry> entries;  // sorted by rep
};

// deduplicated {Z(a) : a noncentral}, restricted to A when given
inline CenterFamily center_family(const GroupValue& G,
                                  const SubgroupHandle* A = nullptr) {
  SubgroupHandle Z = center(G);
  CenterFamily fam;
  std::vector<SubgroupHandle> seen;
  auto push = [&](i64 rep, SubgroupHandle zg) {
    for (const SubgroupHandle& s : seen)
      if (s == zg) return;
    seen.push_back(zg);
    fam.entries.push_back({rep, std::move(zg)});
  };

  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    PrimeField F{B.p};
    Subspace rad = lin::radical(B);
    Subspace within = A ? A->uspace() : Subspace::full(F, B.d);
    Vec zzero(B.m, 0);
    for (const Vec& v : lin::line_reps(B, within, rad)) {
      Subspace zv = lin::perp(B, lin::kernel_of(B, v));
      push(B.encode(v, zzero),
           SubgroupHandle::bilinear_split(G, zv, Subspace::full(F, B.m)));
    }
  } else {
    std::vector<i64> candidates;
    if (A) candidates = A->elements();
    else {
      candidates.resize((size_t)G.order());
      for (i64 i = 0; i < G.order(); ++i) candidates[(size_t)i] = i;
    }
    for (i64 x : candidates) {
      if (Z.contains(x)) continue;
      push(x, element_center(G, x));
    }
  }
  require(!fam.entries.empty(), "AllCentral",
          "no noncentral elements available for the center family");
  return fam;
}

}  // namespace pgt
