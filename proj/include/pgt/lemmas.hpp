#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgt/maxabel.hpp"

namespace pgt {

enum class LemmaId {
  Well,                // Z(G) = intersection of all centralizers
  ThreeE,              // Z(a) = intersection of C_G(b) over b in C_G(a)
  Three1,              // Z(a) <= C_G(b)  <=>  a and b commute
  Three2,              // Z(a) <= C_G(b)  <=>  Z(b) <= C_G(a)
  ThreeF,              // <a,b,Z(G)> abelian <=> Z(x) <= C_G(y) on it
  ThreeHa,             // A maximal abelian, a in A\Z(G) => Z(a) <= A
  CentralizerAbelian,  // C_G(g) abelian => C_G(g) is maximal abelian
  Cyclic,              // A/Z(G) cyclic => A = C_G(a) for a generator
};

inline const char* lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::Well: return "well";
    case LemmaId::ThreeE: return "threee";
    case LemmaId::Three1: return "three1";
    case LemmaId::Three2: return "three2";
    case LemmaId::ThreeF: return "threef";
    case LemmaId::ThreeHa: return "threeha";
    case LemmaId::CentralizerAbelian: return "centralizer-abelian";
    case LemmaId::Cyclic: return "cyclic";
  }
  return "?";
}

inline const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids = {
      LemmaId::Well,    LemmaId::ThreeE,  LemmaId::Three1,
      LemmaId::Three2,  LemmaId::ThreeF,  LemmaId::ThreeHa,
      LemmaId::CentralizerAbelian, LemmaId::Cyclic};
  return ids;
}

inline LemmaId lemma_from_name(const std::string& s) {
  for (LemmaId id : all_lemmas())
    if (s == lemma_name(id)) return id;
  fail("UnknownLemma", "no lemma named '" + s + "'");
}

struct LemmaReport {
  std::string lemma;
  std::string group;
  bool pass = false;
  i64 checks = 0;  // element tuples covered
  std::string counterexample;  // empty on pass
};

namespace detail {

// per-projective-line centralizer/element-center data for a bilinear group.
// Z(g) and C_G(g) depend only on the line of g's v-part modulo the radical,
// so checking one representative per line covers every noncentral element.
struct LineData {
  PrimeField F;
  Subspace rad;
  std::vector<Vec> reps;      // normalized, lex order
  std::vector<Subspace> C;    // ker B(v,.)
  std::vector<Subspace> Z;    // C intersect perp(C)
  std::map<Vec, int> index;   // normalized rep -> position
  std::vector<std::vector<char>> z_in_c;   // Z[i] <= C[j]
  std::vector<std::vector<char>> commute;  // B(v_i, v_j) == 0
  i64 line_weight;   // noncentral elements represented by one line
  i64 noncentral;    // total noncentral element count
};

inline LineData line_data(const BilinearPGroup& B) {
  LineData L{PrimeField{B.p}, lin::radical(B), {}, {}, {}, {}, {}, {}, 0, 0};
  L.reps = lin::line_reps(B, Subspace::full(L.F, B.d), L.rad);
  int n = (int)L.reps.size();
  for (int i = 0; i < n; ++i) {
    L.index[L.reps[i]] = i;
    Subspace Cv = lin::kernel_of(B, L.reps[i]);
    L.Z.push_back(Cv.intersect(lin::perp(B, Cv)));
    L.C.push_back(std::move(Cv));
  }
  L.z_in_c.assign(n, std::vector<char>(n, 0));
  L.commute.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      L.z_in_c[i][j] = L.C[j].contains(L.Z[i]);
      L.commute[i][j] =
          PrimeField::is_zero(B.commutator_map(L.reps[i], L.reps[j]));
    }
  // one line = (p-1) nonzero v-parts, each paired with every central coordinate
  L.line_weight = (i64)(B.p - 1) * ipow(B.p, B.m);
  L.noncentral = (ipow(B.p, B.d) - L.rad.size()) * ipow(B.p, B.m);
  return L;
}

// lines of span(rad, v_i, v_j) off the radical, as indices into L.reps;
// combos falling into the radical are central and excluded
inline std::vector<int> pair_span_lines(const LineData& L, int i, int j) {
  std::vector<int> out;
  const Vec& vi = L.reps[i];
  const Vec& vj = L.reps[j];
  auto push = [&](Vec v) {
    if (L.rad.contains(v)) return;
    Vec r = v;
    int lead = 0;
    while (r[lead] == 0) ++lead;
    r = L.F.vscale(L.F.inv(r[lead]), r);
    // normalize modulo nothing: reps are plain normalized vectors, and
    // rad-shifted lines share C/Z with their unshifted class, so the
    // representative with zero radical part stands for all of them
    auto it = L.index.find(r);
    require(it != L.index.end(), "Internal", "line rep lookup failed");
    for (int k : out)
      if (k == it->second) return;
    out.push_back(it->second);
  };
  for (int c = 0; c < L.F.p; ++c) push(L.F.vadd(vi, L.F.vscale(c, vj)));
  push(vj);
  return out;
}

}  // namespace detail

inline LemmaReport lemma_check(const GroupValue& G, LemmaId id);

namespace detail {

inline LemmaReport lemma_check_bilinear(const GroupValue& G, LemmaId id) {
  const BilinearPGroup& B = G.bilinear();
  LemmaReport r;
  r.lemma = lemma_name(id);
  r.group = G.name();
  r.pass = true;
  LineData L = line_data(B);
  int n = (int)L.reps.size();
  PrimeField F = L.F;

  auto describe_line = [&](int i) {
    return G.describe(B.encode(L.reps[i], Vec(B.m, 0)));
  };

  switch (id) {
    case LemmaId::Well: {
      Subspace inter = Subspace::full(F, B.d);
      for (int i = 0; i < n; ++i) inter = inter.intersect(L.C[i]);
      r.checks = G.order();
      if (inter != L.rad) {
        r.pass = false;
        r.counterexample = "intersection of all centralizers differs from Z(G)";
      }
      break;
    }
    case LemmaId::ThreeE: {
      r.checks = L.noncentral;
      for (int i = 0; i < n && r.pass; ++i) {
        Subspace rhs = Subspace::full(F, B.d);
        for (int j = 0; j < n; ++j)
          if (L.C[i].contains(L.reps[j])) rhs = rhs.intersect(L.C[j]);
        if (rhs != L.Z[i]) {
          r.pass = false;
          r.counterexample = "Z(a) != intersection over C_G(a) at a = " + describe_line(i);
        }
      }
      break;
    }
    case LemmaId::Three1: {
      r.checks = L.noncentral * L.noncentral;
      for (int i = 0; i < n && r.pass; ++i)
        for (int j = 0; j < n; ++j)
          if (L.z_in_c[i][j] != L.commute[i][j]) {
            r.pass = false;
            r.counterexample = "Z(a) <= C_G(b) vs commuting disagree at a = " +
                               describe_line(i) + ", b = " + describe_line(j);
            break;
          }
      break;
    }
    case LemmaId::Three2: {
      r.checks = L.noncentral * L.noncentral;
      for (int i = 0; i < n && r.pass; ++i)
        for (int j = 0; j < n; ++j)
          if (L.z_in_c[i][j] != L.z_in_c[j][i]) {
            r.pass = false;
            r.counterexample = "Z(a) <= C_G(b) asymmetric at a = " +
                               describe_line(i) + ", b = " + describe_line(j);
            break;
          }
      break;
    }
    case LemmaId::ThreeF: {
      r.checks = L.noncentral * L.noncentral;
      for (int i = 0; i < n && r.pass; ++i)
        for (int j = 0; j < n; ++j) {
          bool abelian = L.commute[i][j];
          bool rhs = true;
          std::vector<int> lines = pair_span_lines(L, i, j);
          for (size_t x = 0; x < lines.size() && rhs; ++x)
            for (size_t y = 0; y < lines.size(); ++y)
              if (!L.z_in_c[lines[x]][lines[y]]) {
                rhs = false;
                break;
              }
          if (abelian != rhs) {
            r.pass = false;
            r.counterexample = "<a,b,Z(G)> abelian-criterion mismatch at a = " +
                               describe_line(i) + ", b = " + describe_line(j);
            break;
          }
        }
      break;
    }
    case LemmaId::ThreeHa: {
      for (const SubgroupHandle& A : enumerate_maximal_abelian(G)) {
        Subspace UA = A.uspace();
        for (const Vec& v : lin::line_reps(B, UA, L.rad)) {
          r.checks += L.line_weight;
          int i = L.index.at(v);
          if (!UA.contains(L.Z[i])) {
            r.pass = false;
            r.counterexample =
                "Z(a) escapes its maximal abelian subgroup at a = " + describe_line(i);
            break;
          }
        }
        if (!r.pass) break;
      }
      break;
    }
    case LemmaId::CentralizerAbelian: {
      std::vector<SubgroupHandle> maxab = enumerate_maximal_abelian(G);
      r.checks = L.noncentral;
      for (int i = 0; i < n && r.pass; ++i) {
        if (!lin::isotropic(B, L.C[i])) continue;  // centralizer not abelian
        SubgroupHandle C = SubgroupHandle::bilinear_split(
            G, L.C[i], Subspace::full(F, B.m));
        bool found = false;
        for (const SubgroupHandle& A : maxab)
          if (A == C) {
            found = true;
            break;
          }
        if (!found) {
          r.pass = false;
          r.counterexample =
              "abelian centralizer missing from the maximal abelian list at g = " +
              describe_line(i);
        }
      }
      break;
    }
    case LemmaId::Cyclic: {
      for (const SubgroupHandle& A : enumerate_maximal_abelian(G)) {
        r.checks += 1;
        CyclicCaseReport c = cyclic_case_check(G, A);
        if (c.applicable && !c.pass) {
          r.pass = false;
          r.counterexample = "cyclic-case centralizer mismatch, witness " +
                             G.describe(*c.witness);
          break;
        }
      }
      break;
    }
  }
  return r;
}

inline LemmaReport lemma_check_table(const GroupValue& G, LemmaId id) {
  LemmaReport r;
  r.lemma = lemma_name(id);
  r.group = G.name();
  r.pass = true;
  i64 N = G.order();
  SubgroupHandle Z = center(G);

  std::vector<i64> nc;  // noncentral elements, ascending
  for (i64 x = 0; x < N; ++x)
    if (!Z.contains(x)) nc.push_back(x);

  std::map<i64, SubgroupHandle> Cmap, Zmap;
  for (i64 x : nc) {
    Cmap.emplace(x, centralizer(G, x));
    Zmap.emplace(x, element_center(G, x));
  }
  auto commutes = [&](i64 a, i64 b) { return G.mul(a, b) == G.mul(b, a); };

  switch (id) {
    case LemmaId::Well: {
      std::optional<SubgroupHandle> inter;
      for (i64 x = 0; x < N; ++x) {
        SubgroupHandle C = centralizer(G, x);
        inter = inter ? inter->intersect(C) : C;
      }
      r.checks = N;
      if (*inter != Z) {
        r.pass = false;
        r.counterexample = "intersection of all centralizers differs from Z(G)";
      }
      break;
    }
    case LemmaId::ThreeE: {
      r.checks = (i64)nc.size();
      for (i64 a : nc) {
        std::optional<SubgroupHandle> rhs;
        for (i64 b : Cmap.at(a).elements()) {
          SubgroupHandle C = centralizer(G, b);
          rhs = rhs ? rhs->intersect(C) : C;
        }
        if (*rhs != Zmap.at(a)) {
          r.pass = false;
          r.counterexample = "Z(a) mismatch at a = " + G.describe(a);
          break;
        }
      }
      break;
    }
    case LemmaId::Three1: {
      r.checks = (i64)nc.size() * (i64)nc.size();
      for (i64 a : nc) {
        for (i64 b : nc)
          if (Cmap.at(b).contains(Zmap.at(a)) != commutes(a, b)) {
            r.pass = false;
            r.counterexample = "mismatch at a = " + G.describe(a) +
                               ", b = " + G.describe(b);
            break;
          }
        if (!r.pass) break;
      }
      break;
    }
    case LemmaId::Three2: {
      r.checks = (i64)nc.size() * (i64)nc.size();
      for (i64 a : nc) {
        for (i64 b : nc)
          if (Cmap.at(b).contains(Zmap.at(a)) != Cmap.at(a).contains(Zmap.at(b))) {
            r.pass = false;
            r.counterexample = "asymmetry at a = " + G.describe(a) +
                               ", b = " + G.describe(b);
            break;
          }
        if (!r.pass) break;
      }
      break;
    }
    case LemmaId::ThreeF: {
      r.checks = (i64)nc.size() * (i64)nc.size();
      for (i64 a : nc) {
        for (i64 b : nc) {
          SubgroupHandle H = Z.adjoined(a).adjoined(b);
          bool abelian = is_abelian(G, H);
          bool rhs = true;
          for (i64 x : H.elements()) {
            if (Z.contains(x)) continue;
            for (i64 y : H.elements()) {
              if (Z.contains(y)) continue;
              if (!Cmap.at(y).contains(Zmap.at(x))) {
                rhs = false;
                break;
              }
            }
            if (!rhs) break;
          }
          if (abelian != rhs) {
            r.pass = false;
            r.counterexample = "mismatch at a = " + G.describe(a) +
                               ", b = " + G.describe(b);
            break;
          }
        }
        if (!r.pass) break;
      }
      break;
    }
    case LemmaId::ThreeHa: {
      for (const SubgroupHandle& A : enumerate_maximal_abelian(G)) {
        for (i64 a : A.elements()) {
          if (Z.contains(a)) continue;
          r.checks += 1;
          if (!A.contains(Zmap.at(a))) {
            r.pass = false;
            r.counterexample = "Z(a) escapes A at a = " + G.describe(a);
            break;
          }
        }
        if (!r.pass) break;
      }
      break;
    }
    case LemmaId::CentralizerAbelian: {
      std::vector<SubgroupHandle> maxab = enumerate_maximal_abelian(G);
      r.checks = (i64)nc.size();
      for (i64 g : nc) {
        const SubgroupHandle& C = Cmap.at(g);
        if (!is_abelian(G, C)) continue;
        bool found = false;
        for (const SubgroupHandle& A : maxab)
          if (A == C) {
            found = true;
            break;
          }
        if (!found) {
          r.pass = false;
          r.counterexample =
              "abelian centralizer missing from list at g = " + G.describe(g);
          break;
        }
      }
      break;
    }
    case LemmaId::Cyclic: {
      for (const SubgroupHandle& A : enumerate_maximal_abelian(G)) {
        r.checks += 1;
        CyclicCaseReport c = cyclic_case_check(G, A);
        if (c.applicable && !c.pass) {
          r.pass = false;
          r.counterexample = "cyclic-case mismatch, witness " +
                             G.describe(*c.witness);
          break;
        }
      }
      break;
    }
  }
  return r;
}

}  // namespace detail

inline LemmaReport lemma_check(const GroupValue& G, LemmaId id) {
  if (G.is_bilinear()) return detail::lemma_check_bilinear(G, id);
  require(G.order() <= caps().max_table_order, "CapExceeded",
          "exhaustive lemma checks capped at |G| <= " +
              std::to_string(caps().max_table_order));
  return detail::lemma_check_table(G, id);
}

// the exhaustively-checked Section 2 subset
inline LemmaReport lemma_check_s2(const GroupValue& G, LemmaId id) {
  require(id == LemmaId::Well || id == LemmaId::ThreeE || id == LemmaId::Three1 ||
              id == LemmaId::Three2,
          "UnknownLemma", "not one of the element-pair lemmas");
  return lemma_check(G, id);
}

}  // namespace pgt
