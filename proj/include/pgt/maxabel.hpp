#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgt/centralizer.hpp"

namespace pgt {

inline bool is_abelian(const GroupValue& G, const SubgroupHandle& H) {
  if (!H.is_table_backed()) {
    const BilinearPGroup& B = G.bilinear();
    const auto& gens = H.bilinear_gens();
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j)
        if (!PrimeField::is_zero(B.commutator_map(gens[i].first, gens[j].first)))
          return false;
    return true;
  }
  std::vector<i64> e = H.elements();
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i + 1; j < e.size(); ++j)
      if (G.mul(e[i], e[j]) != G.mul(e[j], e[i])) return false;
  return true;
}

inline bool is_maximal_abelian(const GroupValue& G, const SubgroupHandle& H) {
  return is_abelian(G, H) && centralizer_of_subgroup(G, H) == H;
}

// greedy completion: adjoin the least centralizing element until self-centralizing
inline SubgroupHandle extend_to_maximal_abelian(const GroupValue& G,
                                                const SubgroupHandle& H) {
  require(is_abelian(G, H), "NotAbelian",
          "can only extend abelian subgroups to maximal abelian ones");
  SubgroupHandle A = H.join(center(G));
  while (true) {
    SubgroupHandle C = centralizer_of_subgroup(G, A);
    if (C == A) return A;
    i64 x = C.least_element_not_in(A);
    A = A.adjoined(x);
  }
}

// all maximal abelian subgroups, sorted by (order, canonical data).
// bilinear model: maximal isotropic subspaces above the radical, by backtracking;
// table model: maximal commuting closures grown from Z(G).
inline std::vector<SubgroupHandle> enumerate_maximal_abelian(const GroupValue& G) {
  std::vector<SubgroupHandle> out;
  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    require(ipow(B.p, B.d) <= caps().maxabel_bilinear_limit, "CapExceeded",
            "isotropic-subspace search capped at p^d <= " +
                std::to_string(caps().maxabel_bilinear_limit));
    PrimeField F{B.p};
    Subspace rad = lin::radical(B);
    Subspace zfull = Subspace::full(F, B.m);
    std::set<Subspace> visited, results;
    std::vector<Subspace> stack{rad};
    visited.insert(rad);
    while (!stack.empty()) {
      Subspace U = stack.back();
      stack.pop_back();
      Subspace P = lin::perp(B, U);  // contains U: U is isotropic by construction
      if (P == U) {
        results.insert(U);
        continue;
      }
      for (const Vec& w : lin::line_reps(B, P, U)) {
        Subspace U2 = U.sum(Subspace::span(F, B.d, {w}));
        if (visited.insert(U2).second) stack.push_back(U2);
      }
    }
    for (const Subspace& U : results)
      out.push_back(SubgroupHandle::bilinear_split(G, U, zfull));
  } else {
    require(G.order() <= caps().maxabel_table_limit, "CapExceeded",
            "table-model maximal abelian search capped at |G| <= " +
                std::to_string(caps().maxabel_table_limit));
    std::set<SubgroupHandle> visited, results;
    std::vector<SubgroupHandle> stack{center(G)};
    visited.insert(stack.back());
    while (!stack.empty()) {
      SubgroupHandle A = stack.back();
      stack.pop_back();
      SubgroupHandle C = centralizer_of_subgroup(G, A);
      if (C == A) {
        results.insert(A);
        continue;
      }
      std::vector<i64> aelems = A.elements();
      std::set<i64> coset_done;
      for (i64 x : C.elements()) {
        if (A.contains(x) || coset_done.count(x)) continue;
        for (i64 a : aelems) coset_done.insert(G.mul(a, x));
        SubgroupHandle A2 = A.adjoined(x);
        if (visited.insert(A2).second) stack.push_back(A2);
      }
    }
    out.assign(results.begin(), results.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ProductOfCentersReport {
  std::vector<i64> inputs;
  i64 product_size = 0;
  bool is_subgroup = false;
  bool is_abelian = false;
  bool equals_intersection = false;
  i64 intersection_size = 0;
  std::optional<SubgroupHandle> subgroup;  // present iff is_subgroup
  std::vector<i64> elements;               // the literal product set, sorted
};

// literal setwise product Z(a_1)Z(a_2)...Z(a_n), in the given order.
// Deliberately NOT assumed to be a subgroup; the report observes whether it is.
inline ProductOfCentersReport product_of_centers(const GroupValue& G,
                                                 const std::vector<i64>& elems) {
  require(!elems.empty(), "CentralElement", "need at least one noncentral element");
  ProductOfCentersReport r;
  r.inputs = elems;

  std::vector<i64> cur{G.identity()};
  std::optional<SubgroupHandle> inter;
  for (i64 a : elems) {
    SubgroupHandle Za = element_center(G, a);  // errors on central a
    std::vector<i64> next;
    next.reserve(cur.size() * (size_t)Za.size());
    for (i64 x : cur)
      for (i64 z : Za.elements()) next.push_back(G.mul(x, z));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
    SubgroupHandle Ca = centralizer(G, a);
    inter = inter ? inter->intersect(Ca) : Ca;
  }
  r.elements = cur;
  r.product_size = (i64)cur.size();
  r.intersection_size = inter->size();

  if (G.order() % r.product_size == 0) {
    SubgroupHandle H = SubgroupHandle::generated(G, cur);
    if (H.size() == r.product_size) {
      r.is_subgroup = true;
      r.subgroup = H;
    }
  }

  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    PrimeField F{B.p};
    Mat vs;
    for (i64 x : cur) vs.push_back(B.decode(x).first);
    r.is_abelian = lin::isotropic(B, Subspace::span(F, B.d, vs));
  } else {
    r.is_abelian = true;
    for (size_t i = 0; i < cur.size() && r.is_abelian; ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        if (G.mul(cur[i], cur[j]) != G.mul(cur[j], cur[i])) {
          r.is_abelian = false;
          break;
        }
  }

  r.equals_intersection =
      r.product_size == inter->size() && inter->elements() == cur;
  return r;
}

namespace detail {

struct FamilyAggregate {
  bool product_equals_A = false;
  bool intersection_equals_A = false;
};

// prod of Z(a) and intersection of C_G(a) over a in A\Z(G), compared with A;
// fast split-subgroup path for the bilinear model, literal set fold otherwise
inline FamilyAggregate family_aggregate(const GroupValue& G,
                                        const SubgroupHandle& A) {
  FamilyAggregate out;
  SubgroupHandle Z = center(G);
  if (G.is_bilinear() && A.is_split()) {
    const BilinearPGroup& B = G.bilinear();
    PrimeField F{B.p};
    Subspace rad = lin::radical(B);
    Subspace prodU = rad;
    Subspace interU = Subspace::full(F, B.d);
    for (const Vec& v : lin::line_reps(B, A.uspace(), rad)) {
      Subspace Cv = lin::kernel_of(B, v);
      prodU = prodU.sum(lin::perp(B, Cv));
      interU = interU.intersect(Cv);
    }
    Subspace zfull = Subspace::full(F, B.m);
    out.product_equals_A =
        A.zspace() == zfull && A.is_split() && prodU == A.uspace();
    out.intersection_equals_A =
        SubgroupHandle::bilinear_split(G, interU, zfull) == A;
    return out;
  }
  // the literal product need not be a subgroup when A is not maximal abelian
  std::vector<i64> prod = Z.elements();
  std::optional<SubgroupHandle> inter;
  for (i64 a : A.elements()) {
    if (Z.contains(a)) continue;
    SubgroupHandle Za = element_center(G, a);
    std::vector<i64> next;
    for (i64 x : prod)
      for (i64 z : Za.elements()) next.push_back(G.mul(x, z));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    prod = std::move(next);
    SubgroupHandle Ca = centralizer(G, a);
    inter = inter ? inter->intersect(Ca) : Ca;
  }
  require(inter.has_value(), "AllCentral", "A has no noncentral elements");
  out.product_equals_A = prod == A.elements();
  out.intersection_equals_A = *inter == A;
  return out;
}

}  // namespace detail

struct CharacterizationReport {
  bool maximal_abelian = false;       // abelian and self-centralizing
  bool product_equals = false;        // A = prod of Z(a) over a in A\Z(G)
  bool intersection_equals = false;   // A = intersection of C_G(a) over the same
  bool witness_subset_found = false;  // finite greedy witness subset reaches A
  std::vector<i64> witnesses;
  bool agree = false;
};

// the three equivalent descriptions of a maximal abelian subgroup,
// each evaluated independently
inline CharacterizationReport characterize_maximal_abelian(const GroupValue& G,
                                                           const SubgroupHandle& A) {
  CharacterizationReport r;
  r.maximal_abelian = is_maximal_abelian(G, A);

  SubgroupHandle Z = center(G);
  bool has_noncentral = !Z.contains(A);
  if (has_noncentral) {
    detail::FamilyAggregate fam = detail::family_aggregate(G, A);
    r.product_equals = fam.product_equals_A;
    r.intersection_equals = fam.intersection_equals_A;

    // greedy witness hunt; escapes A or stalls exactly when no subset exists
    SubgroupHandle P = Z;
    bool ok = true;
    while (ok && P != A) {
      if (!A.contains(P)) {
        ok = false;
        break;
      }
      i64 g = A.least_element_not_in(P);
      SubgroupHandle Zg = element_center(G, g);
      r.witnesses.push_back(g);
      P = P.join(Zg);
    }
    if (ok && P == A && A.contains(P)) {
      SubgroupHandle I = centralizer(G, r.witnesses[0]);
      for (size_t i = 1; i < r.witnesses.size(); ++i)
        I = I.intersect(centralizer(G, r.witnesses[i]));
      r.witness_subset_found = I == A;
    }
    if (!r.witness_subset_found) r.witnesses.clear();
  }

  bool all = r.maximal_abelian && r.product_equals && r.intersection_equals &&
             r.witness_subset_found;
  bool none = !r.maximal_abelian && !r.product_equals && !r.intersection_equals &&
              !r.witness_subset_found;
  r.agree = all || none;
  return r;
}

struct BoundCertificate {
  std::string group;
  int p = 0;
  int a = 0;  // |A : Z(G)| = p^a
  int t = 0;
  std::vector<i64> witnesses;
  std::vector<i64> product_chain;       // |prod_{j<=i} Z(g_j)|, strictly increasing
  std::vector<i64> intersection_chain;  // |inter_{j<=i} C_G(g_j)|
  int n_total = 0;
  int m = 0;
  int b = 0;  // max |G:C_G(x)| exponent over x in A\Z(G)
  int l = 0;  // max |Z(x):Z(G)| exponent over x in A\Z(G)
  int b_global = 0;
  int l_global = 0;
  bool holds = false;         // a*(b+l) >= n_total
  bool holds_global = false;  // same with the global parameters
  bool product_equals_A = false;
  bool intersection_equals_A = false;
};

// greedy witness chain certifying the lower bound a >= n_total/(b+l)
inline BoundCertificate bound_certificate(const GroupValue& G,
                                          const SubgroupHandle& A) {
  int p = group_prime(G);
  require(p != 0 && plog(p, G.order()) >= 0, "NotPGroup",
          "the bound applies to p-groups; |G| = " + std::to_string(G.order()));
  SubgroupHandle Z = center(G);
  require(Z.size() != G.order(), "AbelianGroup",
          "the bound is about nonabelian p-groups");
  require(is_maximal_abelian(G, A), "NotMaximalAbelian",
          "certificate requires a maximal abelian subgroup");

  BoundCertificate c;
  c.group = G.name();
  c.p = p;
  c.a = plog(p, A.size() / Z.size());
  c.m = plog(p, Z.size());
  c.n_total = plog(p, G.order()) - c.m;

  // restricted parameters, over A \ Z(G)
  if (G.is_bilinear()) {
    const BilinearPGroup& B = G.bilinear();
    Subspace rad = lin::radical(B);
    for (const Vec& v : lin::line_reps(B, A.uspace(), rad)) {
      c.b = std::max(c.b, lin::adjoint_rank(B, v));
      c.l = std::max(c.l, lin::perp(B, lin::kernel_of(B, v)).dim() - rad.dim());
    }
  } else {
    for (i64 x : A.elements()) {
      if (Z.contains(x)) continue;
      c.b = std::max(c.b, plog(p, G.order() / centralizer(G, x).size()));
      c.l = std::max(c.l, plog(p, element_center(G, x).size() / Z.size()));
    }
  }
  GroupParameters gp = parameters(G);
  c.b_global = gp.b;
  c.l_global = gp.l;

  // greedy chain: g_i is the least element of A outside the running product
  SubgroupHandle P = Z;
  std::optional<SubgroupHandle> I;
  while (P != A) {
    i64 g = A.least_element_not_in(P);
    c.witnesses.push_back(g);
    P = P.join(element_center(G, g));
    I = I ? I->intersect(centralizer(G, g)) : centralizer(G, g);
    c.product_chain.push_back(P.size());
    c.intersection_chain.push_back(I->size());
    require(A.contains(P), "NotMaximalAbelian",
            "product of element centers escaped A; A is not maximal abelian");
  }
  c.t = (int)c.witnesses.size();
  c.product_equals_A = P == A;
  c.intersection_equals_A = I.has_value() && *I == A;
  c.holds = (i64)c.a * (c.b + c.l) >= c.n_total;
  c.holds_global = (i64)c.a * (c.b_global + c.l_global) >= c.n_total;
  return c;
}

struct CyclicCaseReport {
  bool applicable = false;  // A/Z(G) is cyclic
  bool index_prime = false;
  std::optional<i64> witness;  // least a with <a, Z(G)> = A
  bool pass = false;           // A = C_G(a)
};

// when A/Z(G) is cyclic, A must equal the centralizer of any generator
inline CyclicCaseReport cyclic_case_check(const GroupValue& G,
                                          const SubgroupHandle& A) {
  CyclicCaseReport r;
  if (!is_maximal_abelian(G, A)) return r;
  SubgroupHandle Z = center(G);
  i64 index = A.size() / Z.size();
  if (index == 1) return r;

  for (i64 x : A.elements()) {
    if (Z.contains(x)) continue;
    if (Z.adjoined(x) == A) {
      r.witness = x;
      break;
    }
  }
  if (!r.witness) return r;
  r.applicable = true;
  int pf = 2;
  while (index % pf != 0) ++pf;
  r.index_prime = index == pf;
  r.pass = centralizer(G, *r.witness) == A;
  return r;
}

}  // namespace pgt
