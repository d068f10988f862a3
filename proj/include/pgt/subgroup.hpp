#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "pgt/group.hpp"

namespace pgt {

// Subgroup of a GroupValue.
//
// Table model: the sorted member index list.
//
// Bilinear model: a class-<=2 normal form.  The subgroup is
//   { g_1^{c_1} ... g_r^{c_r} (0, w) : c in GF(p)^r, w in W0 }
// where the generator v-parts form an RREF basis, generator z-parts are
// canonical coset representatives mod W0, and W0 contains every pairwise
// commutator value B(v_i, v_j).  The form is unique per subgroup, so equality
// is bitwise.  Subgroups containing the center have all z-parts zero and W0
// the full central space.
class SubgroupHandle {
 public:
  SubgroupHandle() = default;

  static SubgroupHandle from_elements(const GroupValue& G, std::vector<i64> elems) {
    if (G.is_table()) {
      std::sort(elems.begin(), elems.end());
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
      verify_closed_table(G, elems);
      return make_table(G, std::move(elems));
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    SubgroupHandle h = trivial(G);
    for (i64 e : elems) h = h.adjoined(e);
    // a closed set generates exactly itself
    require(h.size() == (i64)elems.size(), "NotSubgroup", "element set is not closed");
    return h;
  }

  static SubgroupHandle generated(const GroupValue& G, const std::vector<i64>& gens) {
    if (G.is_table()) return make_table(G, table_closure(G, gens));
    SubgroupHandle h = trivial(G);
    for (i64 e : gens) h = h.adjoined(e);
    return h;
  }

  static SubgroupHandle trivial(const GroupValue& G) {
    if (G.is_table()) return make_table(G, {G.identity()});
    const BilinearPGroup& B = G.bilinear();
    SubgroupHandle h;
    h.G_ = G;
    h.zsub_ = Subspace::zero(PrimeField{B.p}, B.m);
    return h;
  }

  static SubgroupHandle whole(const GroupValue& G) {
    if (G.is_table()) {
      std::vector<i64> all(G.order());
      for (i64 i = 0; i < G.order(); ++i) all[(size_t)i] = i;
      return make_table(G, std::move(all));
    }
    const BilinearPGroup& B = G.bilinear();
    PrimeField F{B.p};
    return bilinear_split(G, Subspace::full(F, B.d), Subspace::full(F, B.m));
  }

  // subgroup {(v, z) : v in U, z in any coset consistent with W}; requires
  // B(U, U) <= W so that the pair is actually closed
  static SubgroupHandle bilinear_split(const GroupValue& G, const Subspace& U,
                                       const Subspace& W) {
    const BilinearPGroup& B = G.bilinear();
    require(U.ambient() == B.d && W.ambient() == B.m, "DimensionMismatch",
            "split subgroup spaces must match (d, m)");
    for (const Vec& u1 : U.basis())
      for (const Vec& u2 : U.basis())
        require(W.contains(B.commutator_map(u1, u2)), "NotSubgroup",
                "B(U, U) escapes W: the pair is not closed");
    SubgroupHandle h;
    h.G_ = G;
    h.zsub_ = W;
    for (const Vec& u : U.basis()) h.gens_.emplace_back(u, Vec(B.m, 0));
    h.canonicalize();
    return h;
  }

  const GroupValue& group() const { return G_; }
  bool is_table_backed() const { return G_.is_table(); }

  i64 size() const {
    if (G_.is_table()) return (i64)elems_.size();
    return ipow(G_.bilinear().p, (int)gens_.size() + zsub_.dim());
  }

  bool contains(i64 x) const {
    if (G_.is_table()) return std::binary_search(elems_.begin(), elems_.end(), x);
    const BilinearPGroup& B = G_.bilinear();
    PrimeField F{B.p};
    auto [v, z] = B.decode(x);
    for (const auto& [gv, gz] : gens_) {
      int lead = lead_col(gv);
      if (v[lead] != 0) {
        int c = v[lead];
        v = F.vsub(v, F.vscale(c, gv));
        z = F.vsub(z, F.vscale(c, gz));
      }
    }
    if (!PrimeField::is_zero(v)) return false;
    return zsub_.contains(z);
  }

  bool contains(const SubgroupHandle& other) const {
    if (G_.is_table()) {
      return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(),
                           other.elems_.end());
    }
    const BilinearPGroup& B = G_.bilinear();
    for (const auto& [gv, gz] : other.gens_)
      if (!contains(B.encode(gv, gz))) return false;
    for (const Vec& w : other.zsub_.basis())
      if (!contains(B.encode(Vec(B.d, 0), w))) return false;
    return true;
  }

  // sorted canonical index list
  std::vector<i64> elements() const {
    if (G_.is_table()) return elems_;
    const BilinearPGroup& B = G_.bilinear();
    PrimeField F{B.p};
    std::vector<i64> out;
    out.reserve((size_t)size());
    std::vector<Vec> zs = zsub_.enumerate();
    int r = (int)gens_.size();
    Vec c(r, 0);
    while (true) {
      Vec v(B.d, 0), z(B.m, 0);
      for (int i = 0; i < r; ++i) {
        if (c[i] == 0) continue;
        Vec step_v = F.vscale(c[i], gens_[i].first);
        Vec step_z = F.vscale(c[i], gens_[i].second);
        z = F.vadd(z, F.vadd(step_z, F.vscale(B.gamma, B.commutator_map(v, step_v))));
        v = F.vadd(v, step_v);
      }
      for (const Vec& w : zs) out.push_back(B.encode(v, F.vadd(z, w)));
      int i = r - 1;
      while (i >= 0 && c[i] == B.p - 1) c[i--] = 0;
      if (i < 0) break;
      ++c[i];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  i64 least_element_not_in(const SubgroupHandle& excluded) const {
    std::vector<i64> mine = elements();
    for (i64 e : mine)
      if (!excluded.contains(e)) return e;
    return -1;
  }

  SubgroupHandle adjoined(i64 x) const {
    if (G_.is_table()) {
      std::vector<i64> gens = elems_;
      gens.push_back(x);
      return make_table(G_, table_closure(G_, gens));
    }
    if (contains(x)) return *this;
    const BilinearPGroup& B = G_.bilinear();
    SubgroupHandle h = *this;
    auto [v, z] = B.decode(x);
    h.gens_.emplace_back(std::move(v), std::move(z));
    h.canonicalize();
    return h;
  }

  SubgroupHandle join(const SubgroupHandle& other) const {
    if (G_.is_table()) {
      std::vector<i64> gens = elems_;
      gens.insert(gens.end(), other.elems_.begin(), other.elems_.end());
      return make_table(G_, table_closure(G_, gens));
    }
    SubgroupHandle h = *this;
    h.zsub_ = h.zsub_.sum(other.zsub_);
    h.gens_.insert(h.gens_.end(), other.gens_.begin(), other.gens_.end());
    h.canonicalize();
    return h;
  }

  SubgroupHandle intersect(const SubgroupHandle& other) const {
    if (G_.is_table()) {
      std::vector<i64> common;
      std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                            other.elems_.end(), std::back_inserter(common));
      return make_table(G_, std::move(common));
    }
    if (is_split() && other.is_split()) {
      return bilinear_split(G_, uspace().intersect(other.uspace()),
                            zsub_.intersect(other.zsub_));
    }
    // generic fallback: filter the smaller side elementwise
    const SubgroupHandle& small = size() <= other.size() ? *this : other;
    const SubgroupHandle& big = size() <= other.size() ? other : *this;
    SubgroupHandle h = trivial(G_);
    for (i64 e : small.elements())
      if (big.contains(e)) h = h.adjoined(e);
    return h;
  }

  bool operator==(const SubgroupHandle& o) const {
    if (G_.is_table()) return elems_ == o.elems_;
    return gens_ == o.gens_ && zsub_ == o.zsub_;
  }
  bool operator!=(const SubgroupHandle& o) const { return !(*this == o); }

  // deterministic ordering for sorted subgroup lists
  bool operator<(const SubgroupHandle& o) const {
    if (size() != o.size()) return size() < o.size();
    if (G_.is_table()) return elems_ < o.elems_;
    if (gens_ != o.gens_) return gens_ < o.gens_;
    return zsub_ < o.zsub_;
  }

  // --- bilinear-only views ---
  bool is_split() const {
    if (G_.is_table()) return false;
    for (const auto& [gv, gz] : gens_)
      if (!PrimeField::is_zero(gz)) return false;
    return true;
  }
  Subspace uspace() const {
    const BilinearPGroup& B = G_.bilinear();
    PrimeField F{B.p};
    Mat rows;
    for (const auto& [gv, gz] : gens_) rows.push_back(gv);
    return Subspace::span(F, B.d, std::move(rows));
  }
  const Subspace& zspace() const { return zsub_; }
  const std::vector<std::pair<Vec, Vec>>& bilinear_gens() const { return gens_; }

  // closure + inverse + identity sanity sweep; used by tests
  bool verify_subgroup_axioms() const {
    std::vector<i64> e = elements();
    std::unordered_set<i64> s(e.begin(), e.end());
    if (!s.count(G_.identity())) return false;
    for (i64 x : e) {
      if (!s.count(G_.inv(x))) return false;
      for (i64 y : e)
        if (!s.count(G_.mul(x, y))) return false;
    }
    return true;
  }

 private:
  static SubgroupHandle make_table(const GroupValue& G, std::vector<i64> elems) {
    SubgroupHandle h;
    h.G_ = G;
    h.elems_ = std::move(elems);
    return h;
  }

  static void verify_closed_table(const GroupValue& G, const std::vector<i64>& elems) {
    std::unordered_set<i64> s(elems.begin(), elems.end());
    require(s.count(G.identity()) > 0, "NotSubgroup", "identity missing");
    for (i64 x : elems)
      for (i64 y : elems)
        require(s.count(G.mul(x, y)) > 0, "NotSubgroup",
                "set not closed under the product");
  }

  static std::vector<i64> table_closure(const GroupValue& G, const std::vector<i64>& gens) {
    std::vector<i64> members{G.identity()};
    std::unordered_set<i64> seen{G.identity()};
    for (i64 g : gens)
      if (seen.insert(g).second) members.push_back(g);
    for (size_t head = 0; head < members.size(); ++head) {
      for (size_t j = 0; j < members.size(); ++j) {
        i64 a = G.mul(members[head], members[j]);
        if (seen.insert(a).second) members.push_back(a);
        i64 b = G.mul(members[j], members[head]);
        if (seen.insert(b).second) members.push_back(b);
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  static int lead_col(const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return (int)i;
    return -1;
  }

  void canonicalize() {
    const BilinearPGroup& B = G_.bilinear();
    PrimeField F{B.p};
    // close W0 under the commutators of the generating set
    Mat zrows;
    for (const Vec& w : zsub_.basis()) zrows.push_back(w);
    for (size_t i = 0; i < gens_.size(); ++i)
      for (size_t j = i + 1; j < gens_.size(); ++j)
        zrows.push_back(B.commutator_map(gens_[i].first, gens_[j].first));
    zsub_ = Subspace::span(F, B.m, std::move(zrows));

    // RREF over the v-parts, z carried along (valid mod W0)
    std::vector<std::pair<Vec, Vec>> rows = std::move(gens_);
    gens_.clear();
    size_t rr = 0;
    for (int col = 0; col < B.d && rr < rows.size(); ++col) {
      size_t sel = rr;
      while (sel < rows.size() && rows[sel].first[col] == 0) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[rr], rows[sel]);
      int iv = F.inv(rows[rr].first[col]);
      rows[rr].first = F.vscale(iv, rows[rr].first);
      rows[rr].second = F.vscale(iv, rows[rr].second);
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i == rr || rows[i].first[col] == 0) continue;
        int c = rows[i].first[col];
        rows[i].first = F.vsub(rows[i].first, F.vscale(c, rows[rr].first));
        rows[i].second = F.vsub(rows[i].second, F.vscale(c, rows[rr].second));
      }
      ++rr;
    }
    // leftover rows have v = 0: their z-parts enlarge W0
    bool grew = false;
    for (size_t i = rr; i < rows.size(); ++i)
      if (!PrimeField::is_zero(rows[i].second)) {
        if (!zsub_.contains(rows[i].second)) grew = true;
        Mat zr;
        for (const Vec& w : zsub_.basis()) zr.push_back(w);
        zr.push_back(rows[i].second);
        zsub_ = Subspace::span(F, B.m, std::move(zr));
      }
    (void)grew;
    rows.resize(rr);
    for (auto& [v, z] : rows) z = zsub_.reduce(z);
    gens_ = std::move(rows);
  }

  GroupValue G_;
  std::vector<i64> elems_;                  // table backend
  std::vector<std::pair<Vec, Vec>> gens_;   // bilinear backend
  Subspace zsub_;
};

inline SubgroupHandle subgroup_from_generators(const GroupValue& G,
                                               const std::vector<i64>& gens) {
  return SubgroupHandle::generated(G, gens);
}

}  // namespace pgt
