// Fusion system F_S(G) of a finite group at a prime p, over a canonically
// chosen Sylow p-subgroup S. Objects are the subgroups of S; morphisms are
// restrictions of conjugation maps by elements of G.
//
// Out_F(Q) is computed as N_G(Q)/(Q C_G(Q)), which the N/C theorem makes
// isomorphic to Aut_F(Q)/Inn(Q); strong closure is tested elementwise
// against G-conjugation into S. Both shortcuts are exact for fusion systems
// of the form F_S(G), the only kind built here.
#pragma once

#include <algorithm>
#include <memory>
#include <unordered_map>
#include <vector>

#include "fusionlab/context.hpp"
#include "fusionlab/group.hpp"
#include "fusionlab/props.hpp"

namespace fusionlab {

struct FusionMorphism {
  int source_idx = -1;
  int target_idx = -1;
  int witness = -1;          // one g inducing the map
  std::vector<int> domain;   // members of the source, ascending
  std::vector<int> image;    // image[i] = domain[i]^witness
};

// Does X contain a strongly p-embedded subgroup: a proper H with p | |H| and
// p not dividing |H n H^g| for every g outside H?
inline bool has_strongly_p_embedded(const Group& x, int p, int max_subgroups = 100000) {
  if (x.order % p != 0) return false;
  SubgroupLattice lat = all_subgroups(x, max_subgroups);
  for (int i = 0; i < lat.size(); ++i) {
    const ElemSet& h = lat.at(i);
    if (h.count() == x.order || h.count() % p != 0) continue;
    bool ok = true;
    for (int c = 0; c < x.order && ok; ++c) {
      if (h.test(c)) continue;
      if ((h & conjugate_subgroup(x, h, c)).count() % p == 0) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

class FusionSystem {
 public:
  std::shared_ptr<GroupContext> ctx;
  int p = 0;
  int sylow_idx = -1;
  std::vector<int> objects;  // lattice indices of subgroups of S, canonical order

  // sylow_override < 0 picks the first Sylow p-subgroup in canonical order.
  FusionSystem(std::shared_ptr<GroupContext> context, int prime, int sylow_override = -1)
      : ctx(std::move(context)), p(prime) {
    detail::precondition(is_prime(p), "fusion system prime must be prime");
    detail::precondition(ctx->g.order % p == 0,
                         "prime " + std::to_string(p) + " does not divide |" + ctx->g.id + "|");
    if (sylow_override >= 0) {
      sylow_idx = sylow_override;
      detail::require(ctx->sub(sylow_idx).count() == p_part(ctx->g.order, p),
                      "sylow override is not a Sylow p-subgroup");
    } else {
      sylow_idx = ctx->sylows_in(ctx->g.full_set(), p).front();
    }
    objects = ctx->subgroups_in(ctx->sub(sylow_idx));
  }

  const ElemSet& sylow() const { return ctx->sub(sylow_idx); }
  const ElemSet& obj_set(int idx) const { return ctx->sub(idx); }

  bool is_object(int idx) const { return ctx->sub(idx).subset_of(sylow()); }
  void require_object(int idx) const {
    detail::precondition(is_object(idx), "subgroup is not contained in the Sylow subgroup S");
  }

  // All objects F-conjugate to P: the G-conjugates of P that land inside S.
  const std::vector<int>& f_class(int obj) {
    require_object(obj);
    auto it = fclass_.find(obj);
    if (it != fclass_.end()) return it->second;
    const SubgroupLattice& lat = ctx->lattice();
    std::vector<int> cls;
    for (int j : lat.conj_classes[static_cast<size_t>(lat.conj_class_id[static_cast<size_t>(obj)])])
      if (lat.at(j).subset_of(sylow())) cls.push_back(j);
    return fclass_.emplace(obj, std::move(cls)).first->second;
  }

  // All distinct conjugation maps P -> Q, deduplicated by full image array;
  // witness is the smallest inducing element.
  std::vector<FusionMorphism> morphism_set(int p_idx, int q_idx) {
    require_object(p_idx);
    require_object(q_idx);
    const ElemSet& src = ctx->sub(p_idx);
    const ElemSet& dst = ctx->sub(q_idx);
    std::vector<int> dom = src.members();
    std::vector<FusionMorphism> out;
    std::vector<std::vector<int>> seen;
    for (int w = 0; w < ctx->g.order; ++w) {
      std::vector<int> img(dom.size());
      bool inside = true;
      for (size_t i = 0; i < dom.size(); ++i) {
        img[i] = ctx->g.conj(dom[i], w);
        if (!dst.test(img[i])) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      if (std::find(seen.begin(), seen.end(), img) != seen.end()) continue;
      seen.push_back(img);
      FusionMorphism m;
      m.source_idx = p_idx;
      m.target_idx = q_idx;
      m.witness = w;
      m.domain = dom;
      m.image = std::move(img);
      out.push_back(std::move(m));
    }
    return out;
  }

  // No G-conjugate of an element of P lands in S outside of P.
  bool strongly_closed(int obj) {
    require_object(obj);
    auto it = strongly_closed_.find(obj);
    if (it != strongly_closed_.end()) return it->second != 0;
    const ElemSet& pset = ctx->sub(obj);
    const ElemSet& s = sylow();
    bool ok = true;
    pset.for_each([&](int x) {
      if (!ok) return;
      for (int y : ctx->element_classes()[static_cast<size_t>(ctx->element_class_of(x))])
        if (s.test(y) && !pset.test(y)) {
          ok = false;
          return;
        }
    });
    strongly_closed_.emplace(obj, ok ? 1 : 0);
    return ok;
  }

  std::vector<int> strongly_closed_subgroups() {
    std::vector<int> out;
    for (int obj : objects)
      if (strongly_closed(obj)) out.push_back(obj);
    return out;
  }

  bool fully_normalized(int obj) {
    require_object(obj);
    int mine = n_in_s_count(obj);
    for (int q : f_class(obj))
      if (n_in_s_count(q) > mine) return false;
    return true;
  }

  // C_S(Q) <= Q for every F-conjugate Q of the object.
  bool f_centric(int obj) {
    require_object(obj);
    auto it = centric_.find(obj);
    if (it != centric_.end()) return it->second != 0;
    bool ok = true;
    for (int q : f_class(obj))
      if (!centralizer_in(ctx->g, sylow(), ctx->sub(q)).subset_of(ctx->sub(q))) {
        ok = false;
        break;
      }
    centric_.emplace(obj, ok ? 1 : 0);
    return ok;
  }

  // Out_F(Q) = N_G(Q) / (Q C_G(Q)).
  Group out_f(int obj) {
    require_object(obj);
    const ElemSet& q = ctx->sub(obj);
    int n_idx = ctx->normalizer_idx(obj);
    int c_idx = ctx->centralizer_idx(obj);
    ElemSet qc = product_set(ctx->g, q, ctx->sub(c_idx));
    detail::require(is_subgroup_set(ctx->g, qc), "Q C_G(Q) failed to be a subgroup");
    const Realized& r = ctx->realized(n_idx);
    Quotient quo = quotient_group(r.grp, r.restrict(qc));
    return quo.grp;
  }

  bool essential(int obj) {
    if (!f_centric(obj) || !fully_normalized(obj)) return false;
    return has_strongly_p_embedded(out_f(obj), p, ctx->max_subgroups);
  }

  // E*_F: the essential objects together with S itself.
  std::vector<int> essential_star() {
    std::vector<int> out;
    for (int obj : objects)
      if (obj == sylow_idx || essential(obj)) out.push_back(obj);
    return out;
  }

  struct SupersolvableResult {
    bool value = false;
    std::vector<int> chain;  // lattice indices 1 = S_0 < ... < S_n = S
  };

  // Chain of strongly F-closed subgroups from 1 to S with cyclic steps,
  // searched depth-first in canonical order; the first witness is returned.
  SupersolvableResult supersolvable() {
    std::vector<int> closed = strongly_closed_subgroups();
    for (int c : closed)
      detail::require(normalizes(ctx->g, sylow(), ctx->sub(c)),
                      "strongly closed subgroup is not normal in S");
    SupersolvableResult res;
    res.chain.push_back(ctx->trivial_idx());
    if (dfs_chain(closed, res.chain)) {
      res.value = true;
      return res;
    }
    res.chain.clear();
    return res;
  }

  // N_F(Q) = F_{N_S(Q)}(N_G(Q)), valid when Q is fully normalized.
  FusionSystem normalizer_system(int obj) {
    require_object(obj);
    detail::precondition(fully_normalized(obj),
                         "normalizer fusion system requires a fully normalized subgroup");
    const ElemSet& n_g = ctx->sub(ctx->normalizer_idx(obj));
    ElemSet n_s = normalizer_in(ctx->g, sylow(), ctx->sub(obj));
    Realized r = realize_subgroup(ctx->g, n_g);
    auto nctx = std::make_shared<GroupContext>(r.grp, ctx->max_subgroups);
    ElemSet local_s = r.restrict(n_s);
    detail::require(local_s.count() == p_part(r.grp.order, p),
                    "N_S(Q) is not a Sylow p-subgroup of N_G(Q); contradicts full normalization");
    return FusionSystem(nctx, p, nctx->sub_index(local_s));
  }

 private:
  std::unordered_map<int, std::vector<int>> fclass_;
  std::unordered_map<int, char> strongly_closed_;
  std::unordered_map<int, char> centric_;
  std::unordered_map<int, int> n_in_s_;

  int n_in_s_count(int obj) {
    auto it = n_in_s_.find(obj);
    if (it != n_in_s_.end()) return it->second;
    int n = normalizer_in(ctx->g, sylow(), ctx->sub(obj)).count();
    n_in_s_.emplace(obj, n);
    return n;
  }

  bool cyclic_step(int small, int big) {
    // small is normal in big (both are normal in S), so the quotient exists.
    const Realized& r = ctx->realized(big);
    Quotient quo = quotient_group(r.grp, r.restrict(ctx->sub(small)));
    return is_cyclic_subgroup(quo.grp, quo.grp.full_set());
  }

  bool dfs_chain(const std::vector<int>& closed, std::vector<int>& chain) {
    int cur = chain.back();
    if (cur == sylow_idx) return true;
    for (int next : closed) {
      if (!ctx->sub(cur).proper_subset_of(ctx->sub(next))) continue;
      if (!cyclic_step(cur, next)) continue;
      chain.push_back(next);
      if (dfs_chain(closed, chain)) return true;
      chain.pop_back();
    }
    return false;
  }
};

}  // namespace fusionlab
