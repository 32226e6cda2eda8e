// Characteristic subgroups: Frattini subgroup, normal core, p-core, Fitting
// subgroup, components and layer, generalized Fitting subgroup, the
// hypercenter for the supersolvable formation, and the nilpotent residual.
//
// All functions take lattice indices relative to a GroupContext and return
// lattice indices, so results compose without re-lookups.
#pragma once

#include <memory>

#include "fusionlab/context.hpp"
#include "fusionlab/props.hpp"

namespace fusionlab {

// Frattini subgroup of H: intersection of the maximal subgroups of H, with
// Phi(H) = H when H is trivial (no maximal subgroups to intersect).
inline int frattini_in(GroupContext& ctx, int h_idx) {
  auto it = ctx.frattini_cache_.find(static_cast<uint64_t>(h_idx));
  if (it != ctx.frattini_cache_.end()) return it->second;
  const ElemSet& h = ctx.sub(h_idx);
  std::vector<int> maxes = ctx.maximal_subgroups_in(h);
  ElemSet acc = h;
  for (int m : maxes) acc &= ctx.sub(m);
  int out = ctx.sub_index(acc);
  ctx.frattini_cache_.emplace(static_cast<uint64_t>(h_idx), out);
  return out;
}

// Largest subgroup of H normal in U: the intersection of the U-conjugates of H.
inline int normal_core_in(GroupContext& ctx, int u_idx, int h_idx) {
  uint64_t key = GroupContext::pack(u_idx, h_idx);
  auto it = ctx.core_cache_.find(key);
  if (it != ctx.core_cache_.end()) return it->second;
  const ElemSet& h = ctx.sub(h_idx);
  ElemSet acc = h;
  ctx.sub(u_idx).for_each([&](int c) { acc &= conjugate_subgroup(ctx.g, h, c); });
  int out = ctx.sub_index(acc);
  ctx.core_cache_.emplace(key, out);
  return out;
}

// O_p(U): intersection of the Sylow p-subgroups of U.
inline int p_core_in(GroupContext& ctx, const ElemSet& u, int p) {
  std::vector<int> syl = ctx.sylows_in(u, p);
  ElemSet acc = ctx.sub(syl.front());
  for (size_t i = 1; i < syl.size(); ++i) acc &= ctx.sub(syl[i]);
  return ctx.sub_index(acc);
}

// Fitting subgroup F(U): join of the p-cores over the primes dividing |U|.
// Checked against its defining property (largest nilpotent normal subgroup).
inline int fitting_in(GroupContext& ctx, const ElemSet& u) {
  ElemSet acc = ElemSet::single(ctx.g.order, 0);
  for (int p : prime_factors(u.count())) acc |= ctx.sub(p_core_in(ctx, u, p));
  ElemSet fit = generated_subgroup(ctx.g, acc);
  detail::require(normalizes(ctx.g, u, fit) && is_nilpotent_in(ctx, fit),
                  "Fitting subgroup is not nilpotent normal in '" + ctx.g.id + "'");
  for (int i : ctx.normal_in(u))
    if (is_nilpotent_in(ctx, ctx.sub(i)))
      detail::require(ctx.sub(i).subset_of(fit),
                      "nilpotent normal subgroup escapes the Fitting subgroup in '" + ctx.g.id + "'");
  return ctx.sub_index(fit);
}

// Components of U: subnormal quasisimple subgroups.
inline std::vector<int> components_in(GroupContext& ctx, const ElemSet& u) {
  std::vector<int> out;
  for (int i : ctx.subgroups_in(u)) {
    if (ctx.sub(i).count() < 60) continue;
    if (!is_quasisimple(ctx, i)) continue;
    if (!ctx.is_subnormal_in(u, ctx.sub(i))) continue;
    out.push_back(i);
  }
  return out;
}

// Layer E(U): subgroup generated by the components.
inline int layer_in(GroupContext& ctx, const ElemSet& u) {
  ElemSet acc = ElemSet::single(ctx.g.order, 0);
  for (int c : components_in(ctx, u)) acc |= ctx.sub(c);
  return ctx.sub_index(generated_subgroup(ctx.g, acc));
}

// Generalized Fitting subgroup F*(U) = E(U) F(U). Its defining property,
// containing its own centralizer in U, is asserted.
inline int generalized_fitting_in(GroupContext& ctx, const ElemSet& u) {
  ElemSet acc = ctx.sub(layer_in(ctx, u)) | ctx.sub(fitting_in(ctx, u));
  ElemSet fstar = generated_subgroup(ctx.g, acc);
  detail::require(centralizer_in(ctx.g, u, fstar).subset_of(fstar),
                  "generalized Fitting subgroup does not contain its centralizer in '" +
                      ctx.g.id + "'");
  return ctx.sub_index(fstar);
}

// Hypercenter for the supersolvable formation: the last term of the series
// 1 = Z_0 <= Z_1 <= ... where Z_{i+1}/Z_i is the product of all minimal
// normal subgroups of G/Z_i that have prime order. G is supersolvable
// exactly when the series reaches G.
inline int u_hypercenter(GroupContext& ctx) {
  int z_idx = ctx.trivial_idx();
  while (true) {
    const ElemSet& z = ctx.sub(z_idx);
    if (z.count() == ctx.g.order) return z_idx;
    const auto& qc = ctx.quotient_ctx(z_idx);
    const Group& q = qc.ctx->g;
    ElemSet socle_part(q.order);
    socle_part.set(0);
    for (const ElemSet& m : minimal_normal_subgroups_direct(q))
      if (is_prime(m.count())) socle_part |= m;
    ElemSet grown = generated_subgroup(q, socle_part);
    if (grown.count() == 1) return z_idx;
    z_idx = ctx.sub_index(qc.q.preimage_of(grown));
  }
}

// Nilpotent residual G^N: intersection of the normal subgroups with
// nilpotent quotient. The intersection itself must have nilpotent quotient
// (nilpotent groups form a formation closed under subdirect products), which
// is asserted.
inline int nilpotent_residual(GroupContext& ctx) {
  ElemSet acc = ctx.g.full_set();
  const SubgroupLattice& lat = ctx.lattice();
  for (int i = 0; i < lat.size(); ++i) {
    if (!lat.is_normal(i)) continue;
    bool quot_nilpotent;
    if (i == lat.trivial_idx) {
      quot_nilpotent = is_nilpotent_in(ctx, ctx.g.full_set());
    } else {
      const auto& qc = ctx.quotient_ctx(i);
      quot_nilpotent = is_nilpotent_in(*qc.ctx, qc.ctx->g.full_set());
    }
    if (quot_nilpotent) acc &= lat.at(i);
  }
  int out = ctx.sub_index(acc);
  bool ok;
  if (out == lat.trivial_idx) {
    ok = is_nilpotent_in(ctx, ctx.g.full_set());
  } else {
    const auto& qr = ctx.quotient_ctx(out);
    ok = is_nilpotent_in(*qr.ctx, qr.ctx->g.full_set());
  }
  detail::require(ok, "nilpotent residual quotient is not nilpotent in '" + ctx.g.id + "'");
  return out;
}

}  // namespace fusionlab
