// Supplementation predicates: S-permutability, the S-permutable closure
// H_sU, normal core H_U, and the family of supplement conditions
// (complemented, c-supplemented, S-Phi, weakly variants, supersolvable
// supplements).
//
// Everything is evaluated relative to an ambient subgroup U so the same code
// answers both "in G" and "in K" questions; pass the full-group index for the
// classical forms. Quantifiers are exhaustive over the lattice and each flag
// is decided by its own scan, with the first witness (canonical order)
// recorded.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fusionlab/char_subgroups.hpp"
#include "fusionlab/context.hpp"

namespace fusionlab {

// AQ = QA as sets for every Sylow subgroup Q of U, over all primes.
inline bool is_s_permutable_in(GroupContext& ctx, int u_idx, int a_idx) {
  uint64_t key = GroupContext::pack(u_idx, a_idx);
  auto it = ctx.spermutable_cache_.find(key);
  if (it != ctx.spermutable_cache_.end()) return it->second != 0;
  const ElemSet& u = ctx.sub(u_idx);
  const ElemSet& a = ctx.sub(a_idx);
  bool ok = true;
  for (int p : prime_factors(u.count())) {
    for (int qi : ctx.sylows_in(u, p)) {
      const ElemSet& q = ctx.sub(qi);
      if (product_set(ctx.g, a, q) != product_set(ctx.g, q, a)) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  ctx.spermutable_cache_.emplace(key, ok ? 1 : 0);
  return ok;
}

// H_sU: subgroup generated by all subgroups of H that are S-permutable in U.
inline int s_permutable_closure_in(GroupContext& ctx, int u_idx, int h_idx) {
  uint64_t key = GroupContext::pack(u_idx, h_idx);
  auto it = ctx.sclosure_cache_.find(key);
  if (it != ctx.sclosure_cache_.end()) return it->second;
  ElemSet acc = ElemSet::single(ctx.g.order, 0);
  for (int i : ctx.subgroups_in(ctx.sub(h_idx)))
    if (is_s_permutable_in(ctx, u_idx, i)) acc |= ctx.sub(i);
  int out = ctx.sub_index(generated_subgroup(ctx.g, acc));
  ctx.sclosure_cache_.emplace(key, out);
  return out;
}

// All T <= U with HT = U, decided by the size identity |H||T| = |U||H n T|
// (valid since |HT| = |H||T|/|H n T| for any two subgroups). Always contains
// U itself; canonical lattice order.
inline std::vector<int> supplements_of_in(GroupContext& ctx, int u_idx, int h_idx) {
  const ElemSet& u = ctx.sub(u_idx);
  const ElemSet& h = ctx.sub(h_idx);
  const long long hu = static_cast<long long>(h.count());
  const long long un = static_cast<long long>(u.count());
  std::vector<int> out;
  for (int i : ctx.subgroups_in(u)) {
    const ElemSet& t = ctx.sub(i);
    if (hu * t.count() == un * (h & t).count()) out.push_back(i);
  }
  return out;
}

struct SupplementProfile {
  int ambient_idx = -1;
  int subject_idx = -1;
  int core_idx = -1;       // H_U, the normal core
  int sclosure_idx = -1;   // H_sU
  int frattini_idx = -1;   // Phi(H)
  int bound_c_phi_idx = -1;   // <Phi(H), H_U>
  int bound_s_phi_idx = -1;   // <Phi(H), H_sU>
  std::vector<int> supplements;

  bool complemented = false;
  bool c_supplemented = false;
  bool s_phi_supplemented = false;
  bool weakly_s_supplemented = false;
  bool weakly_c_phi_supplemented = false;
  bool weakly_s_phi_supplemented = false;
  bool has_supersoluble_supplement = false;

  std::optional<int> witness_complemented;
  std::optional<int> witness_c_supplemented;
  std::optional<int> witness_s_phi;
  std::optional<int> witness_weakly_s;
  std::optional<int> witness_weakly_c_phi;
  std::optional<int> witness_weakly_s_phi;
  std::optional<int> witness_supersoluble;
};

inline std::shared_ptr<const SupplementProfile> supplementation_profile_in(GroupContext& ctx,
                                                                           int u_idx, int h_idx) {
  uint64_t key = GroupContext::pack(u_idx, h_idx);
  auto it = ctx.profile_cache_.find(key);
  if (it != ctx.profile_cache_.end()) return it->second;

  auto prof = std::make_shared<SupplementProfile>();
  prof->ambient_idx = u_idx;
  prof->subject_idx = h_idx;
  prof->core_idx = normal_core_in(ctx, u_idx, h_idx);
  prof->sclosure_idx = s_permutable_closure_in(ctx, u_idx, h_idx);
  prof->frattini_idx = frattini_in(ctx, h_idx);
  prof->bound_c_phi_idx = ctx.join_idx(ctx.sub(prof->frattini_idx), ctx.sub(prof->core_idx));
  prof->bound_s_phi_idx = ctx.join_idx(ctx.sub(prof->frattini_idx), ctx.sub(prof->sclosure_idx));
  prof->supplements = supplements_of_in(ctx, u_idx, h_idx);

  // The normal core is S-permutable, so it sits inside the closure.
  detail::require(ctx.sub(prof->core_idx).subset_of(ctx.sub(prof->sclosure_idx)) &&
                      ctx.sub(prof->sclosure_idx).subset_of(ctx.sub(h_idx)),
                  "H_U <= H_sU <= H violated in '" + ctx.g.id + "'");

  const ElemSet& h = ctx.sub(h_idx);
  auto scan = [&](auto cond, bool& flag, std::optional<int>& witness) {
    for (int t : prof->supplements) {
      ElemSet inter = h & ctx.sub(t);
      if (cond(t, inter)) {
        flag = true;
        witness = t;
        return;
      }
    }
  };
  scan([&](int, const ElemSet& i) { return i.count() == 1; }, prof->complemented,
       prof->witness_complemented);
  scan([&](int, const ElemSet& i) { return i.subset_of(ctx.sub(prof->core_idx)); },
       prof->c_supplemented, prof->witness_c_supplemented);
  scan([&](int, const ElemSet& i) { return i.subset_of(ctx.sub(prof->frattini_idx)); },
       prof->s_phi_supplemented, prof->witness_s_phi);
  scan([&](int, const ElemSet& i) { return i.subset_of(ctx.sub(prof->sclosure_idx)); },
       prof->weakly_s_supplemented, prof->witness_weakly_s);
  scan([&](int, const ElemSet& i) { return i.subset_of(ctx.sub(prof->bound_c_phi_idx)); },
       prof->weakly_c_phi_supplemented, prof->witness_weakly_c_phi);
  scan([&](int, const ElemSet& i) { return i.subset_of(ctx.sub(prof->bound_s_phi_idx)); },
       prof->weakly_s_phi_supplemented, prof->witness_weakly_s_phi);
  scan([&](int t, const ElemSet&) { return ctx.sub_supersolvable(t); },
       prof->has_supersoluble_supplement, prof->witness_supersoluble);

  // Internal consistency: the containment bounds are nested, so the flag
  // hierarchy must come out monotone.
  detail::require(!prof->complemented || (prof->c_supplemented && prof->s_phi_supplemented),
                  "hierarchy break below 'complemented' in '" + ctx.g.id + "'");
  detail::require(!prof->c_supplemented || prof->weakly_c_phi_supplemented,
                  "hierarchy break below 'c_supplemented' in '" + ctx.g.id + "'");
  detail::require(!prof->s_phi_supplemented || prof->weakly_s_phi_supplemented,
                  "hierarchy break below 's_phi_supplemented' in '" + ctx.g.id + "'");
  detail::require(!prof->weakly_s_supplemented || prof->weakly_s_phi_supplemented,
                  "hierarchy break below 'weakly_s_supplemented' in '" + ctx.g.id + "'");
  detail::require(!prof->weakly_c_phi_supplemented || prof->weakly_s_phi_supplemented,
                  "hierarchy break below 'weakly_c_phi_supplemented' in '" + ctx.g.id + "'");

  ctx.profile_cache_.emplace(key, prof);
  return prof;
}

// Classical full-group forms.
inline bool is_s_permutable(GroupContext& ctx, int a_idx) {
  return is_s_permutable_in(ctx, ctx.full_idx(), a_idx);
}
inline int s_permutable_closure(GroupContext& ctx, int h_idx) {
  return s_permutable_closure_in(ctx, ctx.full_idx(), h_idx);
}
inline std::vector<int> supplements_of(GroupContext& ctx, int h_idx) {
  return supplements_of_in(ctx, ctx.full_idx(), h_idx);
}
inline std::shared_ptr<const SupplementProfile> supplementation_profile(GroupContext& ctx,
                                                                        int h_idx) {
  return supplementation_profile_in(ctx, ctx.full_idx(), h_idx);
}
inline bool has_supersoluble_supplement(GroupContext& ctx, int h_idx) {
  return supplementation_profile(ctx, h_idx)->has_supersoluble_supplement;
}

}  // namespace fusionlab
