// Structural predicates on subgroups, evaluated relative to an ambient
// subgroup wherever possible so no standalone copy of the subgroup is built.
// Each predicate has exactly one authoritative definition here:
//   nilpotent      = every Sylow subgroup is unique,
//   p-nilpotent    = a normal Hall p'-subgroup exists,
//   p-closed       = the Sylow p-subgroup is unique,
//   solvable       = the derived series reaches 1,
//   supersolvable  = all chief factors have prime order,
//   quasisimple    = perfect and simple modulo the center.
#pragma once

#include "fusionlab/context.hpp"
#include "fusionlab/group.hpp"
#include "fusionlab/lattice.hpp"

namespace fusionlab {

inline bool is_nilpotent_in(GroupContext& ctx, const ElemSet& u) {
  for (int p : prime_factors(u.count()))
    if (ctx.sylows_in(u, p).size() != 1) return false;
  return true;
}

inline bool is_p_closed_in(GroupContext& ctx, const ElemSet& u, int p) {
  return ctx.sylows_in(u, p).size() == 1;
}

// Normal Hall p'-subgroup, found by scanning the lattice for a normal
// subgroup of exactly the p'-order. When p does not divide |U| the subgroup
// is U itself and the scan trivially succeeds.
inline bool is_p_nilpotent_in(GroupContext& ctx, const ElemSet& u, int p) {
  int target = u.count() / p_part(u.count(), p);
  for (int i : ctx.subgroups_in(u))
    if (ctx.sub(i).count() == target && normalizes(ctx.g, u, ctx.sub(i))) return true;
  return false;
}

inline bool is_solvable_set(const Group& g, const ElemSet& h) {
  ElemSet cur = h;
  while (true) {
    ElemSet next = derived_subgroup(g, cur);
    if (next.count() == 1) return true;
    if (next == cur) return false;
    cur = next;
  }
}

inline bool is_perfect_set(const Group& g, const ElemSet& h) {
  return derived_subgroup(g, h) == h;
}

inline bool is_supersolvable_group(const Group& g) {
  if (g.order == 1) return true;
  for (const ChiefFactor& f : chief_series(g))
    if (!is_prime(f.order)) return false;
  return true;
}

// A nontrivial group is simple when the normal closure of every nonidentity
// element is the whole group.
inline bool is_simple_group(const Group& g) {
  if (g.order == 1) return false;
  auto mins = minimal_normal_subgroups_direct(g);
  return mins.size() == 1 && mins.front().count() == g.order;
}

// Quasisimple: H nontrivial and perfect, and every normal subgroup of H is
// central in H or is H itself. The smallest nontrivial perfect group is A_5,
// so anything of order below 60 is rejected up front.
inline bool is_quasisimple(GroupContext& ctx, int h_idx) {
  const ElemSet& h = ctx.sub(h_idx);
  if (h.count() < 60) return false;
  if (!is_perfect_set(ctx.g, h)) return false;
  ElemSet z = centralizer_in(ctx.g, h, h);
  for (int n : ctx.normal_in(h))
    if (!ctx.sub(n).subset_of(z) && ctx.sub(n) != h) return false;
  return true;
}

}  // namespace fusionlab
