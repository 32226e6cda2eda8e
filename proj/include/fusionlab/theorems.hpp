// Theorem-audit checkers. Each checker instantiates one statement over every
// valid parameter tuple of a group, evaluates hypothesis and conclusion
// independently, and records a violation whenever the hypothesis holds but
// the conclusion fails. A clean sweep is evidence on the corpus, never a
// proof.
//
// theorem_id values: hierarchy, lem_2_1, lem_2_2, lem_2_3, thm_3_1, thm_3_2,
// thm_3_3, thm_3_4, thm_main, cor_4_2.
#pragma once

#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fusionlab/char_subgroups.hpp"
#include "fusionlab/context.hpp"
#include "fusionlab/fusion.hpp"
#include "fusionlab/props.hpp"
#include "fusionlab/supplements.hpp"

namespace fusionlab {

struct CheckConfig {
  int max_order = 5000;         // groups above this are skipped in sweeps
  int max_subgroups = 100000;   // lattice size cap
  int hierarchy_max_order = 60; // scope of the hierarchy suite
  int lemma21_max_order = 48;   // scope of the Lemma 2.1 suite
  // Scope of the order-4 clause in thm_3_2: false = cyclic order-4 subgroups
  // of F*(N) (parallel to thm_3_1), true = all of G (the literal text).
  bool thm32_strict_scope = false;
  // Fault injection for harness-soundness tests: report every subgroup as
  // weakly S-Phi-supplemented.
  bool fault_weakly_sphi_true = false;
};

struct Violation {
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> witness;
};

struct TheoremReport {
  std::string theorem_id;
  std::string group;
  int group_order = 0;
  long long instantiations = 0;
  long long hypothesis_hits = 0;
  std::vector<Violation> violations;
  std::vector<std::string> skipped;
  std::vector<std::pair<std::string, std::string>> notes;
};

struct GroupAudit {
  std::string name;
  int order = 0;
  long long wall_ms = 0;
  std::vector<TheoremReport> reports;
  std::vector<std::string> skipped;
  // True when a skip was forced by a resource limit rather than a filter.
  bool resource_limited = false;
};

struct SweepReport {
  std::string corpus_version;
  CheckConfig config;
  std::vector<GroupAudit> groups;
  bool pass = true;
};

namespace detail {

inline std::string set_repr(const ElemSet& s) {
  std::string out = "o" + std::to_string(s.count()) + "{";
  bool first = true;
  s.for_each([&](int x) {
    if (!first) out += " ";
    out += std::to_string(x);
    first = false;
  });
  out += "}";
  return out;
}

inline TheoremReport make_report(const char* id, const GroupContext& ctx) {
  TheoremReport r;
  r.theorem_id = id;
  r.group = ctx.g.id;
  r.group_order = ctx.g.order;
  return r;
}

}  // namespace detail

// The weakly S-Phi-supplemented predicate as seen by the checkers; the fault
// switch replaces it by constant truth so tests can prove the harness would
// notice a falsified theorem.
inline bool wsphi_in(GroupContext& ctx, const CheckConfig& cfg, int u_idx, int h_idx) {
  if (cfg.fault_weakly_sphi_true) return true;
  return supplementation_profile_in(ctx, u_idx, h_idx)->weakly_s_phi_supplemented;
}

inline bool wsphi(GroupContext& ctx, const CheckConfig& cfg, int h_idx) {
  return wsphi_in(ctx, cfg, ctx.full_idx(), h_idx);
}

// Cyclic subgroups of order 4 inside u.
inline std::vector<int> cyclic_order4_in(GroupContext& ctx, const ElemSet& u) {
  std::vector<int> out;
  for (int i : ctx.subgroups_in(u))
    if (ctx.sub(i).count() == 4 && is_cyclic_subgroup(ctx.g, ctx.sub(i))) out.push_back(i);
  return out;
}

// ---- hierarchy: the two implication chains between supplement properties ----

inline TheoremReport check_hierarchy(const std::shared_ptr<GroupContext>& ctx,
                                     const CheckConfig& cfg) {
  TheoremReport r = detail::make_report("hierarchy", *ctx);
  if (ctx->g.order > cfg.hierarchy_max_order) {
    r.skipped.push_back("group order " + std::to_string(ctx->g.order) +
                        " exceeds hierarchy cap " + std::to_string(cfg.hierarchy_max_order));
    return r;
  }
  const SubgroupLattice& lat = ctx->lattice();
  for (int h = 0; h < lat.size(); ++h) {
    ++r.instantiations;
    auto prof = supplementation_profile(*ctx, h);
    bool wz = cfg.fault_weakly_sphi_true ? true : prof->weakly_s_phi_supplemented;
    if (prof->complemented || prof->c_supplemented || prof->s_phi_supplemented ||
        prof->weakly_s_supplemented || prof->weakly_c_phi_supplemented)
      ++r.hypothesis_hits;
    struct Imp {
      const char* name;
      bool ante, cons;
    };
    const Imp imps[] = {
        {"complemented => c_supplemented", prof->complemented, prof->c_supplemented},
        {"c_supplemented => weakly_c_phi_supplemented", prof->c_supplemented,
         prof->weakly_c_phi_supplemented},
        {"weakly_c_phi_supplemented => weakly_s_phi_supplemented",
         prof->weakly_c_phi_supplemented, wz},
        {"complemented => s_phi_supplemented", prof->complemented, prof->s_phi_supplemented},
        {"s_phi_supplemented => weakly_s_phi_supplemented", prof->s_phi_supplemented, wz},
        {"weakly_s_supplemented => weakly_s_phi_supplemented", prof->weakly_s_supplemented, wz},
    };
    for (const Imp& imp : imps) {
      if (!imp.ante || imp.cons) continue;
      Violation v;
      v.parameters.emplace_back("H", detail::set_repr(ctx->sub(h)));
      v.parameters.emplace_back("implication", imp.name);
      v.witness.emplace_back("supplements_examined",
                             std::to_string(prof->supplements.size()));
      r.violations.push_back(std::move(v));
    }
  }
  return r;
}

// ---- lem_2_1: persistence of weak S-Phi-supplementation (3 parts) ----

inline TheoremReport check_lem_2_1(const std::shared_ptr<GroupContext>& ctx,
                                   const CheckConfig& cfg) {
  TheoremReport r = detail::make_report("lem_2_1", *ctx);
  if (ctx->g.order > cfg.lemma21_max_order) {
    r.skipped.push_back("group order " + std::to_string(ctx->g.order) +
                        " exceeds lemma 2.1 cap " + std::to_string(cfg.lemma21_max_order));
    return r;
  }
  const SubgroupLattice& lat = ctx->lattice();
  long long inst1 = 0, inst2 = 0, inst3 = 0;

  // Part 1: H weakly SPhi-supplemented in G, H <= K <= G  =>  same in K.
  for (int k = 0; k < lat.size(); ++k) {
    for (int h : ctx->subgroups_in(lat.at(k))) {
      ++inst1;
      ++r.instantiations;
      if (!wsphi(*ctx, cfg, h)) continue;
      ++r.hypothesis_hits;
      if (wsphi_in(*ctx, cfg, k, h)) continue;
      Violation v;
      v.parameters.emplace_back("part", "1");
      v.parameters.emplace_back("H", detail::set_repr(ctx->sub(h)));
      v.parameters.emplace_back("K", detail::set_repr(ctx->sub(k)));
      auto prof = supplementation_profile_in(*ctx, k, h);
      v.witness.emplace_back("Phi(H)H_sK", detail::set_repr(ctx->sub(prof->bound_s_phi_idx)));
      v.witness.emplace_back("supplements_in_K", std::to_string(prof->supplements.size()));
      r.violations.push_back(std::move(v));
    }
  }

  // Parts 2 and 3 move into the quotient G/N. Part 2 takes N <= H, part 3
  // takes gcd(|N|, |H|) = 1; the two ranges overlap exactly at N = 1.
  auto quotient_part = [&](const char* part, auto in_range, long long& count) {
    for (int n = 0; n < lat.size(); ++n) {
      if (!lat.is_normal(n)) continue;
      for (int h = 0; h < lat.size(); ++h) {
        if (!in_range(n, h)) continue;
        ++count;
        ++r.instantiations;
        if (!wsphi(*ctx, cfg, h)) continue;
        ++r.hypothesis_hits;
        const auto& qc = ctx->quotient_ctx(n);
        int himg = qc.ctx->sub_index(qc.q.image_of(lat.at(h)));
        if (wsphi(*qc.ctx, cfg, himg)) continue;
        Violation v;
        v.parameters.emplace_back("part", part);
        v.parameters.emplace_back("N", detail::set_repr(lat.at(n)));
        v.parameters.emplace_back("H", detail::set_repr(lat.at(h)));
        v.witness.emplace_back("image_in_quotient", detail::set_repr(qc.ctx->sub(himg)));
        r.violations.push_back(std::move(v));
      }
    }
  };
  quotient_part("2", [&](int n, int h) { return lat.at(n).subset_of(lat.at(h)); }, inst2);
  quotient_part(
      "3", [&](int n, int h) { return std::gcd(lat.at(n).count(), lat.at(h).count()) == 1; },
      inst3);
  r.notes.emplace_back("part1_tuples", std::to_string(inst1));
  r.notes.emplace_back("part2_tuples", std::to_string(inst2));
  r.notes.emplace_back("part3_tuples", std::to_string(inst3));
  return r;
}

// ---- lem_2_2: generalized Fitting subgroup identities (4 parts) ----

inline TheoremReport check_lem_2_2(const std::shared_ptr<GroupContext>& ctx,
                                   const CheckConfig& cfg) {
  (void)cfg;
  TheoremReport r = detail::make_report("lem_2_2", *ctx);
  const SubgroupLattice& lat = ctx->lattice();
  int fstar_g = generalized_fitting_in(*ctx, ctx->g.full_set());
  int fit_g = fitting_in(*ctx, ctx->g.full_set());
  long long inst1 = 0, inst4 = 0;

  // Part 1: F*(N) = N n F*(G) for every normal N.
  for (int n = 0; n < lat.size(); ++n) {
    if (!lat.is_normal(n)) continue;
    ++inst1;
    ++r.instantiations;
    ++r.hypothesis_hits;
    int fstar_n = generalized_fitting_in(*ctx, lat.at(n));
    ElemSet expect = lat.at(n) & ctx->sub(fstar_g);
    if (ctx->sub(fstar_n) == expect) continue;
    Violation v;
    v.parameters.emplace_back("part", "1");
    v.parameters.emplace_back("N", detail::set_repr(lat.at(n)));
    v.witness.emplace_back("fstar_N", detail::set_repr(ctx->sub(fstar_n)));
    v.witness.emplace_back("N_meet_fstar_G", detail::set_repr(expect));
    r.violations.push_back(std::move(v));
  }

  // Part 2: F*(G) solvable => F*(G) = F(G).
  ++r.instantiations;
  if (is_solvable_set(ctx->g, ctx->sub(fstar_g))) {
    ++r.hypothesis_hits;
    if (fstar_g != fit_g) {
      Violation v;
      v.parameters.emplace_back("part", "2");
      v.witness.emplace_back("fstar_G", detail::set_repr(ctx->sub(fstar_g)));
      v.witness.emplace_back("fitting_G", detail::set_repr(ctx->sub(fit_g)));
      r.violations.push_back(std::move(v));
    }
  }

  // Part 3: F(G) <= F*(G) = F*(F*(G)).
  ++r.instantiations;
  ++r.hypothesis_hits;
  int fstar_fstar = generalized_fitting_in(*ctx, ctx->sub(fstar_g));
  if (!ctx->sub(fit_g).subset_of(ctx->sub(fstar_g)) || fstar_fstar != fstar_g) {
    Violation v;
    v.parameters.emplace_back("part", "3");
    v.witness.emplace_back("fitting_G", detail::set_repr(ctx->sub(fit_g)));
    v.witness.emplace_back("fstar_G", detail::set_repr(ctx->sub(fstar_g)));
    v.witness.emplace_back("fstar_fstar_G", detail::set_repr(ctx->sub(fstar_fstar)));
    r.violations.push_back(std::move(v));
  }

  // Part 4: for every nontrivial central p-subgroup P: F*(G/P) = F*(G)/P.
  for (int n = 0; n < lat.size(); ++n) {
    const ElemSet& pset = lat.at(n);
    int c = pset.count();
    if (c <= 1 || !pset.subset_of(ctx->center())) continue;
    int p = smallest_prime_divisor(c);
    if (p_part(c, p) != c) continue;  // not a p-group
    ++inst4;
    ++r.instantiations;
    ++r.hypothesis_hits;
    const auto& qc = ctx->quotient_ctx(n);
    ElemSet projected = qc.q.image_of(ctx->sub(fstar_g));
    int fstar_q = generalized_fitting_in(*qc.ctx, qc.ctx->g.full_set());
    if (qc.ctx->sub(fstar_q) == projected) continue;
    Violation v;
    v.parameters.emplace_back("part", "4");
    v.parameters.emplace_back("p", std::to_string(p));
    v.parameters.emplace_back("P", detail::set_repr(pset));
    v.witness.emplace_back("fstar_of_quotient", detail::set_repr(qc.ctx->sub(fstar_q)));
    v.witness.emplace_back("projected_fstar", detail::set_repr(projected));
    r.violations.push_back(std::move(v));
  }
  r.notes.emplace_back("part1_tuples", std::to_string(inst1));
  r.notes.emplace_back("part4_tuples", std::to_string(inst4));
  return r;
}

// ---- lem_2_3: local supersolvability of a fusion system implies global ----

inline TheoremReport check_lem_2_3(const std::shared_ptr<GroupContext>& ctx,
                                   const CheckConfig& cfg) {
  (void)cfg;
  TheoremReport r = detail::make_report("lem_2_3", *ctx);
  for (int p : ctx->primes()) {
    ++r.instantiations;
    FusionSystem f(ctx, p);
    std::vector<int> estar = f.essential_star();
    bool premise = true;
    for (int q : estar) {
      FusionSystem nf = f.normalizer_system(q);
      if (!nf.supersolvable().value) {
        premise = false;
        break;
      }
    }
    if (!premise) continue;
    ++r.hypothesis_hits;
    if (f.supersolvable().value) continue;
    Violation v;
    v.parameters.emplace_back("p", std::to_string(p));
    v.witness.emplace_back("essential_star_size", std::to_string(estar.size()));
    v.witness.emplace_back("sylow", detail::set_repr(f.sylow()));
    r.violations.push_back(std::move(v));
  }
  return r;
}

// ---- thm_3_1: central minimal subgroups force p-nilpotency ----

inline TheoremReport check_thm_3_1(const std::shared_ptr<GroupContext>& ctx,
                                   const CheckConfig& cfg) {
  TheoremReport r = detail::make_report("thm_3_1", *ctx);
  const SubgroupLattice& lat = ctx->lattice();
  for (int p : ctx->primes()) {
    bool concl = is_p_nilpotent_in(*ctx, ctx->g.full_set(), p);
    for (int n = 0; n < lat.size(); ++n) {
      if (!lat.is_normal(n)) continue;
      bool quot_pn;
      if (n == lat.trivial_idx) {
        quot_pn = concl;
      } else {
        const auto& qc = ctx->quotient_ctx(n);
        quot_pn = is_p_nilpotent_in(*qc.ctx, qc.ctx->g.full_set(), p);
      }
      if (!quot_pn) continue;  // tuple range requires G/N p-nilpotent
      ++r.instantiations;
      bool hyp = true;
      std::string fail;
      for (int x : ctx->minimal_subgroups_in(lat.at(n))) {
        if (ctx->sub(x).count() != p) continue;
        if (!ctx->sub(x).subset_of(ctx->center())) {
          hyp = false;
          fail = "minimal subgroup " + detail::set_repr(ctx->sub(x)) + " not central";
          break;
        }
      }
      if (hyp && p == 2) {
        for (int y : cyclic_order4_in(*ctx, lat.at(n))) {
          if (!wsphi(*ctx, cfg, y)) {
            hyp = false;
            fail = "cyclic order-4 subgroup " + detail::set_repr(ctx->sub(y)) +
                   " not weakly SPhi-supplemented";
            break;
          }
        }
      }
      if (!hyp) continue;
      ++r.hypothesis_hits;
      if (concl) continue;
      Violation v;
      v.parameters.emplace_back("p", std::to_string(p));
      v.parameters.emplace_back("N", detail::set_repr(lat.at(n)));
      v.witness.emplace_back("is_p_nilpotent", "false");
      r.violations.push_back(std::move(v));
    }
  }
  return r;
}

// ---- thm_3_2: central minimal subgroups of F*(N) force nilpotency ----

inline TheoremReport check_thm_3_2(const std::shared_ptr<GroupContext>& ctx,
                                   const CheckConfig& cfg) {
  TheoremReport r = detail::make_report("thm_3_2", *ctx);
  const SubgroupLattice& lat = ctx->lattice();
  bool concl = is_nilpotent_in(*ctx, ctx->g.full_set());

  // The strict reading quantifies the order-4 clause over all of G; compute
  // that once.
  bool global4 = true;
  for (int y : cyclic_order4_in(*ctx, ctx->g.full_set()))
    if (!wsphi(*ctx, cfg, y)) {
      global4 = false;
      break;
    }

  long long hits_fstar = 0, hits_global = 0;
  for (int n = 0; n < lat.size(); ++n) {
    if (!lat.is_normal(n)) continue;
    bool quot_nil;
    if (n == lat.trivial_idx) {
      quot_nil = concl;
    } else {
      const auto& qc = ctx->quotient_ctx(n);
      quot_nil = is_nilpotent_in(*qc.ctx, qc.ctx->g.full_set());
    }
    if (!quot_nil) continue;
    ++r.instantiations;
    int fstar_n = generalized_fitting_in(*ctx, lat.at(n));
    bool central_ok = true;
    for (int x : ctx->minimal_subgroups_in(ctx->sub(fstar_n)))
      if (!ctx->sub(x).subset_of(ctx->center())) {
        central_ok = false;
        break;
      }
    bool local4 = true;
    if (central_ok)
      for (int y : cyclic_order4_in(*ctx, ctx->sub(fstar_n)))
        if (!wsphi(*ctx, cfg, y)) {
          local4 = false;
          break;
        }
    bool hyp_fstar = central_ok && local4;
    bool hyp_global = central_ok && global4;
    if (hyp_fstar) ++hits_fstar;
    if (hyp_global) ++hits_global;
    bool active = cfg.thm32_strict_scope ? hyp_global : hyp_fstar;
    if (!active) continue;
    ++r.hypothesis_hits;
    if (concl) continue;
    Violation v;
    v.parameters.emplace_back("N", detail::set_repr(lat.at(n)));
    v.parameters.emplace_back("order4_scope", cfg.thm32_strict_scope ? "G" : "fstar(N)");
    v.witness.emplace_back("fstar_N", detail::set_repr(ctx->sub(fstar_n)));
    v.witness.emplace_back("is_nilpotent", "false");
    r.violations.push_back(std::move(v));
  }
  r.notes.emplace_back("order4_scope", cfg.thm32_strict_scope ? "G" : "fstar(N)");
  r.notes.emplace_back("hits_scope_fstar", std::to_string(hits_fstar));
  r.notes.emplace_back("hits_scope_global", std::to_string(hits_global));
  return r;
}

// ---- thm_3_3: the iff criterion at the smallest (odd) prime ----

inline TheoremReport check_thm_3_3(const std::shared_ptr<GroupContext>& ctx,
                                   const CheckConfig& cfg) {
  TheoremReport r = detail::make_report("thm_3_3", *ctx);
  if (ctx->g.order == 1) {
    r.notes.emplace_back("not_applicable", "trivial group");
    return r;
  }
  int p = ctx->smallest_prime();
  if (p == 2) {
    r.notes.emplace_back("not_applicable", "smallest prime divisor is 2");
    return r;
  }
  // "not having" and "not containing" a supersoluble supplement are treated
  // as the same predicate.
  bool concl = is_p_nilpotent_in(*ctx, ctx->g.full_set(), p);
  for (int s : ctx->sylows_in(ctx->g.full_set(), p)) {
    ++r.instantiations;
    bool lhs = true;
    std::string fail;
    for (int x : ctx->minimal_subgroups_in(ctx->sub(s))) {
      bool ss = supplementation_profile(*ctx, x)->has_supersoluble_supplement;
      if (!ss && !wsphi(*ctx, cfg, x)) {
        lhs = false;
        fail = detail::set_repr(ctx->sub(x));
        break;
      }
    }
    if (lhs) ++r.hypothesis_hits;
    if (lhs == concl) continue;
    Violation v;
    v.parameters.emplace_back("p", std::to_string(p));
    v.parameters.emplace_back("P", detail::set_repr(ctx->sub(s)));
    v.witness.emplace_back("direction", lhs ? "criterion holds but G is not p-nilpotent"
                                            : "G is p-nilpotent but criterion fails");
    if (!fail.empty()) v.witness.emplace_back("failing_minimal_subgroup", fail);
    r.violations.push_back(std::move(v));
  }
  return r;
}

// ---- thm_3_4: exponent-p normal subgroups with supplemented minimals lie
// under prime chief factors ----

inline TheoremReport check_thm_3_4(const std::shared_ptr<GroupContext>& ctx,
                                   const CheckConfig& cfg) {
  TheoremReport r = detail::make_report("thm_3_4", *ctx);
  if (ctx->g.order == 1) {
    r.notes.emplace_back("not_applicable", "trivial group");
    return r;
  }
  int p = ctx->smallest_prime();
  r.notes.emplace_back("p", std::to_string(p));
  const SubgroupLattice& lat = ctx->lattice();
  int zu = u_hypercenter(*ctx);
  for (int n = 0; n < lat.size(); ++n) {
    if (!lat.is_normal(n)) continue;
    int c = lat.at(n).count();
    if (c <= 1 || p_part(c, p) != c) continue;
    if (exponent_of(ctx->g, lat.at(n)) != p) continue;
    ++r.instantiations;
    bool hyp = true;
    std::string fail;
    for (int x : ctx->minimal_subgroups_in(lat.at(n))) {
      bool ss = supplementation_profile(*ctx, x)->has_supersoluble_supplement;
      if (!ss && !wsphi(*ctx, cfg, x)) {
        hyp = false;
        fail = detail::set_repr(ctx->sub(x));
        break;
      }
    }
    // Conclusion, two independent routes: chief factors below P in a series
    // through P all have prime order, and P sits inside the hypercenter for
    // the supersolvable formation. They must agree.
    bool all_prime = true;
    std::string bad_factor;
    for (const ChiefFactor& f : chief_series_through(ctx->g, lat.at(n))) {
      if (!f.above.subset_of(lat.at(n))) break;
      if (!is_prime(f.order)) {
        all_prime = false;
        bad_factor = std::to_string(f.order);
        break;
      }
    }
    bool in_zu = lat.at(n).subset_of(ctx->sub(zu));
    detail::require(all_prime == in_zu,
                    "chief-factor route disagrees with the hypercenter route in '" +
                        ctx->g.id + "'");
    if (!hyp) continue;
    ++r.hypothesis_hits;
    if (all_prime) continue;
    Violation v;
    v.parameters.emplace_back("p", std::to_string(p));
    v.parameters.emplace_back("P", detail::set_repr(lat.at(n)));
    v.witness.emplace_back("nonprime_chief_factor_order", bad_factor);
    v.witness.emplace_back("u_hypercenter", detail::set_repr(ctx->sub(zu)));
    r.violations.push_back(std::move(v));
  }
  return r;
}

// ---- thm_main and cor_4_2: supersolvable fusion at the smallest prime ----

inline std::pair<TheoremReport, TheoremReport> check_thm_main(
    const std::shared_ptr<GroupContext>& ctx, const CheckConfig& cfg) {
  TheoremReport a = detail::make_report("thm_main", *ctx);
  TheoremReport b = detail::make_report("cor_4_2", *ctx);
  if (ctx->g.order == 1) {
    a.notes.emplace_back("not_applicable", "trivial group");
    b.notes.emplace_back("not_applicable", "trivial group");
    return {a, b};
  }
  int p = ctx->smallest_prime();
  FusionSystem f(ctx, p);
  const ElemSet& s = f.sylow();
  int exp_s = exponent_of(ctx->g, s);
  bool exp_ok = exp_s == p;
  bool min_ok = true;
  std::string fail;
  for (int x : ctx->minimal_subgroups_in(s)) {
    if (!wsphi(*ctx, cfg, x)) {
      min_ok = false;
      fail = detail::set_repr(ctx->sub(x));
      break;
    }
  }
  bool hyp = exp_ok && min_ok;
  FusionSystem::SupersolvableResult ss = f.supersolvable();
  bool pn = is_p_nilpotent_in(*ctx, ctx->g.full_set(), p);

  for (TheoremReport* r : {&a, &b}) {
    r->instantiations = 1;
    r->hypothesis_hits = hyp ? 1 : 0;
    r->notes.emplace_back("p", std::to_string(p));
    r->notes.emplace_back("sylow", detail::set_repr(s));
    r->notes.emplace_back("exp_S", std::to_string(exp_s));
    r->notes.emplace_back("exp_ok", exp_ok ? "true" : "false");
    r->notes.emplace_back("minimals_ok", min_ok ? "true" : "false");
    if (!fail.empty()) r->notes.emplace_back("failing_minimal_subgroup", fail);
    if (!hyp) r->notes.emplace_back("vacuous", "hypothesis fails");
    r->notes.emplace_back("fusion_supersolvable", ss.value ? "true" : "false");
    r->notes.emplace_back("p_nilpotent", pn ? "true" : "false");
  }
  if (hyp && !ss.value) {
    Violation v;
    v.parameters.emplace_back("p", std::to_string(p));
    v.parameters.emplace_back("S", detail::set_repr(s));
    v.witness.emplace_back("fusion_supersolvable", "false");
    a.violations.push_back(std::move(v));
  }
  if (hyp && !pn) {
    Violation v;
    v.parameters.emplace_back("p", std::to_string(p));
    v.parameters.emplace_back("S", detail::set_repr(s));
    v.witness.emplace_back("is_p_nilpotent", "false");
    b.violations.push_back(std::move(v));
  }
  return {a, b};
}

// ---- dispatch, per-group runs, and the corpus sweep ----

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"hierarchy", "lem_2_1", "lem_2_2", "lem_2_3",
                                               "thm_3_1",   "thm_3_2", "thm_3_3", "thm_3_4",
                                               "thm_main",  "cor_4_2"};
  return ids;
}

inline TheoremReport check_by_id(const std::shared_ptr<GroupContext>& ctx, const CheckConfig& cfg,
                                 const std::string& id) {
  if (id == "hierarchy") return check_hierarchy(ctx, cfg);
  if (id == "lem_2_1") return check_lem_2_1(ctx, cfg);
  if (id == "lem_2_2") return check_lem_2_2(ctx, cfg);
  if (id == "lem_2_3") return check_lem_2_3(ctx, cfg);
  if (id == "thm_3_1") return check_thm_3_1(ctx, cfg);
  if (id == "thm_3_2") return check_thm_3_2(ctx, cfg);
  if (id == "thm_3_3") return check_thm_3_3(ctx, cfg);
  if (id == "thm_3_4") return check_thm_3_4(ctx, cfg);
  if (id == "thm_main") return check_thm_main(ctx, cfg).first;
  if (id == "cor_4_2") return check_thm_main(ctx, cfg).second;
  throw PreconditionError("unknown theorem id '" + id + "'");
}

inline std::vector<TheoremReport> run_all_checks(const std::shared_ptr<GroupContext>& ctx,
                                                 const CheckConfig& cfg) {
  std::vector<TheoremReport> out;
  out.push_back(check_hierarchy(ctx, cfg));
  out.push_back(check_lem_2_1(ctx, cfg));
  out.push_back(check_lem_2_2(ctx, cfg));
  out.push_back(check_lem_2_3(ctx, cfg));
  out.push_back(check_thm_3_1(ctx, cfg));
  out.push_back(check_thm_3_2(ctx, cfg));
  out.push_back(check_thm_3_3(ctx, cfg));
  out.push_back(check_thm_3_4(ctx, cfg));
  auto main_pair = check_thm_main(ctx, cfg);
  out.push_back(std::move(main_pair.first));
  out.push_back(std::move(main_pair.second));
  return out;
}

// Audits every group; each group is handled by exactly one worker thread, so
// the per-group caches never cross threads, and results land at the group's
// corpus position regardless of scheduling.
inline SweepReport sweep(const std::vector<Group>& groups, const CheckConfig& cfg, int jobs,
                         const std::string& corpus_version) {
  SweepReport sr;
  sr.corpus_version = corpus_version;
  sr.config = cfg;
  sr.groups.resize(groups.size());
  std::atomic<size_t> next{0};
  std::mutex emx;
  std::exception_ptr eptr = nullptr;

  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= groups.size()) return;
      GroupAudit& audit = sr.groups[i];
      audit.name = groups[i].id;
      audit.order = groups[i].order;
      auto t0 = std::chrono::steady_clock::now();
      try {
        if (groups[i].order > cfg.max_order) {
          audit.skipped.push_back("order " + std::to_string(groups[i].order) +
                                  " exceeds max order " + std::to_string(cfg.max_order));
        } else {
          auto ctx = std::make_shared<GroupContext>(groups[i], cfg.max_subgroups);
          audit.reports = run_all_checks(ctx, cfg);
        }
      } catch (const ResourceLimitError& e) {
        audit.reports.clear();
        audit.resource_limited = true;
        audit.skipped.push_back(std::string("resource limit: ") + e.what());
      } catch (...) {
        std::lock_guard<std::mutex> lock(emx);
        if (!eptr) eptr = std::current_exception();
        return;
      }
      audit.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    }
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int k = 0; k < jobs; ++k) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (eptr) std::rethrow_exception(eptr);

  sr.pass = true;
  for (const GroupAudit& audit : sr.groups)
    for (const TheoremReport& rep : audit.reports)
      if (!rep.violations.empty()) sr.pass = false;
  return sr;
}

}  // namespace fusionlab
