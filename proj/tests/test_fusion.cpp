// Fusion systems F_S(G): classes, morphisms, strong closure, centric and
// essential subgroups, supersolvability, normalizer subsystems.
#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <set>

#include "fusionlab/fusionlab.hpp"

using namespace fusionlab;

namespace {

std::shared_ptr<GroupContext> ctx_of(Group g) {
  return std::make_shared<GroupContext>(std::move(g));
}

// The subgroup of double transpositions in S4 (the normal Klein four).
int normal_v4(GroupContext& ctx) {
  for (int i = 0; i < ctx.lattice().size(); ++i)
    if (ctx.sub(i).count() == 4 && ctx.lattice().is_normal(i)) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("fusion system construction", "[fusion]") {
  auto s4 = ctx_of(symmetric(4));
  FusionSystem f(s4, 2);
  REQUIRE(f.sylow().count() == 8);
  REQUIRE(f.objects.size() == 10);  // subgroups of D8
  // The chosen Sylow subgroup is the first one in canonical order.
  REQUIRE(f.sylow_idx == s4->sylows_in(s4->g.full_set(), 2).front());

  FusionSystem f3(s4, 3);
  REQUIRE(f3.sylow().count() == 3);
  REQUIRE(f3.objects.size() == 2);

  REQUIRE_THROWS_AS(FusionSystem(s4, 5), PreconditionError);
  REQUIRE_THROWS_AS(FusionSystem(s4, 4), PreconditionError);
  // Objects must live inside S.
  int c3 = -1;
  for (int i = 0; i < s4->lattice().size(); ++i)
    if (s4->sub(i).count() == 3) c3 = i;
  FusionSystem f2(s4, 2);
  REQUIRE_THROWS_AS(f2.f_class(c3), PreconditionError);
}

TEST_CASE("fusion classes and morphisms", "[fusion]") {
  auto a4 = ctx_of(alternating(4));
  FusionSystem f(a4, 2);
  // Objects: 1, three C2, V4.
  REQUIRE(f.objects.size() == 5);
  // All three involutions are fused by the C3 action.
  int c2 = -1;
  for (int i : f.objects)
    if (a4->sub(i).count() == 2) {
      c2 = i;
      break;
    }
  REQUIRE(f.f_class(c2).size() == 3);
  // Morphisms V4 -> V4 are the identity and the two rotations induced by a
  // 3-cycle: 3 total after deduplication by image map.
  int v4 = f.sylow_idx;
  std::vector<FusionMorphism> ms = f.morphism_set(v4, v4);
  REQUIRE(ms.size() == 3);
  std::set<std::vector<int>> images;
  for (const FusionMorphism& m : ms) {
    REQUIRE(m.domain.size() == 4);
    images.insert(m.image);
    // Each morphism is conjugation by its witness.
    for (size_t k = 0; k < m.domain.size(); ++k)
      REQUIRE(m.image[k] == a4->g.conj(m.domain[k], m.witness));
  }
  REQUIRE(images.size() == 3);

  // Between order-2 objects only one morphism exists (images coincide).
  std::vector<int> order2;
  for (int i : f.objects)
    if (a4->sub(i).count() == 2) order2.push_back(i);
  REQUIRE(f.morphism_set(order2[0], order2[1]).size() == 1);
  // No morphism from V4 into a smaller object.
  REQUIRE(f.morphism_set(v4, order2[0]).empty());
}

TEST_CASE("strong closure", "[fusion]") {
  auto s4 = ctx_of(symmetric(4));
  FusionSystem f(s4, 2);
  std::vector<int> sc = f.strongly_closed_subgroups();
  REQUIRE(sc.size() == 3);
  REQUIRE(s4->sub(sc[0]).count() == 1);
  REQUIRE(s4->sub(sc[1]).count() == 4);
  REQUIRE(sc[1] == normal_v4(*s4));
  REQUIRE(sc[2] == f.sylow_idx);
  // No single double-transposition subgroup is strongly closed: the three
  // double transpositions form one S4-class inside D8.
  for (int i : f.objects)
    if (s4->sub(i).count() == 2 && s4->sub(i).subset_of(s4->sub(normal_v4(*s4))))
      REQUIRE_FALSE(f.strongly_closed(i));
}

TEST_CASE("fully normalized and centric", "[fusion]") {
  auto s4 = ctx_of(symmetric(4));
  FusionSystem f(s4, 2);
  int v4n = normal_v4(*s4);
  REQUIRE(f.fully_normalized(v4n));
  REQUIRE(f.f_centric(v4n));
  REQUIRE(f.fully_normalized(f.sylow_idx));
  REQUIRE(f.f_centric(f.sylow_idx));

  // The center of S = D8 is fully normalized but not centric.
  int z = -1;
  for (int i : f.objects)
    if (s4->sub(i).count() == 2 &&
        s4->sub(i) == centralizer_in(s4->g, f.sylow(), f.sylow()))
      z = i;
  REQUIRE(z >= 0);
  REQUIRE(f.fully_normalized(z));
  REQUIRE_FALSE(f.f_centric(z));

  // A non-central double-transposition subgroup of S is not fully
  // normalized: its class representative has the bigger normalizer in S.
  for (int i : f.objects)
    if (s4->sub(i).count() == 2 && i != z &&
        s4->sub(i).subset_of(s4->sub(v4n)))
      REQUIRE_FALSE(f.fully_normalized(i));
}

TEST_CASE("outer automorphisms and essentials in F_{D8}(S4)", "[fusion]") {
  auto s4 = ctx_of(symmetric(4));
  FusionSystem f(s4, 2);
  int v4n = normal_v4(*s4);

  // Out_F of the normal Klein four is S3: order 6, nonabelian.
  Group out = f.out_f(v4n);
  REQUIRE(out.order == 6);
  REQUIRE_FALSE(is_abelian_set(out, out.full_set()));
  REQUIRE(f.essential(v4n));

  // The other Klein four inside D8 (generated by two commuting
  // transpositions) has Out_F of order 2: not essential.
  int v4other = -1;
  for (int i : f.objects)
    if (s4->sub(i).count() == 4 && i != v4n && !is_cyclic_subgroup(s4->g, s4->sub(i)))
      v4other = i;
  REQUIRE(v4other >= 0);
  REQUIRE(f.out_f(v4other).order == 2);
  REQUIRE_FALSE(f.essential(v4other));

  // S itself is never essential (it is not even a candidate: Out_F(S) has
  // order coprime to p here) but belongs to the essential star.
  REQUIRE_FALSE(f.essential(f.sylow_idx));
  std::vector<int> estar = f.essential_star();
  REQUIRE(estar.size() == 2);
  REQUIRE(estar[0] == v4n);
  REQUIRE(estar[1] == f.sylow_idx);

  // Cyclic C4 <= D8 is normal in D8 with Out_F of order 2: not essential.
  for (int i : f.objects)
    if (s4->sub(i).count() == 4 && is_cyclic_subgroup(s4->g, s4->sub(i)))
      REQUIRE_FALSE(f.essential(i));
}

TEST_CASE("strongly p-embedded detection", "[fusion]") {
  REQUIRE(has_strongly_p_embedded(symmetric(3), 2));
  REQUIRE_FALSE(has_strongly_p_embedded(cyclic(2), 2));
  REQUIRE_FALSE(has_strongly_p_embedded(symmetric(4), 2));
  REQUIRE_FALSE(has_strongly_p_embedded(dihedral(8), 2));
  // A5 = SL(2,4) has a strongly 2-embedded A4.
  REQUIRE(has_strongly_p_embedded(alternating(5), 2));
  // The Sylow 3-subgroup of S3 is normal, so every candidate contains it and
  // no subgroup is strongly 3-embedded.
  REQUIRE_FALSE(has_strongly_p_embedded(symmetric(3), 3));
  REQUIRE(has_strongly_p_embedded(alternating(4), 3));
  REQUIRE(has_strongly_p_embedded(semidirect_cyclic(7, 3, 2), 3));
}

TEST_CASE("supersolvable fusion systems", "[fusion]") {
  // F_{C2}(S3) is supersolvable with chain 1 < C2.
  auto s3 = ctx_of(symmetric(3));
  FusionSystem f2(s3, 2);
  auto r2 = f2.supersolvable();
  REQUIRE(r2.value);
  REQUIRE(r2.chain.size() == 2);
  REQUIRE(s3->sub(r2.chain[0]).count() == 1);
  REQUIRE(r2.chain[1] == f2.sylow_idx);

  FusionSystem f3(s3, 3);
  REQUIRE(f3.supersolvable().value);

  // F_{V4}(A4) is not supersolvable: fusion mixes the involutions, so no
  // proper nontrivial subgroup of V4 is strongly closed and the single step
  // 1 < V4 is not cyclic.
  auto a4 = ctx_of(alternating(4));
  FusionSystem fa(a4, 2);
  REQUIRE_FALSE(fa.supersolvable().value);
  REQUIRE(fa.supersolvable().chain.empty());

  // F_{D8}(S4) is not supersolvable; F_{D8}(D8) is.
  auto s4 = ctx_of(symmetric(4));
  REQUIRE_FALSE(FusionSystem(s4, 2).supersolvable().value);
  auto d8 = ctx_of(dihedral(8));
  REQUIRE(FusionSystem(d8, 2).supersolvable().value);

  // Supersolvable fusion at the smallest prime forces p-nilpotency.
  for (const Group& g : builtin_corpus()) {
    if (g.order > 24 || g.order == 1) continue;
    auto c = ctx_of(g);
    int p = c->smallest_prime();
    FusionSystem f(c, p);
    bool ss = f.supersolvable().value;
    bool pn = is_p_nilpotent_in(*c, c->g.full_set(), p);
    CAPTURE(g.id, p);
    if (ss) REQUIRE(pn);
  }
}

TEST_CASE("normalizer subsystems", "[fusion]") {
  auto s4 = ctx_of(symmetric(4));
  FusionSystem f(s4, 2);
  int v4n = normal_v4(*s4);
  // N_G(V4) = S4, so the normalizer system has a Sylow subgroup of order 8
  // and is again non-supersolvable.
  FusionSystem nf = f.normalizer_system(v4n);
  REQUIRE(nf.sylow().count() == 8);
  REQUIRE_FALSE(nf.supersolvable().value);

  // The normalizer system at S itself: N_G(D8) = D8, supersolvable.
  FusionSystem ns = f.normalizer_system(f.sylow_idx);
  REQUIRE(ns.ctx->g.order == 8);
  REQUIRE(ns.supersolvable().value);

  // Non-fully-normalized objects are rejected.
  int bad = -1;
  for (int i : f.objects)
    if (!f.fully_normalized(i)) bad = i;
  REQUIRE(bad >= 0);
  REQUIRE_THROWS_AS(f.normalizer_system(bad), PreconditionError);

  // Local-to-global supersolvability: if every member of the essential star
  // has a supersolvable normalizer system, the whole system is
  // supersolvable (checked over the small corpus at every prime).
  for (const Group& g : builtin_corpus()) {
    if (g.order > 24) continue;
    auto c = ctx_of(g);
    for (int p : c->primes()) {
      FusionSystem fs(c, p);
      bool premise = true;
      for (int q : fs.essential_star())
        if (!fs.normalizer_system(q).supersolvable().value) premise = false;
      CAPTURE(g.id, p);
      if (premise) REQUIRE(fs.supersolvable().value);
    }
  }
}
