// Core group machinery: table validation, closure, products, conjugation,
// quotients, realization.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "fusionlab/fusionlab.hpp"

using namespace fusionlab;

namespace {

int by_label(const Group& g, const std::string& lab) {
  for (int i = 0; i < g.order; ++i)
    if (g.label(i) == lab) return i;
  CAPTURE(lab);
  REQUIRE(false);
  return -1;
}

ElemSet set_of(const Group& g, const std::vector<std::string>& labs) {
  ElemSet s(g.order);
  for (const std::string& l : labs) s.set(by_label(g, l));
  return s;
}

// Naive closure of a set of permutations, independent of the BFS in
// from_permutation_generators.
std::set<Perm> naive_perm_closure(int degree, std::vector<Perm> gens) {
  std::set<Perm> found(gens.begin(), gens.end());
  found.insert(perm_identity(degree));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(found.begin(), found.end());
    for (const Perm& a : cur)
      for (const Perm& b : cur)
        if (found.insert(perm_compose(a, b)).second) grew = true;
  }
  return found;
}

}  // namespace

TEST_CASE("permutation helpers", "[group]") {
  Perm a = parse_cycles("(1 2)(3 4)", 4);
  REQUIRE(a == Perm{1, 0, 3, 2});
  REQUIRE(cycle_notation(a) == "(1 2)(3 4)");
  REQUIRE(cycle_notation(perm_identity(3)) == "()");
  // Left-to-right composition: apply a, then b.
  Perm b = parse_cycles("(1 2 3)", 3);
  Perm c = perm_compose(parse_cycles("(1 2)", 3), b);
  REQUIRE(cycle_notation(c) == "(1 3)");
  REQUIRE(perm_compose(b, perm_inverse(b)) == perm_identity(3));

  REQUIRE_THROWS_AS(parse_cycles("(1 2", 4), Error);
  REQUIRE_THROWS_AS(parse_cycles("(1 9)", 4), Error);
  REQUIRE_THROWS_AS(parse_cycles("(1 1)", 4), Error);
  REQUIRE_THROWS_AS(parse_cycles("(0 1)", 4), Error);
}

TEST_CASE("closure from generators matches a naive closure", "[group]") {
  std::vector<Perm> gens = {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)};
  Group d8 = from_permutation_generators(4, gens, 5000, "D8");
  REQUIRE(d8.order == static_cast<int>(naive_perm_closure(4, gens).size()));
  REQUIRE(d8.order == 8);
  REQUIRE(d8.label(0) == "()");

  // The closure cap is enforced.
  std::vector<Perm> s4gens = {parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)};
  REQUIRE_THROWS_AS(from_permutation_generators(4, s4gens, 10), ResourceLimitError);
}

TEST_CASE("cayley table validation", "[group]") {
  Group c4 = from_cayley_table({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  REQUIRE(c4.order == 4);
  REQUIRE(c4.inv(1) == 3);
  REQUIRE(element_order(c4, 1) == 4);

  // Broken associativity: corrupt one entry of the C3 table.
  std::vector<std::vector<int>> bad = {{0, 1, 2}, {1, 2, 0}, {2, 0, 2}};
  try {
    from_cayley_table(bad);
    FAIL("expected MalformedTableError");
  } catch (const MalformedTableError& e) {
    // The failing triple is named.
    REQUIRE(std::string(e.what()).find("associativity fails") != std::string::npos);
    REQUIRE(std::string(e.what()).find("(1,1,2)") != std::string::npos);
  }

  // Row 0 is not the identity row.
  REQUIRE_THROWS_AS(from_cayley_table({{1, 0}, {0, 1}}), MalformedTableError);
  // No inverse / not a latin square.
  REQUIRE_THROWS_AS(from_cayley_table({{0, 1}, {1, 1}}), MalformedTableError);
  // Out-of-range entry.
  REQUIRE_THROWS_AS(from_cayley_table({{0, 1}, {1, 7}}), MalformedTableError);
}

TEST_CASE("composition order and conjugation conventions", "[group]") {
  Group s3 = symmetric(3);
  // a*b applies a first: (1 2)*(1 3) = (1 2 3).
  int ab = s3.mul(by_label(s3, "(1 2)"), by_label(s3, "(1 3)"));
  REQUIRE(s3.label(ab) == "(1 2 3)");
  // x^g = g^-1 x g: (1 2)^(1 2 3) = (2 3).
  int xg = s3.conj(by_label(s3, "(1 2)"), by_label(s3, "(1 2 3)"));
  REQUIRE(s3.label(xg) == "(2 3)");
}

TEST_CASE("product sets and the order identity", "[group]") {
  Group s3 = symmetric(3);
  ElemSet a = generated_subgroup(s3, ElemSet::single(s3.order, by_label(s3, "(1 2)")));
  ElemSet b = generated_subgroup(s3, ElemSet::single(s3.order, by_label(s3, "(1 3)")));
  ElemSet ab = product_set(s3, a, b);
  REQUIRE(ab == set_of(s3, {"()", "(1 2)", "(1 3)", "(1 2 3)"}));

  // |AB| |A n B| = |A| |B| whenever A and B are subgroups.
  Group s4 = symmetric(4);
  SubgroupLattice lat = all_subgroups(s4);
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j) {
      ElemSet prod = product_set(s4, lat.at(i), lat.at(j));
      ElemSet meet = lat.at(i) & lat.at(j);
      REQUIRE(static_cast<long>(prod.count()) * meet.count() ==
              static_cast<long>(lat.at(i).count()) * lat.at(j).count());
    }
}

TEST_CASE("generated subgroups", "[group]") {
  Group s3 = symmetric(3);
  REQUIRE(generated_subgroup(s3, ElemSet(s3.order)) == s3.trivial_set());
  ElemSet a3 = generated_subgroup(s3, ElemSet::single(s3.order, by_label(s3, "(1 2 3)")));
  REQUIRE(a3.count() == 3);
  REQUIRE(is_subgroup_set(s3, a3));
  REQUIRE(is_cyclic_subgroup(s3, a3));
  REQUIRE_FALSE(is_cyclic_subgroup(s3, s3.full_set()));
  REQUIRE(exponent_of(s3, s3.full_set()) == 6);
}

TEST_CASE("centralizers, normalizers, closures", "[group]") {
  Group s4 = symmetric(4);
  ElemSet c4 = generated_subgroup(s4, ElemSet::single(s4.order, by_label(s4, "(1 2 3 4)")));
  REQUIRE(normalizer(s4, c4).count() == 8);
  REQUIRE(centralizer(s4, c4).count() == 4);

  Group s3 = symmetric(3);
  ElemSet r = ElemSet::single(s3.order, by_label(s3, "(1 2 3)"));
  REQUIRE(centralizer(s3, r).count() == 3);
  ElemSet t = ElemSet::single(s3.order, by_label(s3, "(1 2)"));
  REQUIRE(normal_closure_in(s3, s3.full_set(), generated_subgroup(s3, t)) == s3.full_set());
  REQUIRE(derived_subgroup(s3, s3.full_set()).count() == 3);
  REQUIRE(commutator_subgroup(s3, s3.full_set(), s3.full_set()).count() == 3);
}

TEST_CASE("quotient groups", "[group]") {
  Group s4 = symmetric(4);
  ElemSet v4 = normal_closure_in(
      s4, s4.full_set(),
      generated_subgroup(s4, ElemSet::single(s4.order, by_label(s4, "(1 2)(3 4)"))));
  REQUIRE(v4.count() == 4);
  Quotient q = quotient_group(s4, v4);
  REQUIRE(q.grp.order == 6);
  REQUIRE_FALSE(is_abelian_set(q.grp, q.grp.full_set()));
  REQUIRE(is_homomorphism(s4, q.grp, q.hom.image));
  // Preimage of the trivial coset is the kernel.
  REQUIRE(q.preimage_of(q.grp.trivial_set()) == v4);
  REQUIRE(q.image_of(s4.full_set()) == q.grp.full_set());

  // Quotient by a non-normal subgroup is rejected.
  ElemSet c2 = generated_subgroup(s4, ElemSet::single(s4.order, by_label(s4, "(1 2)")));
  REQUIRE_THROWS_AS(quotient_group(s4, c2), PreconditionError);
}

TEST_CASE("realized subgroups", "[group]") {
  Group s4 = symmetric(4);
  ElemSet a4;
  {
    ElemSet seed(s4.order);
    seed.set(by_label(s4, "(1 2 3)"));
    seed.set(by_label(s4, "(2 3 4)"));
    a4 = generated_subgroup(s4, seed);
  }
  REQUIRE(a4.count() == 12);
  Realized r = realize_subgroup(s4, a4);
  REQUIRE(r.grp.order == 12);
  REQUIRE(std::is_sorted(r.to_parent.begin(), r.to_parent.end()));
  REQUIRE(r.lift(r.grp.full_set()) == a4);
  REQUIRE(r.restrict(a4) == r.grp.full_set());
  // Multiplication commutes with the embedding.
  for (int x = 0; x < r.grp.order; ++x)
    for (int y = 0; y < r.grp.order; ++y)
      REQUIRE(r.to_parent[static_cast<size_t>(r.grp.mul(x, y))] ==
              s4.mul(r.to_parent[static_cast<size_t>(x)], r.to_parent[static_cast<size_t>(y)]));
}

TEST_CASE("homomorphism checks", "[group]") {
  Group c4 = cyclic(4);
  Group c2 = cyclic(2);
  REQUIRE(is_homomorphism(c4, c2, {0, 1, 0, 1}));
  REQUIRE_FALSE(is_homomorphism(c4, c2, {0, 1, 1, 0}));
  REQUIRE_FALSE(is_homomorphism(c4, c2, {0, 1}));
}
