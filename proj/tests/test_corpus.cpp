// Builtin corpus constructions and the group file format.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "fusionlab/fusionlab.hpp"

using namespace fusionlab;

TEST_CASE("builtin corpus inventory", "[corpus]") {
  std::vector<Group> corpus = builtin_corpus();
  REQUIRE(corpus.size() == 44);
  std::set<std::string> names;
  for (const Group& g : corpus) {
    REQUIRE(names.insert(g.id).second);
    REQUIRE(g.order >= 1);
    REQUIRE(static_cast<int>(g.table.size()) == g.order * g.order);
  }
  std::map<std::string, int> order_of;
  for (const Group& g : corpus) order_of[g.id] = g.order;
  REQUIRE(order_of.at("C1") == 1);
  REQUIRE(order_of.at("C24") == 24);
  REQUIRE(order_of.at("V4") == 4);
  REQUIRE(order_of.at("C2^3") == 8);
  REQUIRE(order_of.at("C3^2") == 9);
  REQUIRE(order_of.at("D8") == 8);
  REQUIRE(order_of.at("D10") == 10);
  REQUIRE(order_of.at("D12") == 12);
  REQUIRE(order_of.at("Q8") == 8);
  REQUIRE(order_of.at("Q16") == 16);
  REQUIRE(order_of.at("S3") == 6);
  REQUIRE(order_of.at("S4") == 24);
  REQUIRE(order_of.at("S5") == 120);
  REQUIRE(order_of.at("A4") == 12);
  REQUIRE(order_of.at("A5") == 60);
  REQUIRE(order_of.at("SL(2,3)") == 24);
  REQUIRE(order_of.at("C7:C3") == 21);
  REQUIRE(order_of.at("(C5xC5):C3") == 75);
  REQUIRE(order_of.at("He3") == 27);
  REQUIRE(order_of.at("S3xC2") == 12);
  REQUIRE(order_of.at("A4xC2") == 24);
  REQUIRE(order_of.at("Q8xC3") == 24);
}

TEST_CASE("structural facts about the constructions", "[corpus]") {
  // Dihedral: order, exponent, center.
  Group d8 = dihedral(8);
  REQUIRE(exponent_of(d8, d8.full_set()) == 4);
  REQUIRE(centralizer(d8, d8.full_set()).count() == 2);
  REQUIRE_FALSE(is_abelian_set(d8, d8.full_set()));
  REQUIRE_THROWS_AS(dihedral(7), PreconditionError);
  REQUIRE_THROWS_AS(dihedral(4), PreconditionError);

  // Quaternion groups have a unique involution.
  for (Group q : {quaternion(), generalized_quaternion(16)}) {
    int invol = 0;
    for (int x = 1; x < q.order; ++x)
      if (element_order(q, x) == 2) ++invol;
    REQUIRE(invol == 1);
    GroupContext ctx(q);
    REQUIRE(ctx.minimal_subgroups_in(q.full_set()).size() == 1);
  }

  // SL(2,3): derived subgroup Q8, center of order 2, one involution.
  Group sl = sl23();
  REQUIRE(sl.order == 24);
  REQUIRE(derived_subgroup(sl, sl.full_set()).count() == 8);
  REQUIRE(centralizer(sl, sl.full_set()).count() == 2);

  // Extraspecial 3^{1+2} of exponent 3.
  Group he3 = extraspecial_exp_p(3);
  REQUIRE(he3.order == 27);
  REQUIRE(exponent_of(he3, he3.full_set()) == 3);
  REQUIRE(centralizer(he3, he3.full_set()).count() == 3);
  REQUIRE_FALSE(is_abelian_set(he3, he3.full_set()));

  // Elementary abelian groups.
  Group e8 = elementary_abelian(2, 3);
  REQUIRE(e8.order == 8);
  REQUIRE(exponent_of(e8, e8.full_set()) == 2);
  REQUIRE(is_abelian_set(e8, e8.full_set()));

  // Semidirect products: the Frobenius group of order 21 and the order-75
  // group with a minimal normal subgroup of order 25.
  Group f21 = semidirect_cyclic(7, 3, 2);
  REQUIRE(f21.order == 21);
  REQUIRE_FALSE(is_abelian_set(f21, f21.full_set()));
  REQUIRE(is_supersolvable_group(f21));
  REQUIRE_THROWS_AS(semidirect_cyclic(7, 3, 3), PreconditionError);

  Group g75 = semidirect_matrix(5, {0, 4, 1, 4});
  REQUIRE(g75.order == 75);
  std::vector<ElemSet> mins = minimal_normal_subgroups_direct(g75);
  REQUIRE(mins.size() == 1);
  REQUIRE(mins[0].count() == 25);
  REQUIRE_THROWS_AS(semidirect_matrix(5, {1, 0, 0, 0}), PreconditionError);

  // Direct products.
  Group q8c3 = direct_product(quaternion(), cyclic(3));
  REQUIRE(q8c3.order == 24);
  GroupContext ctx(q8c3);
  REQUIRE(is_nilpotent_in(ctx, q8c3.full_set()));

  // Symmetric and alternating groups.
  REQUIRE(symmetric(5).order == 120);
  REQUIRE(alternating(5).order == 60);
  REQUIRE(alternating(6).order == 360);
  REQUIRE(symmetric(1).order == 1);
  REQUIRE(alternating(2).order == 1);
}

TEST_CASE("sylow counts across the corpus", "[corpus]") {
  for (const Group& g : builtin_corpus()) {
    if (g.order > 75) continue;  // the full-corpus run lives in acceptance
    GroupContext ctx(g);
    for (int p : ctx.primes()) {
      std::vector<int> syl = ctx.sylows_in(g.full_set(), p);
      CAPTURE(g.id, p);
      REQUIRE(static_cast<int>(syl.size()) % p == 1);
      REQUIRE(g.order % static_cast<int>(syl.size()) == 0);
      for (int s : syl) REQUIRE(ctx.sub(s).count() == p_part(g.order, p));
    }
  }
}

TEST_CASE("group file format: perm", "[corpus]") {
  std::string text =
      "# symmetric group on four letters\n"
      "format perm\n"
      "degree 4\n"
      "\n"
      "gen (1 2)\n"
      "gen (1 2 3 4)\n";
  Group g = parse_group_text(text, "S4file");
  REQUIRE(g.order == 24);
  REQUIRE(g.id == "S4file");
  REQUIRE(g.label(0) == "()");

  // No generators: the trivial group.
  REQUIRE(parse_group_text("format perm\ndegree 3\n", "t").order == 1);

  // Closure cap.
  REQUIRE_THROWS_AS(parse_group_text("format perm\ndegree 10\ngen (1 2 3 4 5 6 7 8 9 10)\n",
                                     "c10", 5),
                    ResourceLimitError);
}

TEST_CASE("group file format: table", "[corpus]") {
  std::string text =
      "format table\n"
      "order 3\n"
      "row 0 1 2\n"
      "row 1 2 0\n"
      "row 2 0 1\n";
  Group g = parse_group_text(text, "C3file");
  REQUIRE(g.order == 3);
  REQUIRE(is_cyclic_subgroup(g, g.full_set()));

  // A well-formed file whose table is not a group.
  std::string bad =
      "format table\norder 3\nrow 0 1 2\nrow 1 2 0\nrow 2 0 2\n";
  REQUIRE_THROWS_AS(parse_group_text(bad, "x"), MalformedTableError);

  // Declared order above the cap.
  REQUIRE_THROWS_AS(parse_group_text("format table\norder 6000\n", "x"), ResourceLimitError);
  REQUIRE_NOTHROW(parse_group_text("format table\norder 1\nrow 0\n", "x", 1));
}

TEST_CASE("group file format: parse errors carry line numbers", "[corpus]") {
  auto line_of = [](const std::string& text) {
    try {
      parse_group_text(text, "x");
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  REQUIRE(line_of("degree 4\n") == 1);                          // no format yet
  REQUIRE(line_of("format perm\nformat perm\n") == 2);          // duplicate
  REQUIRE(line_of("format perm\ndegree 4\ndegree 4\n") == 3);   // duplicate
  REQUIRE(line_of("format perm\ngen (1 2)\n") == 2);            // gen before degree
  REQUIRE(line_of("format perm\ndegree 0\n") == 2);
  REQUIRE(line_of("format perm\ndegree 4\ngen (1 5)\n") == 3);  // bad cycle
  REQUIRE(line_of("format table\norder 2\nrow 0 1\nrow 1 0\nrow 0 1\n") == 5);
  REQUIRE(line_of("format table\norder 2\nrow 0 1\nrow 1 x\n") == 4);
  REQUIRE(line_of("format table\norder 2\nrow 0 1 1\n") == 3);  // wrong width
  REQUIRE(line_of("format wat\n") == 1);
  REQUIRE(line_of("bogus 1\n") == 1);
  REQUIRE(line_of("# only a comment\n") == 1);                  // missing format at EOF
  REQUIRE(line_of("format table\norder 2\nrow 0 1\n") == 3);    // not enough rows
  // The message includes the line number.
  try {
    parse_group_text("format perm\ndegree 4\ngen (1 5)\n", "x");
    FAIL();
  } catch (const ParseError& e) {
    REQUIRE(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("group files on disk", "[corpus]") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "fusionlab_corpus_test";
  fs::create_directories(dir);
  fs::path file = dir / "K4.grp";
  {
    std::ofstream out(file);
    out << "format perm\ndegree 4\ngen (1 2)(3 4)\ngen (1 3)(2 4)\n";
  }
  Group g = load_group_file(file.string());
  REQUIRE(g.order == 4);
  REQUIRE(g.id == "K4");  // filename stem
  REQUIRE(exponent_of(g, g.full_set()) == 2);

  REQUIRE_THROWS_AS(load_group_file((dir / "missing.grp").string()), Error);
  fs::remove_all(dir);
}
