#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treecover/generators.hpp"
#include "treecover/oracle.hpp"
#include "treecover/treenum.hpp"

using namespace tc;

TEST_CASE("families") {
  for (int n = 3; n <= 12; ++n) CHECK(tree_number(gen_cycle(n)) == 2);
  CHECK(tree_number(gen_diamond()) == 2);
  for (int n = 1; n <= 8; ++n) CHECK(tree_number(gen_fan(n)) == 2);
  for (int n = 1; n <= 12; ++n)
    CHECK(tree_number(gen_necklace(n)) == std::max(2, n));
  for (int n = 2; n <= 8; ++n) CHECK(tree_number(gen_gap_family(n)) == n);
}

TEST_CASE("class rejection") {
  CHECK_THROWS_AS(
      tree_number(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}})),
      ClassRejection);
  CHECK_THROWS_AS(tree_number(make_graph(3, {{0, 1}, {1, 2}})), ClassRejection);
}

TEST_CASE("oracle agreement on the small corpus") {
  for (const Graph& g : corpus_small(10)) {
    CHECK(tree_number(g) == bf_tree_number(g, 16));
  }
}

TEST_CASE("witness covers on the small corpus") {
  for (const Graph& g : corpus_small(10)) {
    Ctx ctx = build_ctx(g);
    ElementReport rep = analyze_graph(ctx);
    TreeCover cov = construct_cover(ctx);
    CHECK((int)cov.parts.size() == rep.tau);
    std::vector<int> all(g.m());
    for (int e = 0; e < g.m(); ++e) all[e] = e;
    CHECK(validate_cover(g, all, cov));
  }
}

TEST_CASE("witness cover on a large instance") {
  Graph g = gen_random_cut_outerplanar(11, 120, 10);
  REQUIRE(g.m() > 500);
  Ctx ctx = build_ctx(g);
  ElementReport rep = analyze_graph(ctx);
  TreeCover cov = construct_cover(ctx);
  CHECK((int)cov.parts.size() == rep.tau);
  std::vector<int> all(g.m());
  for (int e = 0; e < g.m(); ++e) all[e] = e;
  CHECK(validate_cover(g, all, cov));
}

TEST_CASE("validator catches bad covers") {
  Graph g = gen_cycle(4);
  std::vector<int> all = {0, 1, 2, 3};
  TreeCover cyc;
  cyc.parts = {{0, 1, 2, 3}};  // a cycle is not a tree
  CHECK(!validate_cover(g, all, cyc));
  TreeCover missing;
  missing.parts = {{0, 1}, {2}};  // edge 3 uncovered
  CHECK(!validate_cover(g, all, missing));
  TreeCover dup;
  dup.parts = {{0, 1}, {2, 3}, {0}};  // edge 0 twice
  CHECK(!validate_cover(g, all, dup));
  TreeCover ok;
  ok.parts = {{0, 1}, {2, 3}};
  CHECK(validate_cover(g, all, ok));
}

TEST_CASE("step-4 literal rule vs corrected rule on necklace(3)") {
  Ctx ctx = build_ctx(gen_necklace(3));
  ElementReport rep = analyze_graph(ctx);
  CHECK(rep.tau == 3);
  CHECK(rep.tau_literal == 4);
  CHECK(bf_tree_number(gen_necklace(3), 20) == 3);
}

TEST_CASE("lower bound against Nash-Williams") {
  for (const Graph& g : corpus_small(10)) {
    if (g.vertex_count > 16) continue;
    CHECK(tree_number(g) >= nash_williams_arboricity(g));
  }
}

TEST_CASE("arboricity class and the gap family") {
  for (int n = 1; n <= 20; ++n) CHECK(arboricity_class(gen_necklace(n)) == 2);
  // tree number minus arboricity grows without bound
  for (int n = 2; n <= 20; ++n)
    CHECK(tree_number(gen_necklace(n)) - arboricity_class(gen_necklace(n)) ==
          n - 2);
}
