#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treecover/generators.hpp"
#include "treecover/oracle.hpp"

using namespace tc;

TEST_CASE("tree number of tiny graphs") {
  CHECK(bf_tree_number(make_graph(3, {{0, 1}, {1, 2}})) == 1);  // a path is one tree
  CHECK(bf_tree_number(gen_cycle(3)) == 2);
  CHECK(bf_tree_number(gen_cycle(4)) == 2);
  CHECK(bf_tree_number(gen_cycle(6)) == 2);
  CHECK(bf_tree_number(gen_diamond()) == 2);
  CHECK(bf_tree_number(gen_fan(3)) == 2);
  CHECK(bf_tree_number(gen_fan(4)) == 2);
  CHECK(bf_tree_number(gen_necklace(1), 20) == 2);
  CHECK(bf_tree_number(gen_necklace(2), 20) == 2);
  CHECK(bf_tree_number(gen_necklace(3), 20) == 3);
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(bf_tree_number(gen_necklace(3), 10), OracleBudget);
}

TEST_CASE("minimum cover enumeration") {
  // a triangle splits into an edge plus a 2-edge path: three ways
  auto tri = bf_enumerate_min_covers(gen_cycle(3), 100);
  CHECK(tri.size() == 3);
  for (const Cover& c : tri) {
    CHECK(c.size() == 2);
    size_t tot = 0;
    for (auto& p : c) tot += p.size();
    CHECK(tot == 3);
  }
  CHECK(bf_enumerate_min_covers(gen_cycle(4), 100).size() == 6);
  CHECK(bf_enumerate_min_covers(gen_diamond(), 100).size() == 6);
  // the cap truncates
  CHECK(bf_enumerate_min_covers(gen_cycle(4), 2).size() == 2);
}

TEST_CASE("exists-min-cover search") {
  // some minimum cover of C6 has a part of size 1
  bool one = bf_exists_min_cover(gen_cycle(6), [](const Cover& c) {
    for (auto& p : c)
      if (p.size() == 1) return true;
    return false;
  });
  CHECK(one);
  // none has three parts
  bool three = bf_exists_min_cover(
      gen_cycle(6), [](const Cover& c) { return c.size() == 3; });
  CHECK(!three);
}

TEST_CASE("fitness and properness probes") {
  // every vertex of a cycle can sit at the split point of a 2-arc cover
  for (int v = 0; v < 4; ++v) CHECK(bf_is_fit(gen_cycle(4), v));
  CHECK(bf_is_fit(gen_necklace(2), 0, 20));

  CHECK(bf_proper_exists(gen_cycle(3), 0, 1));
  CHECK(bf_proper_exists(gen_cycle(3), 0, 0));
  CHECK(bf_proper_exists(gen_cycle(6), 0, 3));
  CHECK(bf_proper_exists(gen_cycle(6), 0, 0));
  CHECK(bf_proper_exists(gen_diamond(), 1, 3));

  CHECK(bf_simultaneous_fit(gen_cycle(6), {0, 3}));
  CHECK(!bf_simultaneous_fit(gen_cycle(6), {0, 2, 4}));
}

TEST_CASE("Nash-Williams arboricity") {
  CHECK(nash_williams_arboricity(make_graph(4, {{0, 1}, {1, 2}, {2, 3}})) == 1);
  CHECK(nash_williams_arboricity(gen_cycle(3)) == 2);
  CHECK(nash_williams_arboricity(gen_cycle(6)) == 2);
  CHECK(nash_williams_arboricity(gen_diamond()) == 2);
  CHECK(nash_williams_arboricity(gen_necklace(2)) == 2);
  CHECK(nash_williams_arboricity(gen_necklace(3)) == 2);
}
