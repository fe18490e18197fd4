#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "treecover/generators.hpp"

using namespace tc;

TEST_CASE("fixed families") {
  CHECK(gen_cycle(3).m() == 3);
  CHECK(gen_cycle(7).m() == 7);
  CHECK(gen_diamond().vertex_count == 4);
  CHECK(gen_diamond().m() == 5);
  CHECK(gen_fan(1).edges == gen_diamond().edges);
  CHECK(gen_fan(4).m() == 6 + 3);  // 6-cycle plus chords (0,2),(0,3),(0,4)

  CHECK(gen_necklace(1).m() == 6);
  CHECK(gen_necklace(2).m() == 10);
  CHECK(gen_necklace(3).m() == 15);
  CHECK(gen_necklace(3).vertex_count == 12);
  CHECK(gen_necklace(4).m() == 20);

  CHECK(gen_gap_family(3).m() == 15);
  for (int n = 2; n <= 6; ++n)
    CHECK(validate_class(gen_gap_family(n)).accepted());
  for (int n = 1; n <= 10; ++n)
    CHECK(validate_class(gen_necklace(n)).accepted());
  for (int n = 1; n <= 8; ++n)
    CHECK(validate_class(gen_fan(n)).accepted());
}

TEST_CASE("random generator is deterministic and in class") {
  for (std::uint64_t s : {1ull, 7ull, 42ull, 1000ull}) {
    Graph a = gen_random_cut_outerplanar(s, 3, 6);
    Graph b = gen_random_cut_outerplanar(s, 3, 6);
    CHECK(a.edges == b.edges);
    CHECK(validate_class(a).accepted());
  }
  // different seeds give different graphs (at least somewhere)
  CHECK(gen_random_cut_outerplanar(1, 3, 6).edges !=
        gen_random_cut_outerplanar(2, 3, 6).edges);
  // size scales with the block count
  Graph big = gen_random_cut_outerplanar(5, 50, 8);
  CHECK(big.m() > 100);
  CHECK(validate_class(big).accepted());
}

TEST_CASE("small corpus") {
  std::vector<Graph> c8 = corpus_small(8);
  CHECK(c8.size() == 189);
  CHECK(corpus_small(10).size() == 1005);
  std::set<std::string> seen;
  for (const Graph& g : c8) {
    CHECK(g.m() <= 8);
    CHECK(validate_class(g).accepted());
    CHECK(seen.insert(serialize_graph(g)).second);  // deduplicated
  }
  // monotone in the bound
  CHECK(corpus_small(10).size() > c8.size());
}
