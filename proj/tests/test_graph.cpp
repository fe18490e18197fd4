#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treecover/graph.hpp"

using namespace tc;

TEST_CASE("make_graph basics") {
  Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(g.vertex_count == 4);
  CHECK(g.m() == 4);
  CHECK(g.deg(0) == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.edge_between(2, 3) == 2);
  CHECK(g.edge_between(0, 2) == -1);
  CHECK(g.other_end(0, 0) == 1);
  CHECK(g.other_end(0, 1) == 0);
}

TEST_CASE("make_graph rejects bad input") {
  CHECK_THROWS_AS(make_graph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(make_graph(2, {{0, 5}}), GraphError);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}}), GraphError);
}

TEST_CASE("serialize / load round trip") {
  Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  Graph h = load_graph(serialize_graph(g));
  CHECK(h.vertex_count == g.vertex_count);
  CHECK(h.edges == g.edges);
  CHECK_THROWS_AS(load_graph("0 1\n1 nonsense\n"), GraphError);
}

TEST_CASE("class validation") {
  // C4: accepted
  CHECK(validate_class(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})).accepted());

  // path: has a bridge
  ClassReport path = validate_class(make_graph(3, {{0, 1}, {1, 2}}));
  CHECK(!path.accepted());
  CHECK(!path.is_bridgeless);

  // two disjoint triangles: disconnected
  ClassReport disc = validate_class(
      make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
  CHECK(!disc.is_connected);

  // K4: a block that is not outerplanar
  ClassReport k4 = validate_class(
      make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}));
  CHECK(!k4.blocks_outerplanar);
  CHECK(k4.describe().find("not outerplanar") != std::string::npos);
}

TEST_CASE("biconnected components") {
  // bowtie: two triangle blocks glued at vertex 2
  Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  BlockDecomposition bd = biconnected_components(g);
  CHECK(bd.blocks.size() == 2);
  CHECK(bd.cut_vertices == std::vector<int>{2});
  CHECK(bd.is_cut(2));
  CHECK(!bd.is_cut(0));
  CHECK(bd.block_of_edge[0] == bd.block_of_edge[1]);
  CHECK(bd.block_of_edge[0] != bd.block_of_edge[3]);

  CHECK_THROWS_AS(biconnected_components(make_graph(
                      4, {{0, 1}, {2, 3}})),
                  GraphError);
}
