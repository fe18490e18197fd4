#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treecover/decomposition.hpp"
#include "treecover/generators.hpp"

using namespace tc;

TEST_CASE("outer cycle of a plain cycle") {
  Graph g = gen_cycle(5);
  BlockDecomposition bd = biconnected_components(g);
  REQUIRE(bd.blocks.size() == 1);
  OuterEmbedding emb = outer_cycle(g, bd.blocks[0]);
  CHECK(emb.outer_cycle.size() == 5);
  CHECK(emb.outer_cycle[0] == 0);
  CHECK(emb.cycle_edges.size() == 5);
  CHECK(emb.chord_edges.empty());
  for (int i = 0; i < 5; ++i) {
    int e = emb.cycle_edges[i];
    int a = emb.outer_cycle[i], b = emb.outer_cycle[(i + 1) % 5];
    CHECK(((g.edges[e].first == a && g.edges[e].second == b) ||
           (g.edges[e].first == b && g.edges[e].second == a)));
  }
  CHECK(emb.pos_of(3) >= 0);
  CHECK(emb.pos_of(9) == -1);
}

TEST_CASE("outer cycle of the diamond") {
  Graph g = gen_diamond();
  BlockDecomposition bd = biconnected_components(g);
  OuterEmbedding emb = outer_cycle(g, bd.blocks[0]);
  CHECK(emb.outer_cycle.size() == 4);
  CHECK(emb.cycle_edges.size() == 4);
  CHECK(emb.chord_edges.size() == 1);
}

TEST_CASE("K4 block is not outerplanar") {
  Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
  BlockDecomposition bd = biconnected_components(g);
  CHECK(!is_block_outerplanar(g, bd.blocks[0]));
  CHECK_THROWS_AS(outer_cycle(g, bd.blocks[0]), NotOuterplanar);
}

TEST_CASE("block-cut tree of necklace(3)") {
  Graph g = gen_necklace(3);
  Ctx ctx = build_ctx(g);
  CHECK(ctx.bd.blocks.size() == 4);
  CHECK(ctx.bd.cut_vertices.size() == 3);
  // the root block contains vertex 0
  CHECK(ctx.vertex_in_block(ctx.bct.root, 0));
  CHECK(ctx.bct.parent[ctx.bct.root] == -1);
  int nchild = 0;
  for (int b = 0; b < (int)ctx.bd.blocks.size(); ++b) {
    if (b == ctx.bct.root) continue;
    CHECK(ctx.bct.parent[b] == ctx.bct.root);
    CHECK(ctx.bct.precedes(ctx.bct.root, b));
    CHECK(!ctx.bct.precedes(b, ctx.bct.root));
    ++nchild;
  }
  CHECK(nchild == 3);
  // subtree of the root covers every edge
  CHECK(ctx.subtree_edges(ctx.bct.root).size() == (size_t)g.m());
}

TEST_CASE("c_path walks the embedding") {
  Graph g = gen_cycle(6);
  Ctx ctx = build_ctx(g);
  OuterEmbedding emb = ctx.emb[0];
  CPath p = c_path(emb, emb.outer_cycle[1], emb.outer_cycle[4]);
  CHECK(p.seq.front() == emb.outer_cycle[1]);
  CHECK(p.seq.back() == emb.outer_cycle[4]);
  CHECK(p.seq.size() == 4);
  CPath q = c_path(emb, emb.outer_cycle[2], emb.outer_cycle[2]);
  CHECK(q.seq == std::vector<int>{emb.outer_cycle[2]});
}

TEST_CASE("build_ctx rejects out-of-class graphs") {
  CHECK_THROWS_AS(build_ctx(make_graph(3, {{0, 1}, {1, 2}})), ClassRejection);
  CHECK_THROWS_AS(
      build_ctx(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}})),
      ClassRejection);
}
