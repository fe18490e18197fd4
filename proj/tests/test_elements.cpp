#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "treecover/elements.hpp"
#include "treecover/generators.hpp"

using namespace tc;

TEST_CASE("whole graph as an element") {
  Ctx c6 = build_ctx(gen_cycle(6));
  Element e6 = graph_as_element(c6);
  CHECK(e6.closed);
  CHECK(e6.n_spine() == 6);
  CHECK(e6.k_edges() == 6);
  CHECK(e6.chords.empty());
  CHECK(e6.bundles.empty());
  CHECK(element_is_simple(c6, e6));
  CHECK(element_edges(c6, e6).size() == 6);

  Ctx dia = build_ctx(gen_diamond());
  Element ed = graph_as_element(dia);
  CHECK(ed.closed);
  CHECK(ed.n_spine() == 4);
  CHECK(ed.chords.size() == 1);
  CHECK(element_is_simple(dia, ed));

  // fans: every chord shares the anchor, still simple
  for (int n = 1; n <= 6; ++n) {
    Ctx f = build_ctx(gen_fan(n));
    CHECK(element_is_simple(f, graph_as_element(f)));
  }
}

TEST_CASE("chord spans") {
  Ctx dia = build_ctx(gen_diamond());
  Element ed = graph_as_element(dia);
  const Chord& c = ed.chords[0];
  CHECK(c.a < c.b);
  CHECK(c.b - c.a >= 2);             // a chord covers at least two spine edges
  CHECK(c.b < ed.n_spine());         // never crosses the anchor
  CHECK(ed.chord_at(c.a));
  CHECK(ed.chord_at(c.b));
  CHECK(chord_level(ed, c.edge) == 0);
}

TEST_CASE("necklace decomposes into petal sub-elements") {
  for (int n = 2; n <= 3; ++n) {
    Ctx ctx = build_ctx(gen_necklace(n));
    Element top = graph_as_element(ctx);
    CHECK(!element_is_simple(ctx, top));
    std::vector<SubCand> cands = direct_subcands(ctx, top);
    CHECK((int)cands.size() == n);
    std::set<int> seen;
    for (const SubCand& cd : cands) {
      Element ch = child_element(ctx, top, cd);
      std::vector<int> ce = element_edges(ctx, ch);
      for (int e : ce) CHECK(seen.insert(e).second);  // edge sets disjoint
      CHECK(element_is_simple(ctx, ch));
    }
    CHECK(direct_subelements(ctx, top).size() == cands.size());
  }
}

TEST_CASE("contraction produces a residual with sites") {
  Ctx ctx = build_ctx(gen_necklace(3));
  Element top = graph_as_element(ctx);
  std::vector<SubCand> cands = direct_subcands(ctx, top);
  ContractResult cr = contract(ctx, top, cands);
  CHECK(cr.site_vertex.size() == cands.size());
  CHECK(cr.residual.bundles.empty());
  // the residual keeps real edge ids only
  for (int e : cr.residual.spine_edges) CHECK(e < ctx.g.m());
  for (int v : cr.site_vertex) CHECK(cr.residual.pos_of_vertex(v) >= 0);
}

TEST_CASE("structural fitness on cycles") {
  // in a chordless closed element every spine node is fit
  Ctx c6 = build_ctx(gen_cycle(6));
  Element e6 = graph_as_element(c6);
  for (int p = 0; p < e6.n_spine(); ++p) CHECK(is_fit(e6, p));
  FitnessPath fp = fitness_path(e6, 2);
  CHECK(fp.closed);

  // diamond: the two chord-free nodes sit strictly inside one chord span
  Ctx dia = build_ctx(gen_diamond());
  Element ed = graph_as_element(dia);
  const Chord& c = ed.chords[0];
  for (int p = 0; p < ed.n_spine(); ++p) {
    if (ed.chord_at(p)) continue;
    CHECK(is_fit(ed, p) == is_fit_vertex(ed, ed.spine[p]));
    FitnessPath f = fitness_path(ed, p);
    CHECK(!f.closed);
    if (p > c.a && p < c.b) {
      CHECK(f.lo == c.a);
      CHECK(f.hi == c.b);
    }
  }
}

TEST_CASE("chord levels and indifferent sets in a fan") {
  Ctx f = build_ctx(gen_fan(3));
  Element e = graph_as_element(f);
  REQUIRE(e.chords.size() == 2);
  int lo = -1, hi = -1;  // chords by nesting level
  for (const Chord& c : e.chords) {
    int lv = chord_level(e, c.edge);
    if (lv == 0) lo = c.edge;
    if (lv == 1) hi = c.edge;
  }
  REQUIRE(lo >= 0);
  REQUIRE(hi >= 0);
  // the level-0 chord is the only member under the level-1 chord
  CHECK(indifferent_set(e, hi) == std::vector<int>{lo});
  CHECK_THROWS_AS(indifferent_set(e, lo), GraphError);
}
