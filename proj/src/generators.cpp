#include "treecover/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace tc {

Graph gen_cycle(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return make_graph(n, es);
}

Graph gen_diamond() {
  return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

Graph gen_fan(int n) {
  if (n < 1) throw GraphError("fan needs n >= 1");
  if (n == 1) return gen_diamond();
  int c = n + 2;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < c; ++i) es.push_back({i, (i + 1) % c});
  for (int i = 2; i <= n; ++i) es.push_back({0, i});
  return make_graph(c, es);
}

Graph gen_necklace(int n) {
  if (n < 1) throw GraphError("necklace needs n >= 1");
  std::vector<std::pair<int, int>> es;
  int core = n == 1 ? 3 : 2 * n;
  for (int i = 0; i < core; ++i) es.push_back({i, (i + 1) % core});
  int next = core;
  int petals = n;
  for (int p = 0; p < petals; ++p) {
    int v = n == 1 ? 0 : 2 * p;
    int a = next++, b = next++;
    es.push_back({v, a});
    es.push_back({a, b});
    es.push_back({b, v});
  }
  return make_graph(next, es);
}

Graph gen_gap_family(int n) {
  if (n < 2) throw GraphError("gap family needs n >= 2");
  return gen_necklace(n);
}

namespace {

// non-crossing chords over cycle positions lo..hi via recursive arc splitting
void sample_chords(std::mt19937_64& rng, int lo, int hi, int cycle_len,
                   std::vector<std::pair<int, int>>& chords) {
  if (hi - lo < 2) return;
  if (rng() % 100 >= 55) return;
  int k = lo + 1 + (int)(rng() % (std::uint64_t)(hi - lo - 1));
  auto add = [&](int a, int b) {
    if (b - a < 2) return;
    if (a == 0 && b == cycle_len - 1) return;  // coincides with the wrap edge
    if (rng() % 2) chords.push_back({a, b});
  };
  add(lo, k);
  add(k, hi);
  sample_chords(rng, lo, k, cycle_len, chords);
  sample_chords(rng, k, hi, cycle_len, chords);
}

}  // namespace

Graph gen_random_cut_outerplanar(std::uint64_t seed, int block_count,
                                 int max_block_size) {
  if (block_count < 1 || max_block_size < 3)
    throw GraphError("bad generator parameters");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  std::vector<std::pair<int, int>> es;
  int next = 0;
  for (int b = 0; b < block_count; ++b) {
    int len = 3 + (int)(rng() % (std::uint64_t)(max_block_size - 2));
    int attach = -1;
    if (b > 0) attach = (int)(rng() % (std::uint64_t)next);
    std::vector<int> verts(len);
    for (int i = 0; i < len; ++i)
      verts[i] = (b > 0 && i == 0) ? attach : next++;
    for (int i = 0; i < len; ++i) es.push_back({verts[i], verts[(i + 1) % len]});
    std::vector<std::pair<int, int>> chords;
    sample_chords(rng, 0, len - 1, len, chords);
    for (auto [a, c] : chords) es.push_back({verts[a], verts[c]});
  }
  return make_graph(next, es);
}

namespace {

using Chords = std::vector<std::pair<int, int>>;

// all subsets of pairwise non-crossing diagonals of an n-gon
std::vector<Chords> noncrossing_chord_sets(int n, int max_chords) {
  std::vector<std::pair<int, int>> diag;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      diag.push_back({i, j});
    }
  std::vector<Chords> out;
  Chords cur;
  std::function<void(size_t)> rec = [&](size_t i) {
    out.push_back(cur);
    if ((int)cur.size() >= max_chords) return;
    for (size_t d = i; d < diag.size(); ++d) {
      auto [a, b] = diag[d];
      bool ok = true;
      for (auto [c, e] : cur) {
        bool a1 = c < a && a < e, b1 = c < b && b < e;
        if (a1 != b1 && a != c && a != e && b != c && b != e) {
          ok = false;
          break;
        }
      }
      if (ok) {
        cur.push_back(diag[d]);
        rec(d + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

struct Builder {
  std::vector<std::pair<int, int>> es;
  int next = 0;
  // returns the global ids of the block's cycle vertices
  std::vector<int> block(int len, const Chords& chords, int attach_global,
                         int attach_local) {
    std::vector<int> verts(len);
    for (int i = 0; i < len; ++i)
      verts[i] = (attach_global >= 0 && i == attach_local) ? attach_global : next++;
    for (int i = 0; i < len; ++i) es.push_back({verts[i], verts[(i + 1) % len]});
    for (auto [a, b] : chords) es.push_back({verts[a], verts[b]});
    return verts;
  }
  Graph done() const { return make_graph(next, es); }
};

}  // namespace

std::vector<Graph> corpus_small(int max_edges) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  auto push = [&](const Graph& g) {
    if (g.m() > max_edges) return;
    std::string key = serialize_graph(g);
    if (seen.insert(key).second) out.push_back(g);
  };

  // single blocks: every non-crossing chord set on small cycles
  for (int n = 3; n <= 8; ++n)
    for (const auto& ch : noncrossing_chord_sets(n, max_edges - n)) {
      Builder b;
      b.block(n, ch, -1, 0);
      push(b.done());
    }
  for (int n = 9; n <= max_edges; ++n) push(gen_cycle(n));

  // catalog of small blocks reused for multi-block combinations
  struct Blk {
    int len;
    Chords ch;
  };
  std::vector<Blk> small;  // <= 6 edges
  for (int n = 3; n <= 6; ++n)
    for (const auto& ch : noncrossing_chord_sets(n, 6 - n)) small.push_back({n, ch});
  std::vector<Blk> tiny;  // <= 5 edges
  for (const auto& b : small)
    if (b.len + (int)b.ch.size() <= 5) tiny.push_back(b);

  // two blocks glued at every vertex pairing
  for (const auto& b1 : small)
    for (const auto& b2 : tiny) {
      if (b1.len + (int)b1.ch.size() + b2.len + (int)b2.ch.size() > max_edges)
        continue;
      for (int v1 = 0; v1 < b1.len; ++v1)
        for (int v2 = 0; v2 < b2.len; ++v2) {
          Builder b;
          auto verts = b.block(b1.len, b1.ch, -1, 0);
          b.block(b2.len, b2.ch, verts[v1], v2);
          push(b.done());
        }
    }

  // larger first block with a triangle or diamond hung on it
  for (int n = 7; n <= 8; ++n)
    for (const auto& ch : noncrossing_chord_sets(n, 2))
      for (int second = 0; second < 2; ++second) {
        int m2 = second == 0 ? 3 : 5;
        if (n + (int)ch.size() + m2 > max_edges) continue;
        for (int v1 = 0; v1 < n; ++v1) {
          Builder b;
          auto verts = b.block(n, ch, -1, 0);
          if (second == 0)
            b.block(3, {}, verts[v1], 0);
          else
            b.block(4, {{0, 2}}, verts[v1], 0);
          push(b.done());
        }
      }

  // three blocks: two triangles on a core block, and chains
  std::vector<Blk> cores = {{3, {}}, {4, {}}, {4, {{0, 2}}}, {5, {}},
                            {5, {{0, 2}}}, {6, {}}, {6, {{0, 3}}}, {6, {{0, 2}}}};
  for (const auto& c : cores) {
    int mc = c.len + (int)c.ch.size();
    if (mc + 6 > max_edges) continue;
    for (int v1 = 0; v1 < c.len; ++v1)
      for (int v2 = v1; v2 < c.len; ++v2) {
        Builder b;
        auto verts = b.block(c.len, c.ch, -1, 0);
        b.block(3, {}, verts[v1], 0);
        b.block(3, {}, verts[v2], 0);
        push(b.done());
      }
    // chain: core - triangle - triangle
    for (int v1 = 0; v1 < c.len; ++v1) {
      Builder b;
      auto verts = b.block(c.len, c.ch, -1, 0);
      auto t = b.block(3, {}, verts[v1], 0);
      b.block(3, {}, t[1], 0);
      push(b.done());
    }
  }

  for (int n = 1; n <= 3; ++n) push(gen_necklace(n));
  for (int n = 1; n <= 6; ++n) push(gen_fan(n));
  return out;
}

}  // namespace tc
