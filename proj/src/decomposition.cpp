#include "treecover/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tc {

int OuterEmbedding::pos_of(int v) const {
  for (size_t i = 0; i < outer_cycle.size(); ++i)
    if (outer_cycle[i] == v) return (int)i;
  return -1;
}

namespace {

struct PeelStep {
  int v, u, w;
};

void check_non_crossing(const OuterEmbedding& emb, const Graph& g) {
  int n = (int)emb.outer_cycle.size();
  std::vector<std::pair<int, int>> spans;
  std::vector<int> pos(g.vertex_count, -1);
  for (int i = 0; i < n; ++i) pos[emb.outer_cycle[i]] = i;
  for (int e : emb.chord_edges) {
    int a = pos[g.edges[e].first], b = pos[g.edges[e].second];
    if (a > b) std::swap(a, b);
    if (b - a <= 1 || (a == 0 && b == n - 1))
      throw NotOuterplanar("chord coincides with a cycle edge");
    spans.push_back({a, b});
  }
  for (size_t i = 0; i < spans.size(); ++i)
    for (size_t j = i + 1; j < spans.size(); ++j) {
      auto [a, b] = spans[i];
      auto [c, d] = spans[j];
      bool c_in = a < c && c < b, d_in = a < d && d < b;
      if (c_in != d_in && c != a && c != b && d != a && d != b)
        throw NotOuterplanar("crossing chords");
    }
}

}  // namespace

OuterEmbedding outer_cycle(const Graph& g, const std::vector<int>& block_edges) {
  // local structure on the block's vertices
  std::map<int, std::set<int>> nbr;
  for (int e : block_edges) {
    auto [u, v] = g.edges[e];
    nbr[u].insert(v);
    nbr[v].insert(u);
  }
  int nv = (int)nbr.size();
  if (nv < 3) throw NotOuterplanar("block too small for an outer cycle");

  // peel degree-2 vertices, remembering where each one must be re-inserted
  std::vector<PeelStep> steps;
  std::set<int> deg2;
  for (auto& [v, s] : nbr)
    if (s.size() == 2) deg2.insert(v);
  int active = nv;
  while (active > 3) {
    // pick the smallest current degree-2 vertex for determinism
    int v = -1;
    while (!deg2.empty()) {
      int c = *deg2.begin();
      deg2.erase(deg2.begin());
      auto it = nbr.find(c);
      if (it != nbr.end() && it->second.size() == 2) {
        v = c;
        break;
      }
    }
    if (v == -1) throw NotOuterplanar("no degree-2 vertex to peel");
    auto it = nbr.find(v);
    int u = *it->second.begin(), w = *std::next(it->second.begin());
    steps.push_back({v, u, w});
    nbr.erase(it);
    nbr[u].erase(v);
    nbr[w].erase(v);
    if (!nbr[u].count(w)) {
      nbr[u].insert(w);
      nbr[w].insert(u);
    }
    for (int x : {u, w})
      if (nbr[x].size() == 2) deg2.insert(x);
    --active;
  }

  std::vector<int> cyc;
  for (auto& [v, s] : nbr) cyc.push_back(v);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!nbr[cyc[i]].count(cyc[j]))
        throw NotOuterplanar("peeled core is not a triangle");

  // re-insert peeled vertices in reverse order
  for (auto si = steps.rbegin(); si != steps.rend(); ++si) {
    int n = (int)cyc.size();
    int at = -1;
    for (int i = 0; i < n; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % n];
      if ((a == si->u && b == si->w) || (a == si->w && b == si->u)) {
        at = i;
        break;
      }
    }
    if (at == -1) throw NotOuterplanar("re-insertion slot vanished");
    cyc.insert(cyc.begin() + at + 1, si->v);
  }

  // canonical rotation and direction
  int n = (int)cyc.size();
  int mi = (int)(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
  std::rotate(cyc.begin(), cyc.begin() + mi, cyc.end());
  if (cyc[n - 1] < cyc[1]) {
    std::reverse(cyc.begin() + 1, cyc.end());
  }

  OuterEmbedding emb;
  emb.outer_cycle = cyc;
  std::set<int> used;
  for (int i = 0; i < n; ++i) {
    int e = g.edge_between(cyc[i], cyc[(i + 1) % n]);
    if (e < 0) throw NotOuterplanar("outer cycle edge missing");
    emb.cycle_edges.push_back(e);
    used.insert(e);
  }
  for (int e : block_edges)
    if (!used.count(e)) emb.chord_edges.push_back(e);
  if ((int)used.size() + (int)emb.chord_edges.size() != (int)block_edges.size())
    throw NotOuterplanar("cycle does not visit every vertex once");
  check_non_crossing(emb, g);
  return emb;
}

bool is_block_outerplanar(const Graph& g, const std::vector<int>& block_edges) {
  try {
    outer_cycle(g, block_edges);
    return true;
  } catch (const NotOuterplanar&) {
    return false;
  }
}

BlockCutTree build_block_cut_tree(const Graph& g, const BlockDecomposition& bd,
                                  int root_choice) {
  int nb = (int)bd.blocks.size();
  BlockCutTree t;
  t.parent.assign(nb, -1);
  t.parent_cut.assign(nb, -1);
  t.children.assign(nb, {});
  t.tin.assign(nb, 0);
  t.tout.assign(nb, 0);
  if (nb == 0) return t;

  std::vector<std::vector<int>> blocks_of_vertex(g.vertex_count);
  for (int b = 0; b < nb; ++b) {
    std::set<int> vs;
    for (int e : bd.blocks[b]) {
      vs.insert(g.edges[e].first);
      vs.insert(g.edges[e].second);
    }
    for (int v : vs) blocks_of_vertex[v].push_back(b);
  }

  int root = root_choice;
  if (root < 0) {
    // block containing the smallest vertex id; lowest block index on ties
    for (int v = 0; v < g.vertex_count && root < 0; ++v)
      if (!blocks_of_vertex[v].empty()) root = blocks_of_vertex[v][0];
  }
  t.root = root;

  std::vector<char> seen(nb, 0);
  seen[root] = 1;
  std::vector<int> order{root};
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int b = order[qi];
    std::set<int> vs;
    for (int e : bd.blocks[b]) {
      vs.insert(g.edges[e].first);
      vs.insert(g.edges[e].second);
    }
    for (int v : vs)
      for (int b2 : blocks_of_vertex[v])
        if (!seen[b2]) {
          seen[b2] = 1;
          t.parent[b2] = b;
          t.parent_cut[b2] = v;
          t.children[b].push_back(b2);
          order.push_back(b2);
        }
  }

  // Euler intervals for O(1) ancestor queries
  int timer = 0;
  std::vector<std::pair<int, size_t>> fs{{root, 0}};
  t.tin[root] = timer++;
  while (!fs.empty()) {
    auto& [b, ci] = fs.back();
    if (ci < t.children[b].size()) {
      int c = t.children[b][ci++];
      t.tin[c] = timer++;
      fs.push_back({c, 0});
    } else {
      t.tout[b] = timer++;
      fs.pop_back();
    }
  }
  return t;
}

CPath c_path(const OuterEmbedding& emb, int u, int v) {
  CPath p;
  p.block = emb.block;
  int pu = emb.pos_of(u), pv = emb.pos_of(v);
  if (pu < 0 || pv < 0) throw GraphError("vertex not on the outer cycle");
  p.seq.push_back(u);
  int n = (int)emb.outer_cycle.size();
  int i = pu;
  while (i != pv) {
    i = (i + 1) % n;
    p.seq.push_back(emb.outer_cycle[i]);
  }
  return p;
}

std::vector<int> Ctx::children_at(int block, int v) const {
  std::vector<int> out;
  for (int c : bct.children[block])
    if (bct.parent_cut[c] == v) out.push_back(c);
  return out;
}

std::vector<int> Ctx::subtree_blocks(int block) const {
  std::vector<int> out{block};
  for (size_t i = 0; i < out.size(); ++i)
    for (int c : bct.children[out[i]]) out.push_back(c);
  return out;
}

std::vector<int> Ctx::subtree_edges(int block) const {
  std::vector<int> out;
  for (int b : subtree_blocks(block))
    for (int e : bd.blocks[b]) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

bool Ctx::vertex_in_block(int block, int v) const {
  return emb[block].pos_of(v) >= 0;
}

Ctx build_ctx(const Graph& g) {
  Ctx ctx;
  ctx.g = g;
  ctx.report = validate_class(g);
  if (!ctx.report.accepted())
    throw ClassRejection("graph rejected: " + ctx.report.describe());
  if (g.m() == 0) throw ClassRejection("graph rejected: empty graph");
  ctx.bd = biconnected_components(g);
  ctx.emb.resize(ctx.bd.blocks.size());
  for (size_t b = 0; b < ctx.bd.blocks.size(); ++b) {
    ctx.emb[b] = outer_cycle(g, ctx.bd.blocks[b]);
    ctx.emb[b].block = (int)b;
  }
  ctx.bct = build_block_cut_tree(g, ctx.bd);
  return ctx;
}

}  // namespace tc
