#include "treecover/elements.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "treecover/dsu.hpp"

namespace tc {

int Element::pos_of_vertex(int v) const {
  for (int i = 0; i < n_spine(); ++i)
    if (spine[i] == v) return i;
  return -1;
}

bool Element::chord_at(int pos) const {
  for (const auto& c : chords)
    if (c.a == pos || c.b == pos) return true;
  return false;
}

bool Element::bundle_at(int pos) const {
  for (const auto& b : bundles)
    if (b.first == pos && !b.second.empty()) return true;
  return false;
}

std::pair<int, int> Element::spine_edge_ends_pos(int i) const {
  if (closed) return {i, (i + 1) % n_spine()};
  return {i, i + 1};
}

namespace {

void attach_bundles(const Ctx& ctx, Element& e) {
  for (int p = 0; p < e.n_spine(); ++p) {
    auto ch = ctx.children_at(e.block, e.spine[p]);
    if (!ch.empty()) e.bundles.push_back({p, ch});
  }
}

void chords_from_block(const Ctx& ctx, Element& e) {
  const auto& emb = ctx.emb[e.block];
  for (int c : emb.chord_edges) {
    int pa = e.pos_of_vertex(ctx.g.edges[c].first);
    int pb = e.pos_of_vertex(ctx.g.edges[c].second);
    if (pa < 0 || pb < 0) continue;
    if (pa > pb) std::swap(pa, pb);
    // for open arcs only chords whose short side lies inside the arc belong
    e.chords.push_back({c, pa, pb});
  }
  std::sort(e.chords.begin(), e.chords.end(),
            [](const Chord& x, const Chord& y) {
              return x.a != y.a ? x.a < y.a : x.b < y.b;
            });
}

}  // namespace

Element closed_block_element(const Ctx& ctx, int block, int anchor) {
  const auto& emb = ctx.emb[block];
  Element e;
  e.block = block;
  e.closed = true;
  e.spine = emb.outer_cycle;
  int at = emb.pos_of(anchor);
  if (at < 0) throw GraphError("anchor not on the block's outer cycle");
  std::rotate(e.spine.begin(), e.spine.begin() + at, e.spine.end());
  int k = (int)e.spine.size();
  for (int i = 0; i < k; ++i) {
    int id = ctx.g.edge_between(e.spine[i], e.spine[(i + 1) % k]);
    e.spine_edges.push_back(id);
  }
  chords_from_block(ctx, e);
  attach_bundles(ctx, e);
  return e;
}

Element graph_as_element(const Ctx& ctx) {
  int root = ctx.bct.root;
  const auto& emb = ctx.emb[root];
  // prefer a chord-free, bundle-free, degree-2 vertex as the anchor
  int anchor = -1;
  for (int v : emb.outer_cycle) {
    if (ctx.g.deg(v) != 2) continue;
    bool chord = false;
    for (int c : emb.chord_edges)
      if (ctx.g.edges[c].first == v || ctx.g.edges[c].second == v) chord = true;
    if (chord) continue;
    if (!ctx.children_at(root, v).empty()) continue;
    if (anchor < 0 || v < anchor) anchor = v;
  }
  if (anchor < 0) anchor = emb.outer_cycle[0];
  return closed_block_element(ctx, root, anchor);
}

Element make_element(const Ctx& ctx, int block, int u, int v) {
  if (u == v) {
    auto ch = ctx.children_at(block, u);
    if (ch.empty()) throw GraphError("no attached subtree at the node");
    return closed_block_element(ctx, ch[0], u);
  }
  const auto& emb = ctx.emb[block];
  Element e;
  e.block = block;
  e.closed = false;
  e.spine = c_path(emb, u, v).seq;
  for (size_t i = 0; i + 1 < e.spine.size(); ++i)
    e.spine_edges.push_back(ctx.g.edge_between(e.spine[i], e.spine[i + 1]));
  chords_from_block(ctx, e);
  attach_bundles(ctx, e);
  return e;
}

std::vector<int> element_edges(const Ctx& ctx, const Element& e) {
  std::vector<int> out = e.spine_edges;
  for (const auto& c : e.chords) out.push_back(c.edge);
  for (const auto& [pos, blocks] : e.bundles) {
    (void)pos;
    for (int b : blocks)
      for (int id : ctx.subtree_edges(b)) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// finds separable chord-covered runs: maximal covered intervals whose
// endpoints are chord endpoints with nothing from outside attached to them
void collect_runs(const Element& e, int lo, int hi, const std::vector<int>& chs,
                  bool nested, std::vector<SubCand>& out) {
  if (chs.empty()) return;
  std::vector<char> covered(hi - lo, 0);
  for (int ci : chs)
    for (int j = e.chords[ci].a; j < e.chords[ci].b; ++j) covered[j - lo] = 1;
  int i = 0;
  while (i < hi - lo) {
    if (!covered[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j < hi - lo && covered[j]) ++j;
    int A = lo + i, B = lo + j;  // vertices A..B, edges A..B-1 covered
    std::vector<int> cluster;
    for (int ci : chs)
      if (e.chords[ci].a >= A && e.chords[ci].b <= B) cluster.push_back(ci);
    bool sep;
    if (nested) {
      sep = A > lo && B < hi;
    } else if (e.closed) {
      // the anchor may not disappear into a run, and the complement must
      // leave enough of the cycle to contract against
      sep = A > 0 && (e.k_edges() - (B - A)) >= 3;
    } else {
      sep = A > 0 && B < e.n_spine() - 1;
    }
    if (sep) {
      SubCand c;
      c.is_run = true;
      c.lo = A;
      c.hi = B;
      c.chord_idx = cluster;
      out.push_back(c);
    } else {
      // kept in the core: recurse strictly under each top chord
      for (int t : cluster) {
        bool top = true;
        for (int o : cluster)
          if (o != t && e.chords[o].a <= e.chords[t].a &&
              e.chords[t].b <= e.chords[o].b)
            top = false;
        if (!top) continue;
        std::vector<int> sub;
        for (int o : cluster)
          if (o != t && e.chords[o].a >= e.chords[t].a &&
              e.chords[o].b <= e.chords[t].b)
            sub.push_back(o);
        collect_runs(e, e.chords[t].a, e.chords[t].b, sub, true, out);
      }
    }
    i = j;
  }
}

}  // namespace

std::vector<SubCand> direct_subcands(const Ctx& ctx, const Element& e) {
  (void)ctx;
  std::vector<SubCand> out;
  std::vector<int> all;
  for (size_t i = 0; i < e.chords.size(); ++i) all.push_back((int)i);
  std::vector<SubCand> runs;
  collect_runs(e, 0, e.k_edges(), all, false, runs);
  std::sort(runs.begin(), runs.end(),
            [](const SubCand& a, const SubCand& b) { return a.lo < b.lo; });
  for (auto& r : runs) out.push_back(r);
  for (const auto& [pos, blocks] : e.bundles) {
    bool inside = false;
    for (const auto& r : runs)
      if (pos >= r.lo && pos <= r.hi) inside = true;
    if (inside) continue;  // travels with the run candidate
    for (int b : blocks) {
      SubCand c;
      c.pos = pos;
      c.child_block = b;
      out.push_back(c);
    }
  }
  return out;
}

Element child_element(const Ctx& ctx, const Element& e, const SubCand& c) {
  if (!c.is_run) return closed_block_element(ctx, c.child_block, e.spine[c.pos]);
  Element s;
  s.block = e.block;
  s.closed = false;
  for (int p = c.lo; p <= c.hi; ++p) s.spine.push_back(e.spine[p]);
  for (int p = c.lo; p < c.hi; ++p) s.spine_edges.push_back(e.spine_edges[p]);
  for (int ci : c.chord_idx) {
    Chord ch = e.chords[ci];
    ch.a -= c.lo;
    ch.b -= c.lo;
    s.chords.push_back(ch);
  }
  for (const auto& [pos, blocks] : e.bundles)
    if (pos >= c.lo && pos <= c.hi) s.bundles.push_back({pos - c.lo, blocks});
  return s;
}

std::vector<Element> direct_subelements(const Ctx& ctx, const Element& e) {
  std::vector<Element> out;
  for (const auto& c : direct_subcands(ctx, e)) out.push_back(child_element(ctx, e, c));
  return out;
}

bool element_is_simple(const Ctx& ctx, const Element& e) {
  return direct_subcands(ctx, e).empty();
}

ContractResult contract(const Ctx& ctx, const Element& e,
                        const std::vector<SubCand>& cands) {
  ContractResult r;
  Element& res = r.residual;
  res.block = e.block;
  res.closed = e.closed;
  res.first_synthetic = e.first_synthetic >= 0 ? e.first_synthetic
                                               : ctx.g.vertex_count;
  int next_syn = res.first_synthetic;
  // reserve ids already used by an outer contraction (nested analyses)
  for (int v : e.spine)
    if (v >= next_syn) next_syn = v + 1;

  std::vector<int> run_of_pos(e.n_spine(), -1);
  r.site_vertex.assign(cands.size(), -1);
  for (size_t i = 0; i < cands.size(); ++i)
    if (cands[i].is_run)
      for (int p = cands[i].lo; p <= cands[i].hi; ++p) run_of_pos[p] = (int)i;

  std::vector<int> newpos(e.n_spine(), -1);
  std::vector<int> out_edge;  // per new vertex: index of its outgoing spine edge
  int p = 0;
  int total = e.n_spine();
  while (p < total) {
    int run = run_of_pos[p];
    if (run >= 0) {
      int vid = next_syn++;
      r.site_vertex[run] = vid;
      for (int q = cands[run].lo; q <= cands[run].hi; ++q)
        newpos[q] = (int)res.spine.size();
      res.spine.push_back(vid);
      out_edge.push_back(cands[run].hi);
      p = cands[run].hi + 1;
    } else {
      newpos[p] = (int)res.spine.size();
      res.spine.push_back(e.spine[p]);
      out_edge.push_back(p);
      ++p;
    }
  }
  int limit = res.closed ? (int)res.spine.size() : (int)res.spine.size() - 1;
  for (int i = 0; i < limit; ++i)
    res.spine_edges.push_back(e.spine_edges[out_edge[i]]);

  std::set<int> gone;
  for (const auto& c : cands)
    for (int ci : c.chord_idx) gone.insert(ci);
  for (size_t ci = 0; ci < e.chords.size(); ++ci) {
    if (gone.count((int)ci)) continue;
    Chord ch = e.chords[ci];
    ch.a = newpos[ch.a];
    ch.b = newpos[ch.b];
    res.chords.push_back(ch);
  }
  for (size_t i = 0; i < cands.size(); ++i)
    if (!cands[i].is_run) r.site_vertex[i] = e.spine[cands[i].pos];
  return r;
}

int chord_level(const Element& e, int chord_edge) {
  int self = -1;
  for (size_t i = 0; i < e.chords.size(); ++i)
    if (e.chords[i].edge == chord_edge) self = (int)i;
  if (self < 0) throw GraphError("not a chord of the element");
  std::function<int(int)> lvl = [&](int i) -> int {
    int best = -1;
    for (size_t j = 0; j < e.chords.size(); ++j) {
      if ((int)j == i) continue;
      if (e.chords[j].a >= e.chords[i].a && e.chords[j].b <= e.chords[i].b)
        best = std::max(best, lvl((int)j));
    }
    return best + 1;
  };
  return lvl(self);
}

std::vector<int> indifferent_set(const Element& e, int chord_edge) {
  if (chord_level(e, chord_edge) != 1)
    throw GraphError("indifferent set needs a level-1 chord");
  int self = -1;
  for (size_t i = 0; i < e.chords.size(); ++i)
    if (e.chords[i].edge == chord_edge) self = (int)i;
  std::vector<int> out;
  std::vector<std::pair<int, int>> spans;
  for (size_t j = 0; j < e.chords.size(); ++j) {
    if ((int)j == self) continue;
    if (e.chords[j].a >= e.chords[self].a && e.chords[j].b <= e.chords[self].b) {
      out.push_back(e.chords[j].edge);
      spans.push_back({e.chords[j].a, e.chords[j].b});
    }
  }
  // the level-0 edges must chain into at most two paths touching the ends
  std::sort(spans.begin(), spans.end());
  int paths = 0;
  for (size_t i = 0; i < spans.size();) {
    size_t j = i;
    while (j + 1 < spans.size() && spans[j + 1].first == spans[j].second) ++j;
    ++paths;
    bool touches = spans[i].first == e.chords[self].a ||
                   spans[j].second == e.chords[self].b;
    if (!touches) throw GraphError("indifferent set does not touch the chord ends");
    i = j + 1;
  }
  if (paths > 2) throw GraphError("indifferent set forms more than two paths");
  std::sort(out.begin(), out.end());
  return out;
}

FitnessPath fitness_path(const Element& e, int pos) {
  auto blocked = [&](int p) { return e.chord_at(p) || e.bundle_at(p); };
  if (blocked(pos)) throw GraphError("node is not a degree-2 chord-free vertex");
  FitnessPath f;
  int n = e.n_spine();
  if (e.closed) {
    bool any = false;
    for (int i = 0; i < n; ++i) any |= blocked(i);
    if (!any) {
      f.closed = true;
      f.lo = f.hi = pos;
      f.seq = e.spine;
      return f;
    }
    int lo = pos;
    while (!blocked(lo)) lo = (lo + n - 1) % n;
    int hi = pos;
    while (!blocked(hi)) hi = (hi + 1) % n;
    f.lo = lo;
    f.hi = hi;
    for (int i = lo;; i = (i + 1) % n) {
      f.seq.push_back(e.spine[i]);
      if (i == hi) break;
    }
    return f;
  }
  int lo = pos;
  while (lo > 0 && !blocked(lo)) --lo;
  int hi = pos;
  while (hi < n - 1 && !blocked(hi)) ++hi;
  f.lo = lo;
  f.hi = hi;
  for (int i = lo; i <= hi; ++i) f.seq.push_back(e.spine[i]);
  return f;
}

bool is_fit(const Element& e, int pos) {
  FitnessPath f = fitness_path(e, pos);
  if (f.closed) return true;
  // both path ends must carry a chord, otherwise a break at `pos` strands
  // the stub in a tree of its own
  if (!e.chord_at(f.lo) || !e.chord_at(f.hi)) return false;
  // removing the path's edges and interior must leave one connected piece
  int n = e.n_spine();
  std::set<int> path_edges;
  if (e.closed)
    for (int i = f.lo; i != f.hi; i = (i + 1) % n) path_edges.insert(i);
  else
    for (int i = f.lo; i < f.hi; ++i) path_edges.insert(i);
  std::map<int, int> idx;
  auto vid = [&](int p) {
    auto it = idx.find(p);
    if (it == idx.end()) it = idx.insert({p, (int)idx.size()}).first;
    return it->second;
  };
  std::vector<std::pair<int, int>> rest;
  int limit = e.closed ? n : n - 1;
  for (int i = 0; i < limit; ++i) {
    if (path_edges.count(i)) continue;
    auto [x, y] = e.spine_edge_ends_pos(i);
    rest.push_back({vid(x), vid(y)});
  }
  for (const auto& c : e.chords) rest.push_back({vid(c.a), vid(c.b)});
  if (rest.empty()) return false;
  DsuUndo d((int)idx.size());
  for (auto [x, y] : rest) d.unite(x, y);
  int roots = 0;
  for (int i = 0; i < (int)idx.size(); ++i)
    if (d.find(i) == i) ++roots;
  return roots == 1;
}

bool is_fit_vertex(const Element& e, int vertex) {
  int p = e.pos_of_vertex(vertex);
  if (p < 0) throw GraphError("vertex not on the spine");
  return is_fit(e, p);
}

}  // namespace tc
