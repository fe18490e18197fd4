#include "treecover/oracle.hpp"

#include <algorithm>

#include "treecover/dsu.hpp"

namespace tc {

namespace {

// edges ordered so consecutive ones tend to share vertices; helps pruning
std::vector<int> dfs_edge_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> edone(g.m(), 0), vdone(g.vertex_count, 0);
  for (int s = 0; s < g.vertex_count; ++s) {
    if (vdone[s]) continue;
    std::vector<int> st{s};
    vdone[s] = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (auto [w, e] : g.adj[v]) {
        if (!edone[e]) {
          edone[e] = 1;
          order.push_back(e);
        }
        if (!vdone[w]) {
          vdone[w] = 1;
          st.push_back(w);
        }
      }
    }
  }
  return order;
}

struct Search {
  const Graph& g;
  int k, m, n;
  std::vector<int> order;
  std::vector<int> pos_last;                 // per vertex, last position it occurs at
  std::vector<std::vector<int>> retire_at;   // vertices whose last position is i
  std::vector<int> color;                    // per position
  std::vector<DsuUndo> dsu;                  // per part
  std::vector<std::vector<int>> incid;       // per part, per vertex: incident edges
  std::vector<int> comps;                    // per part
  std::vector<std::vector<int>> maxlast;     // per part, per root: newest position in comp
  std::function<bool(Search&)> leaf;         // returns true to stop the search
  bool stopped = false;

  explicit Search(const Graph& graph, int parts) : g(graph), k(parts) {
    m = g.m();
    n = g.vertex_count;
    order = dfs_edge_order(g);
    pos_last.assign(n, -1);
    for (int i = 0; i < m; ++i) {
      auto [u, v] = g.edges[order[i]];
      pos_last[u] = i;
      pos_last[v] = i;
    }
    retire_at.assign(m + 1, {});
    for (int v = 0; v < n; ++v)
      if (pos_last[v] >= 0) retire_at[pos_last[v]].push_back(v);
    color.assign(m, -1);
    dsu.assign(k, DsuUndo(n));
    incid.assign(k, std::vector<int>(n, 0));
    comps.assign(k, 0);
    maxlast.resize(k);
    for (int p = 0; p < k; ++p) maxlast[p] = pos_last;
  }

  bool dead_component(int i) {
    // a part component whose vertices all lie in the past can no longer be
    // connected to the rest of its part
    if (i == 0) return false;
    for (int v : retire_at[i - 1])
      for (int p = 0; p < k; ++p)
        if (incid[p][v] > 0 && comps[p] > 1 &&
            maxlast[p][dsu[p].find(v)] < i)
          return true;
    return false;
  }

  bool rec(int i, int used) {
    if (stopped) return true;
    if (dead_component(i)) return false;
    if (i == m) {
      if (used != k) return false;
      for (int p = 0; p < k; ++p)
        if (comps[p] != 1) return false;
      if (leaf(*this)) stopped = true;
      return stopped;
    }
    // parts not yet startable cannot finish in the remaining edges
    if (k - used > m - i) return false;
    int e = order[i];
    auto [u, v] = g.edges[e];
    int pmax = std::min(used, k - 1);
    for (int p = 0; p <= pmax; ++p) {
      bool nu = incid[p][u] == 0, nv = incid[p][v] == 0;
      if (!nu && !nv && dsu[p].connected(u, v)) continue;  // cycle in a part
      size_t mk = dsu[p].mark();
      int old_comps = comps[p];
      comps[p] += (nu ? 1 : 0) + (nv ? 1 : 0);
      int ra = dsu[p].find(u), rb = dsu[p].find(v);
      int ml = std::max(maxlast[p][ra], maxlast[p][rb]);
      dsu[p].unite(u, v);
      comps[p] -= 1;
      int rn = dsu[p].find(u);
      int old_ml = maxlast[p][rn];
      maxlast[p][rn] = ml;
      incid[p][u]++;
      incid[p][v]++;
      color[i] = p;
      if (rec(i + 1, std::max(used, p + 1))) return true;
      color[i] = -1;
      incid[p][u]--;
      incid[p][v]--;
      maxlast[p][rn] = old_ml;
      dsu[p].rollback(mk);
      comps[p] = old_comps;
    }
    return false;
  }

  Cover extract() const {
    Cover parts(k);
    for (int i = 0; i < m; ++i) parts[color[i]].push_back(order[i]);
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end());
    return parts;
  }
};

int lower_bound_tau(const Graph& g) {
  if (g.m() == 0) return 0;
  DsuUndo d(g.vertex_count);
  bool cyc = false;
  for (auto [u, v] : g.edges)
    if (!d.unite(u, v)) cyc = true;
  int lb = cyc ? 2 : 1;
  if (g.vertex_count >= 2)
    lb = std::max(lb, (g.m() + g.vertex_count - 2) / (g.vertex_count - 1));
  return lb;
}

void check_budget(const Graph& g, int max_edges) {
  if (g.m() > max_edges)
    throw OracleBudget("instance exceeds the oracle edge budget (" +
                       std::to_string(g.m()) + " > " + std::to_string(max_edges) + ")");
}

}  // namespace

int bf_tree_number(const Graph& g, int max_edges) {
  check_budget(g, max_edges);
  if (g.m() == 0) return 0;
  if (!is_connected_graph(g)) throw GraphError("oracle needs a connected graph");
  for (int k = lower_bound_tau(g); k <= g.m(); ++k) {
    Search s(g, k);
    s.leaf = [](Search&) { return true; };
    if (s.rec(0, 0)) return k;
  }
  throw GraphError("unreachable: no tree cover found");
}

bool bf_exists_min_cover(const Graph& g,
                         const std::function<bool(const Cover&)>& pred,
                         int max_edges) {
  int k = bf_tree_number(g, max_edges);
  Search s(g, k);
  s.leaf = [&](Search& ss) { return pred(ss.extract()); };
  return s.rec(0, 0);
}

std::vector<Cover> bf_enumerate_min_covers(const Graph& g, int limit, int max_edges) {
  std::vector<Cover> out;
  if (g.m() == 0) return out;
  int k = bf_tree_number(g, max_edges);
  Search s(g, k);
  s.leaf = [&](Search& ss) {
    out.push_back(ss.extract());
    return (int)out.size() >= limit;
  };
  s.rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
int colors_at(const Graph& g, const Cover& c, int x) {
  int cnt = 0;
  for (const auto& part : c) {
    for (int e : part)
      if (g.edges[e].first == x || g.edges[e].second == x) {
        ++cnt;
        break;
      }
  }
  return cnt;
}
}  // namespace

bool bf_is_fit(const Graph& g, int x, int max_edges) {
  return bf_exists_min_cover(
      g, [&](const Cover& c) { return colors_at(g, c, x) >= 2; }, max_edges);
}

bool bf_proper_exists(const Graph& g, int u, int v, int max_edges) {
  if (u == v)
    return bf_exists_min_cover(
        g, [&](const Cover& c) { return colors_at(g, c, u) >= 2; }, max_edges);
  return bf_exists_min_cover(
      g,
      [&](const Cover& c) {
        // fails only when u and v are covered by one and the same single tree
        std::vector<int> pu, pv;
        for (size_t i = 0; i < c.size(); ++i) {
          bool hu = false, hv = false;
          for (int e : c[i]) {
            hu |= g.edges[e].first == u || g.edges[e].second == u;
            hv |= g.edges[e].first == v || g.edges[e].second == v;
          }
          if (hu) pu.push_back((int)i);
          if (hv) pv.push_back((int)i);
        }
        return !(pu.size() == 1 && pv.size() == 1 && pu[0] == pv[0]);
      },
      max_edges);
}

bool bf_simultaneous_fit(const Graph& g, const std::vector<int>& nodes, int max_edges) {
  return bf_exists_min_cover(
      g,
      [&](const Cover& c) {
        for (int x : nodes)
          if (colors_at(g, c, x) < 2) return false;
        return true;
      },
      max_edges);
}

int nash_williams_arboricity(const Graph& g) {
  int n = g.vertex_count;
  if (n > 20) throw OracleBudget("Nash-Williams oracle limited to 20 vertices");
  if (g.m() == 0) return 0;
  int best = 1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int sz = __builtin_popcount(mask);
    if (sz < 2) continue;
    int ms = 0;
    for (auto [u, v] : g.edges)
      if ((mask >> u & 1) && (mask >> v & 1)) ++ms;
    if (ms == 0) continue;
    best = std::max(best, (ms + sz - 2) / (sz - 1));
  }
  return best;
}

}  // namespace tc
