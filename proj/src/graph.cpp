#include "treecover/graph.hpp"

#include <algorithm>
#include <sstream>

#include "treecover/decomposition.hpp"

namespace tc {

bool Graph::has_edge(int u, int v) const { return edge_between(u, v) >= 0; }

int Graph::edge_between(int u, int v) const {
  if (u < 0 || u >= vertex_count) return -1;
  for (auto [w, e] : adj[u])
    if (w == v) return e;
  return -1;
}

Graph make_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.vertex_count = vertex_count;
  g.adj.resize(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw GraphError("vertex id out of range");
    if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
    if (g.has_edge(u, v))
      throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    int id = (int)g.edges.size();
    g.edges.push_back({u, v});
    g.adj[u].push_back({v, id});
    g.adj[v].push_back({u, id});
  }
  return g;
}

Graph load_graph(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int maxv = -1;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    std::istringstream ls(line);
    long long u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw GraphError("parse error on line " + std::to_string(lineno));
    if (u < 0 || v < 0)
      throw GraphError("negative vertex id on line " + std::to_string(lineno));
    if (u == v)
      throw GraphError("self-loop on line " + std::to_string(lineno));
    for (auto& [a, b] : edges)
      if ((a == u && b == v) || (a == v && b == u))
        throw GraphError("duplicate edge on line " + std::to_string(lineno));
    edges.push_back({(int)u, (int)v});
    maxv = std::max(maxv, (int)std::max(u, v));
  }
  return make_graph(maxv + 1, edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

bool is_connected_graph(const Graph& g) {
  if (g.vertex_count == 0) return true;
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : g.adj[v]) {
      (void)e;
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
    }
  }
  return cnt == g.vertex_count;
}

bool BlockDecomposition::is_cut(int v) const {
  return std::find(cut_vertices.begin(), cut_vertices.end(), v) != cut_vertices.end();
}

// iterative Hopcroft-Tarjan; blocks come out as maximal 2-connected edge sets,
// bridges as single-edge blocks
BlockDecomposition biconnected_components(const Graph& g) {
  if (!is_connected_graph(g)) throw GraphError("graph is disconnected");
  BlockDecomposition bd;
  int n = g.vertex_count;
  bd.block_of_edge.assign(g.m(), -1);
  if (n == 0) return bd;

  std::vector<int> num(n, -1), low(n, 0), parent_edge(n, -1);
  std::vector<int> estack;
  std::vector<char> is_art(n, 0);
  int timer = 0;

  struct Frame {
    int v;
    size_t ai;
  };
  std::vector<Frame> fs;
  num[0] = low[0] = timer++;
  fs.push_back({0, 0});
  int root_children = 0;

  auto pop_block = [&](int until_edge) {
    std::vector<int> blk;
    while (true) {
      int e = estack.back();
      estack.pop_back();
      blk.push_back(e);
      if (e == until_edge) break;
    }
    for (int e : blk) bd.block_of_edge[e] = (int)bd.blocks.size();
    std::sort(blk.begin(), blk.end());
    bd.blocks.push_back(std::move(blk));
  };

  while (!fs.empty()) {
    Frame& f = fs.back();
    int v = f.v;
    if (f.ai < g.adj[v].size()) {
      auto [w, e] = g.adj[v][f.ai++];
      if (e == parent_edge[v]) continue;
      if (num[w] == -1) {
        estack.push_back(e);
        num[w] = low[w] = timer++;
        parent_edge[w] = e;
        if (v == 0) ++root_children;
        fs.push_back({w, 0});
      } else if (num[w] < num[v]) {
        estack.push_back(e);
        low[v] = std::min(low[v], num[w]);
      }
    } else {
      fs.pop_back();
      if (!fs.empty()) {
        int u = fs.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          if (u != 0) is_art[u] = 1;
          pop_block(parent_edge[v]);
        }
      }
    }
  }
  if (root_children >= 2) is_art[0] = 1;
  for (int v = 0; v < n; ++v)
    if (is_art[v]) bd.cut_vertices.push_back(v);
  return bd;
}

std::string ClassReport::describe() const {
  if (accepted()) return "accepted";
  std::string s;
  auto flag = [&](bool ok, const char* what) {
    if (!ok) {
      if (!s.empty()) s += "; ";
      s += what;
    }
  };
  flag(is_simple, "not simple");
  flag(is_connected, "not connected");
  flag(is_bridgeless, "has a bridge");
  flag(blocks_outerplanar, "a block is not outerplanar");
  return s;
}

ClassReport validate_class(const Graph& g) {
  ClassReport r;
  // Graph construction already rejects loops/duplicates, so is_simple stays
  // true for any Graph value; it exists for report completeness.
  if (!is_connected_graph(g)) {
    r.is_connected = false;
    r.offending_items.push_back({"disconnected", 0});
    return r;
  }
  if (g.m() == 0) return r;
  BlockDecomposition bd = biconnected_components(g);
  for (size_t b = 0; b < bd.blocks.size(); ++b) {
    if (bd.blocks[b].size() == 1) {
      r.is_bridgeless = false;
      r.offending_items.push_back({"bridge", bd.blocks[b][0]});
      continue;
    }
    if (!is_block_outerplanar(g, bd.blocks[b])) {
      r.blocks_outerplanar = false;
      r.offending_items.push_back({"non_outerplanar_block", (int)b});
    }
  }
  return r;
}

}  // namespace tc
