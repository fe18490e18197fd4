#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tc {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// thrown when a graph fails the class check and an operation requires an
// accepted input
struct ClassRejection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;              // (u,v), u != v
  std::vector<std::vector<std::pair<int, int>>> adj;   // per vertex: (neighbor, edge id)

  int m() const { return (int)edges.size(); }
  int deg(int v) const { return (int)adj[v].size(); }
  bool has_edge(int u, int v) const;
  int edge_between(int u, int v) const;  // -1 when absent
  int other_end(int e, int v) const {
    return edges[e].first == v ? edges[e].second : edges[e].first;
  }
};

Graph make_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);
Graph load_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // edge ids per block
  std::vector<int> cut_vertices;
  std::vector<int> block_of_edge;

  bool is_cut(int v) const;
};

// requires a connected graph, throws GraphError otherwise
BlockDecomposition biconnected_components(const Graph& g);

struct ClassReport {
  bool is_simple = true;
  bool is_bridgeless = true;
  bool is_connected = true;
  bool blocks_outerplanar = true;
  std::vector<std::pair<std::string, int>> offending_items;  // (kind, id)

  bool accepted() const {
    return is_simple && is_bridgeless && is_connected && blocks_outerplanar;
  }
  std::string describe() const;
};

ClassReport validate_class(const Graph& g);

bool is_connected_graph(const Graph& g);

}  // namespace tc
