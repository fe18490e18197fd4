#pragma once

#include <vector>

#include "treecover/graph.hpp"

namespace tc {

struct NotOuterplanar : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OuterEmbedding {
  int block = -1;
  std::vector<int> outer_cycle;  // vertices; outer_cycle[0] is the smallest id
  std::vector<int> cycle_edges;  // cycle_edges[i] joins outer_cycle[i], outer_cycle[i+1 mod n]
  std::vector<int> chord_edges;

  int pos_of(int v) const;  // -1 when absent
};

// the block must be 2-connected with >= 3 vertices; throws NotOuterplanar
OuterEmbedding outer_cycle(const Graph& g, const std::vector<int>& block_edges);
bool is_block_outerplanar(const Graph& g, const std::vector<int>& block_edges);

struct BlockCutTree {
  int root = -1;
  std::vector<int> parent;      // per block; -1 at the root
  std::vector<int> parent_cut;  // cut vertex shared with the parent; -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> tin, tout;

  // strict ancestor order: block i lies on the path from the root to block j
  bool precedes(int i, int j) const {
    return i != j && tin[i] <= tin[j] && tout[j] <= tout[i];
  }
};

BlockCutTree build_block_cut_tree(const Graph& g, const BlockDecomposition& bd,
                                  int root_choice = -1);

struct CPath {
  int block = -1;
  std::vector<int> seq;  // u..v along the embedding direction; [u] when u == v
};

CPath c_path(const OuterEmbedding& emb, int u, int v);

// everything downstream code needs about an accepted graph
struct Ctx {
  Graph g;
  ClassReport report;
  BlockDecomposition bd;
  std::vector<OuterEmbedding> emb;  // indexed by block
  BlockCutTree bct;

  // child blocks of `block` attached at vertex v
  std::vector<int> children_at(int block, int v) const;
  // all blocks of the subtree rooted at `block`
  std::vector<int> subtree_blocks(int block) const;
  // edge ids of a whole block subtree
  std::vector<int> subtree_edges(int block) const;
  bool vertex_in_block(int block, int v) const;
};

// validates the class; throws ClassRejection when the graph is not accepted
Ctx build_ctx(const Graph& g);

}  // namespace tc
