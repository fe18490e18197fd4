#pragma once

#include <vector>

#include "treecover/decomposition.hpp"

namespace tc {

struct Chord {
  int edge;  // edge id
  int a, b;  // spine positions, a < b; the span covers spine edges a..b-1
};

// Normal form for the subgraphs the recursion works on: a spine (an arc of a
// block's outer cycle, or the whole cycle cut at an anchor), the chords above
// it, and the block subtrees hanging from spine vertices.
struct Element {
  int block = -1;
  bool closed = false;           // spine is the full outer cycle; spine[0] is the anchor
  std::vector<int> spine;        // closed: k vertices; open: k+1 vertices
  std::vector<int> spine_edges;  // closed: k edge ids (last one wraps); open: k ids
  std::vector<Chord> chords;
  std::vector<std::pair<int, std::vector<int>>> bundles;  // (pos, child blocks)
  int first_synthetic = -1;      // vertex ids >= this are contraction nodes

  int k_edges() const { return (int)spine_edges.size(); }
  int n_spine() const { return (int)spine.size(); }
  bool is_synthetic(int vid) const {
    return first_synthetic >= 0 && vid >= first_synthetic;
  }
  int pos_of_vertex(int v) const;
  bool chord_at(int pos) const;
  bool bundle_at(int pos) const;
  std::pair<int, int> spine_edge_ends_pos(int i) const;  // positions of edge i's ends
  // end nodes: anchor for closed elements, the two spine ends otherwise
  int end_u_pos() const { return 0; }
  int end_v_pos() const { return closed ? 0 : n_spine() - 1; }
};

Element graph_as_element(const Ctx& ctx);
Element make_element(const Ctx& ctx, int block, int u, int v);
Element closed_block_element(const Ctx& ctx, int block, int anchor);
std::vector<int> element_edges(const Ctx& ctx, const Element& e);  // sorted

struct SubCand {
  bool is_run = false;
  int pos = -1;          // bundle: spine position
  int child_block = -1;  // bundle: the child block
  int lo = -1, hi = -1;  // run: position interval
  std::vector<int> chord_idx;  // run: indexes into parent chords
};

std::vector<SubCand> direct_subcands(const Ctx& ctx, const Element& e);
Element child_element(const Ctx& ctx, const Element& e, const SubCand& c);
std::vector<Element> direct_subelements(const Ctx& ctx, const Element& e);
bool element_is_simple(const Ctx& ctx, const Element& e);

struct ContractResult {
  Element residual;
  std::vector<int> site_vertex;  // per candidate: the residual vertex carrying it
};

ContractResult contract(const Ctx& ctx, const Element& e,
                        const std::vector<SubCand>& cands);

int chord_level(const Element& e, int chord_edge);
std::vector<int> indifferent_set(const Element& e, int chord_edge);

struct FitnessPath {
  bool closed = false;
  int lo = -1, hi = -1;  // boundary positions (the path's end vertices)
  std::vector<int> seq;  // vertices from lo to hi
};

FitnessPath fitness_path(const Element& e, int pos);
bool is_fit(const Element& e, int pos);
bool is_fit_vertex(const Element& e, int vertex);

}  // namespace tc
