#pragma once

#include "treecover/elements.hpp"

namespace tc {

struct InternalInvariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a vertex of the residual that can be covered twice to save a tree
struct Site {
  int vertex = -1;
  int pos = -1;               // residual spine position
  bool chord_incident = false;
  bool fit = false;
  int gain = 0;               // proper-covered children merged extra when served
  bool eligible = false;
  int group = -1;             // fitness-path group; -1 for chord-incident sites
};

struct Plan {
  bool doubling = false;
  // doubling: walk the spine forward from seg_lo to seg_hi; that segment is
  // one tree, the rest of the residual the other
  int seg_lo = -1, seg_hi = -1;
  std::vector<int> served_sites;  // site indexes (greedy) / the pair (doubling)
  std::vector<int> forced_vertices;  // extra vertices the cover must double
};

struct ElementReport {
  Element elem;
  bool simple = true;
  int tau = 2;
  long long tau_literal = 2;
  bool proper = true;
  int n = 0;
  int extra = 0;
  long long extra_literal = 0;
  int residual_tau = 2;
  int residual_chords = 0;

  std::vector<SubCand> cands;
  std::vector<ElementReport> children;
  Element residual;
  std::vector<int> site_vertex;  // per candidate
  std::vector<Site> sites;
  std::vector<int> cand_site;    // candidate -> site index
  Plan plan;
  bool has_proper_plan = false;
  Plan proper_plan;
  int chain_split_child = -1;    // candidate to split at when residual_tau == 1
};

ElementReport analyze_element(const Ctx& ctx, const Element& e);
ElementReport analyze_graph(const Ctx& ctx);
int tree_number(const Graph& g);  // throws ClassRejection

struct TreeCover {
  std::vector<std::vector<int>> parts;  // sorted edge ids
  bool proper = false;
};

TreeCover construct_cover_element(const Ctx& ctx, const ElementReport& rep,
                                  bool want_proper);
TreeCover construct_cover(const Ctx& ctx);

bool validate_cover(const Graph& g, const std::vector<int>& edge_set,
                    const TreeCover& cover);

int arboricity_class(const Graph& g);

}  // namespace tc
