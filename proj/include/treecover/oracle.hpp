#pragma once

#include <functional>
#include <vector>

#include "treecover/graph.hpp"

namespace tc {

struct OracleBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact minimum number of trees partitioning the edge set
int bf_tree_number(const Graph& g, int max_edges = 16);

using Cover = std::vector<std::vector<int>>;  // parts as sorted edge-id lists

// all minimum covers, canonically ordered, capped at `limit`
std::vector<Cover> bf_enumerate_min_covers(const Graph& g, int limit,
                                           int max_edges = 16);

// runs the minimum-cover search until `pred` accepts a cover; exhaustive
bool bf_exists_min_cover(const Graph& g, const std::function<bool(const Cover&)>& pred,
                         int max_edges = 16);

// x covered by two distinct trees in some minimum cover
bool bf_is_fit(const Graph& g, int x, int max_edges = 16);

// u != v: some minimum cover puts u and v into distinct trees;
// u == v: some minimum cover covers the node twice
bool bf_proper_exists(const Graph& g, int u, int v, int max_edges = 16);

// every listed node covered twice in one minimum cover
bool bf_simultaneous_fit(const Graph& g, const std::vector<int>& nodes,
                         int max_edges = 16);

// Nash-Williams density maximum over vertex subsets; needs <= 20 vertices
int nash_williams_arboricity(const Graph& g);

}  // namespace tc
