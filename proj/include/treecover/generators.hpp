#pragma once

#include <cstdint>
#include <vector>

#include "treecover/graph.hpp"

namespace tc {

Graph gen_cycle(int n);
Graph gen_diamond();
// (n+2)-cycle with chords (0,2)..(0,n); fan(1) is the diamond
Graph gen_fan(int n);
// core cycle of 2n vertices with a triangle glued at every second core vertex;
// n = 1 degenerates to a triangle with one petal
Graph gen_necklace(int n);
Graph gen_gap_family(int n);
Graph gen_random_cut_outerplanar(std::uint64_t seed, int block_count,
                                 int max_block_size);

// deterministic parameter-enumerated instances with at most max_edges edges,
// deduplicated on the labeled edge list
std::vector<Graph> corpus_small(int max_edges);

}  // namespace tc
