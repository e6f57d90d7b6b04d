#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pmk/graph.hpp"

namespace pmk {

// Recipe for building a cockade: a tree whose nodes are blocks, plus an
// optional explicit attachment site per added block.
struct CockadeSpec {
    int block_count = 1;
    // Edges of a tree on nodes 0..block_count-1. Empty means the path
    // 0-1-...-(block_count-1).
    std::vector<std::pair<int, int>> glue_tree;
    // One entry per added block, in build order (so block_count-1 entries),
    // or empty to use the canonical rule everywhere. An empty inner vector
    // also means canonical: attach to the lexicographically least t-clique
    // of the previously added block.
    std::vector<std::vector<int>> glue_sites;
};

// Decomposition of a graph that is a (K_9,2)-cockade after adding the listed
// edges. Vertex ids refer to the recognized graph's own labelling.
struct RecognizedCockade {
    int block_count = 0;
    std::vector<std::vector<int>> blocks;          // 9 sorted vertex ids each
    std::vector<std::pair<int, int>> glue_tree;    // edges over block indices
    std::vector<std::pair<int, int>> glue_sites;   // shared pair per tree edge
    std::vector<std::pair<int, int>> added_edges;  // completions, deduplicated
};

// The Petersen graph: outer cycle 0..4, spokes i ~ i+5, inner cycle
// 5,7,9,6,8.
Graph petersen();

// (K_9,2)-cockade with the given block layout. n = 9 + 7(k-1), m = 5n - 9.
Graph cockade(const CockadeSpec& spec);

// (H,t)-cockade: copies of h glued along t-cliques following spec. Each added
// block is attached by identifying the lex-least t-clique of h with the
// chosen site, lower ids first. Throws precondition_error if h has no
// t-clique, the tree is malformed, or an explicit site is not a t-clique
// present at glue time.
Graph generic_cockade(const Graph& h, int t, const CockadeSpec& spec);

// Decide whether g becomes a (K_9,2)-cockade spanning all of V(g) after
// adding at most missing_budget edges (0..2), and if so return the block
// structure together with a minimum set of added edges. Hosts above 40
// vertices throw capacity_error.
std::optional<RecognizedCockade> recognize_cockade_spanning(const Graph& g, int missing_budget);

// k disjoint K_5 blocks plus three vertices adjacent to everything else.
// n = 3 + 5k, m = 5n - 12. Requires k >= 1.
Graph dominant_k5_family(int k);

// Join of K_5 with an independent set: vertices 0..4 form a clique, every
// other vertex is adjacent exactly to 0..4. n >= 5, m = 5n - 15.
Graph join_k5_empty(int n);

// Icosahedron (vertices 0..11) plus a vertex 12 adjacent to all of it.
// n = 13, m = 42.
Graph apex_icosahedron();

}  // namespace pmk
