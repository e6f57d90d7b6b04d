#pragma once

#include <vector>

#include "pmk/graph.hpp"

namespace pmk {

struct Coloring {
    std::vector<int> colors;  // vertex -> color in [0, palette_size)
    int palette_size = 0;
};

struct ForestPartition {
    std::vector<int> parts;  // vertex -> part in [0, part_count)
    int part_count = 0;
};

// The dynamic requirement of minus_one_coloring failed: a minimum-degree
// vertex of degree 2c-1 whose neighbourhood is a clique, i.e. the current
// graph (a contraction minor of the input; the input itself while no
// contraction has happened) contains K_2c. `clique` holds its vertices.
struct clique_witness_error : graph_error {
    Bits128 clique;
    explicit clique_witness_error(Bits128 c)
        : graph_error("clique forcing the palette bound found"), clique(c) {}
};

// Proper coloring along the reversed degeneracy order; least free color per
// vertex. Palette never exceeds degeneracy+1.
Coloring greedy_degeneracy_coloring(const Graph& g);

// Proper coloring with at most 2c-1 colors by minimum-degree recursion:
// a vertex of degree <= 2c-2 is removed and colored on the way back; a vertex
// v of degree exactly 2c-1 has two non-adjacent neighbours x, y (else
// clique_witness_error), and v,x,y are contracted to one vertex whose color
// x and y later share, freeing a color for v. Requires every intermediate
// minimum degree <= 2c-1; a violation raises precondition_error.
Coloring minus_one_coloring(const Graph& g, int c);

// Partition into at most ceil((degeneracy+1)/2) forests: along the reversed
// degeneracy order each vertex joins the least part holding at most one of
// its already-placed neighbours, so every part keeps parent pointers only.
ForestPartition vertex_arboricity_partition(const Graph& g);

// Independent validators; no shared state with the constructions above.
bool verify_coloring(const Graph& g, const Coloring& col);
bool verify_forest_partition(const Graph& g, const ForestPartition& fp);

}  // namespace pmk
