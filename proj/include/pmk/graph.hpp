#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pmk/bits.hpp"

namespace pmk {

struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Vertex count above the fixed 128 capacity, or instance too large for an op.
struct capacity_error : graph_error {
    using graph_error::graph_error;
};
// A documented requirement of an operation does not hold for the input.
struct precondition_error : graph_error {
    using graph_error::graph_error;
};

struct Degeneracy {
    int value = 0;
    // Order in which vertices were removed (min degree first, ties by index).
    std::vector<int> removal_order;
};

// Simple undirected graph on at most 128 vertices, adjacency as bitsets.
// Vertices are 0..n-1; no loops, no parallel edges.
class Graph {
  public:
    static constexpr int kMaxVertices = 128;

    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int m() const;
    Bits128 vertices() const { return Bits128::range(n_); }
    const Bits128& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    bool has_edge(int u, int v) const;

    void add_edge(int u, int v);     // error if present
    void delete_edge(int u, int v);  // error if absent

    // Neighbourhood of a set, excluding the set itself.
    Bits128 neighbors_of_set(const Bits128& s) const;

    // Number of common neighbours of an edge's endpoints; error on a non-edge.
    int triangles_per_edge(int u, int v) const;

    // Contract edge vw: remove v and w, append the merged vertex as the new
    // last index. A surviving old index u maps to u - (u>v) - (u>w).
    // The merged vertex inherits the union of both neighbourhoods.
    Graph contract_edge(int v, int w) const;

    // Induced subgraph on s, vertices renumbered in increasing old order.
    // If old_of_new is given it receives the old index for each new index.
    Graph induced(const Bits128& s, std::vector<int>* old_of_new = nullptr) const;
    Graph delete_vertices(const Bits128& s) const;
    Graph complement() const;

    // Connected components in increasing order of their lowest vertex.
    std::vector<Bits128> components() const;
    // Components of the subgraph induced on `within`.
    std::vector<Bits128> components_of(const Bits128& within) const;
    bool connected_within(const Bits128& within) const;

    // True iff n >= k+1 and no vertex cut of size < k exists (max-flow based).
    bool is_k_connected(int k) const;
    // Reference implementation enumerating candidate cuts; small n and k only.
    bool is_k_connected_cut_enum(int k) const;
    // Minimum vertex cut separating non-adjacent u and v.
    Bits128 min_vertex_cut(int u, int v) const;

    // Repeated minimum-degree removal, ties broken by lowest index.
    Degeneracy degeneracy() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<Bits128> adj_;
};

// A separation (A,B) of a graph: A and B cover all vertices, both private
// sides are non-empty, and every edge lies inside A or inside B.
struct Separation {
    Bits128 a, b;
    int order() const { return (a & b).count(); }
    // Throws precondition_error naming the violated clause.
    void check(const Graph& g) const;
};

// graph6 encoding, one graph per line. Round-trips bit-exactly for n <= 128.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

}  // namespace pmk
