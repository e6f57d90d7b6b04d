#include "pmk/coloring.hpp"

#include <algorithm>

namespace pmk {

namespace {

int least_free_color(const std::vector<int>& colors, const Bits128& neighbors) {
    Bits128 used;  // a color index never exceeds a vertex degree < 128
    for (int u : neighbors)
        if (colors[static_cast<size_t>(u)] >= 0) used.set(colors[static_cast<size_t>(u)]);
    int c = 0;
    while (used.test(c)) ++c;
    return c;
}

}  // namespace

Coloring greedy_degeneracy_coloring(const Graph& g) {
    Degeneracy d = g.degeneracy();
    Coloring col;
    col.colors.assign(static_cast<size_t>(g.n()), -1);
    for (auto it = d.removal_order.rbegin(); it != d.removal_order.rend(); ++it) {
        int c = least_free_color(col.colors, g.neighbors(*it));
        col.colors[static_cast<size_t>(*it)] = c;
        col.palette_size = std::max(col.palette_size, c + 1);
    }
    return col;
}

Coloring minus_one_coloring(const Graph& g, int c) {
    if (c < 2) throw precondition_error("minus_one_coloring needs c >= 2");
    const int palette = 2 * c - 1;

    // mutable adjacency over stable slots; a contraction reuses x's slot for
    // the merged vertex and retires v and y
    std::vector<Bits128> adj(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
    Bits128 alive = g.vertices();

    struct Removal {
        int v;
        Bits128 saved;
    };
    struct Contraction {
        int v, x, y;
        Bits128 saved_v, saved_x, saved_y;
    };
    struct Record {
        bool contract;
        Removal rem;
        Contraction con;
    };
    std::vector<Record> trail;

    auto detach = [&](int v) {
        for (int u : adj[static_cast<size_t>(v)]) adj[static_cast<size_t>(u)].reset(v);
        adj[static_cast<size_t>(v)] = Bits128{};
        alive.reset(v);
    };

    while (alive.any()) {
        int v = -1, best = -1;
        for (int u : alive) {
            int deg = adj[static_cast<size_t>(u)].count();
            if (v < 0 || deg < best) {
                v = u;
                best = deg;
            }
        }
        if (best <= palette - 1) {  // degree <= 2c-2
            trail.push_back(Record{false, Removal{v, adj[static_cast<size_t>(v)]}, {}});
            detach(v);
            continue;
        }
        if (best > palette) throw precondition_error("minimum degree exceeds 2c-1");

        // degree exactly 2c-1: lexicographically least non-adjacent x < y in N(v)
        int x = -1, y = -1;
        const Bits128 nv = adj[static_cast<size_t>(v)];
        for (int a : nv) {
            Bits128 later = nv - Bits128::range(a + 1);
            Bits128 candidates = later - adj[static_cast<size_t>(a)];
            if (candidates.any()) {
                x = a;
                y = candidates.first();
                break;
            }
        }
        if (x < 0) {
            Bits128 witness = nv;
            witness.set(v);
            throw clique_witness_error(witness);
        }

        Contraction con{v, x, y, adj[static_cast<size_t>(v)], adj[static_cast<size_t>(x)],
                        adj[static_cast<size_t>(y)]};
        Bits128 merged = (con.saved_v | con.saved_x | con.saved_y);
        merged.reset(v);
        merged.reset(x);
        merged.reset(y);
        detach(v);
        detach(y);
        detach(x);
        adj[static_cast<size_t>(x)] = merged;
        for (int u : merged) adj[static_cast<size_t>(u)].set(x);
        alive.set(x);
        trail.push_back(Record{true, {}, con});
    }

    Coloring col;
    col.colors.assign(static_cast<size_t>(g.n()), -1);
    col.palette_size = 0;
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        if (!it->contract) {
            int ch = least_free_color(col.colors, it->rem.saved);
            col.colors[static_cast<size_t>(it->rem.v)] = ch;
            col.palette_size = std::max(col.palette_size, ch + 1);
            continue;
        }
        const Contraction& con = it->con;
        // x carries the merged vertex's color; y copies it, then v is colored
        col.colors[static_cast<size_t>(con.y)] = col.colors[static_cast<size_t>(con.x)];
        int ch = least_free_color(col.colors, con.saved_v);
        col.colors[static_cast<size_t>(con.v)] = ch;
        col.palette_size = std::max(col.palette_size, ch + 1);
    }
    if (col.palette_size > palette) throw graph_error("palette bound violated");
    return col;
}

ForestPartition vertex_arboricity_partition(const Graph& g) {
    Degeneracy d = g.degeneracy();
    int bound = (d.value + 2) / 2;  // ceil((d+1)/2)
    ForestPartition fp;
    fp.parts.assign(static_cast<size_t>(g.n()), -1);
    for (auto it = d.removal_order.rbegin(); it != d.removal_order.rend(); ++it) {
        int v = *it;
        std::vector<int> placed_in(static_cast<size_t>(bound), 0);
        for (int u : g.neighbors(v))
            if (fp.parts[static_cast<size_t>(u)] >= 0) ++placed_in[static_cast<size_t>(fp.parts[static_cast<size_t>(u)])];
        int part = -1;
        for (int p = 0; p < bound; ++p)
            if (placed_in[static_cast<size_t>(p)] <= 1) {
                part = p;
                break;
            }
        if (part < 0) throw graph_error("forest placement bound violated");
        fp.parts[static_cast<size_t>(v)] = part;
        fp.part_count = std::max(fp.part_count, part + 1);
    }
    return fp;
}

bool verify_coloring(const Graph& g, const Coloring& col) {
    if (col.colors.size() != static_cast<size_t>(g.n())) return false;
    for (int v = 0; v < g.n(); ++v) {
        int cv = col.colors[static_cast<size_t>(v)];
        if (cv < 0 || cv >= col.palette_size) return false;
        for (int u : g.neighbors(v))
            if (col.colors[static_cast<size_t>(u)] == cv) return false;
    }
    return true;
}

bool verify_forest_partition(const Graph& g, const ForestPartition& fp) {
    if (fp.parts.size() != static_cast<size_t>(g.n())) return false;
    for (int v = 0; v < g.n(); ++v)
        if (fp.parts[static_cast<size_t>(v)] < 0 || fp.parts[static_cast<size_t>(v)] >= fp.part_count)
            return false;
    for (int p = 0; p < fp.part_count; ++p) {
        Bits128 members;
        for (int v = 0; v < g.n(); ++v)
            if (fp.parts[static_cast<size_t>(v)] == p) members.set(v);
        // a forest has exactly vertices - components edges
        Graph sub = g.induced(members, nullptr);
        if (sub.m() + static_cast<int>(sub.components().size()) != sub.n()) return false;
    }
    return true;
}

}  // namespace pmk
