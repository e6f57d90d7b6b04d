#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "pmk/minor.hpp"

namespace pmk {

namespace {

// biconnected components as edge lists, by the lowpoint edge-stack method
std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(const Graph& g) {
    int n = g.n();
    std::vector<int> disc(static_cast<size_t>(n), 0);
    std::vector<int> low(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = ++timer;
        bool skipped_parent = false;
        for (int v : g.neighbors(u)) {
            if (v == parent && !skipped_parent) {
                skipped_parent = true;
                continue;
            }
            if (disc[static_cast<size_t>(v)] == 0) {
                estack.push_back({u, v});
                dfs(v, u);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
                if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(u)]) {
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        block.push_back(e);
                        if (e.first == u && e.second == v) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (disc[static_cast<size_t>(v)] < disc[static_cast<size_t>(u)]) {
                estack.push_back({u, v});
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[static_cast<size_t>(v)] == 0) dfs(v, -1);
    return blocks;
}

// some cycle of a graph with minimum degree >= 2 regions, via first back edge
std::vector<int> find_cycle(const Graph& g) {
    std::vector<int> parent(static_cast<size_t>(g.n()), -2);
    std::vector<int> cycle;
    std::function<bool(int, int)> dfs = [&](int u, int from) -> bool {
        parent[static_cast<size_t>(u)] = from;
        for (int v : g.neighbors(u)) {
            if (v == from) continue;
            if (parent[static_cast<size_t>(v)] != -2) {
                // back edge u -> v closes a cycle when v is an ancestor
                std::vector<int> up;
                int w = u;
                while (w != v && w != -1) {
                    up.push_back(w);
                    w = parent[static_cast<size_t>(w)];
                }
                if (w != v) continue;
                up.push_back(v);
                cycle = up;
                return true;
            }
            if (dfs(v, u)) return true;
        }
        return false;
    };
    for (int v = 0; v < g.n(); ++v)
        if (parent[static_cast<size_t>(v)] == -2 && dfs(v, -1)) break;
    return cycle;
}

struct BridgePiece {
    Bits128 attach;
    Bits128 interior;  // empty for a chord
    int chord_u = -1;
    int chord_v = -1;
};

// path between two distinct attachments whose interior lies in the bridge
std::vector<int> bridge_path(const Graph& g, const BridgePiece& b) {
    if (b.interior.none()) return {b.chord_u, b.chord_v};
    int a = b.attach.first();
    std::vector<int> from(static_cast<size_t>(g.n()), -1);
    std::vector<int> queue;
    for (int w : g.neighbors(a) & b.interior) {
        if (from[static_cast<size_t>(w)] == -1) {
            from[static_cast<size_t>(w)] = a;
            queue.push_back(w);
        }
    }
    for (size_t i = 0; i < queue.size(); ++i) {
        int w = queue[i];
        Bits128 ends = (g.neighbors(w) & b.attach) - Bits128::single(a);
        if (ends.any()) {
            std::vector<int> path{ends.first(), w};
            for (int x = w; x != a; x = from[static_cast<size_t>(x)])
                path.push_back(from[static_cast<size_t>(x)]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (int x : g.neighbors(w) & b.interior)
            if (from[static_cast<size_t>(x)] == -1) {
                from[static_cast<size_t>(x)] = w;
                queue.push_back(x);
            }
    }
    return {};  // unreachable for bridges of a biconnected graph
}

// face embedding for a biconnected graph
bool planar_block(const Graph& g) {
    std::vector<int> start = find_cycle(g);
    Bits128 hv;
    std::vector<Bits128> hadj(static_cast<size_t>(g.n()));
    auto embed_edge = [&](int x, int y) {
        hadj[static_cast<size_t>(x)].set(y);
        hadj[static_cast<size_t>(y)].set(x);
    };
    for (size_t i = 0; i < start.size(); ++i) {
        hv.set(start[i]);
        embed_edge(start[i], start[(i + 1) % start.size()]);
    }
    std::vector<std::vector<int>> faces{start, start};
    int embedded = static_cast<int>(start.size());

    while (embedded < g.m()) {
        std::vector<BridgePiece> bridges;
        for (int u = 0; u < g.n(); ++u) {
            if (!hv.test(u)) continue;
            for (int v : g.neighbors(u) & hv)
                if (v > u && !hadj[static_cast<size_t>(u)].test(v)) {
                    BridgePiece b;
                    b.attach = Bits128::single(u) | Bits128::single(v);
                    b.chord_u = u;
                    b.chord_v = v;
                    bridges.push_back(b);
                }
        }
        for (const Bits128& comp : g.components_of(g.vertices() - hv)) {
            BridgePiece b;
            b.interior = comp;
            b.attach = g.neighbors_of_set(comp) & hv;
            bridges.push_back(b);
        }

        std::vector<Bits128> face_sets;
        face_sets.reserve(faces.size());
        for (const auto& f : faces) {
            Bits128 s;
            for (int v : f) s.set(v);
            face_sets.push_back(s);
        }
        size_t pick = bridges.size();
        size_t pick_face = 0;
        size_t best_count = static_cast<size_t>(-1);
        for (size_t i = 0; i < bridges.size(); ++i) {
            size_t count = 0;
            size_t first_face = 0;
            for (size_t f = 0; f < faces.size(); ++f)
                if (bridges[i].attach.subset_of(face_sets[f])) {
                    if (count == 0) first_face = f;
                    ++count;
                }
            if (count == 0) return false;
            if (count < best_count) {
                best_count = count;
                pick = i;
                pick_face = first_face;
            }
        }

        std::vector<int> path = bridge_path(g, bridges[pick]);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            hv.set(path[i + 1]);
            embed_edge(path[i], path[i + 1]);
        }
        embedded += static_cast<int>(path.size()) - 1;

        const std::vector<int> face = faces[pick_face];
        size_t k = face.size();
        size_t ia = 0;
        size_t ib = 0;
        for (size_t i = 0; i < k; ++i) {
            if (face[i] == path.front()) ia = i;
            if (face[i] == path.back()) ib = i;
        }
        std::vector<int> f1 = path;
        for (size_t i = (ib + 1) % k; i != ia; i = (i + 1) % k) f1.push_back(face[i]);
        std::vector<int> f2(path.rbegin(), path.rend());
        for (size_t i = (ia + 1) % k; i != ib; i = (i + 1) % k) f2.push_back(face[i]);
        faces[pick_face] = std::move(f1);
        faces.push_back(std::move(f2));
    }
    return true;
}

}  // namespace

bool is_planar(const Graph& g) {
    if (g.n() <= 4) return true;
    if (g.m() > 3 * g.n() - 6) return false;
    for (const auto& edges : biconnected_blocks(g)) {
        Bits128 verts;
        for (auto [u, v] : edges) {
            verts.set(u);
            verts.set(v);
        }
        std::vector<int> ids;
        Graph block = g.induced(verts, &ids);
        // keep only this block's edges; other block edges at shared cut
        // vertices do not belong here
        Graph b(block.n());
        std::vector<int> back(static_cast<size_t>(g.n()), -1);
        for (size_t i = 0; i < ids.size(); ++i) back[static_cast<size_t>(ids[i])] = static_cast<int>(i);
        for (auto [u, v] : edges)
            b.add_edge(back[static_cast<size_t>(u)], back[static_cast<size_t>(v)]);
        // cyclomatic number <= 3 never embeds a Kuratowski subdivision
        if (b.m() <= b.n() + 2) continue;
        if (b.m() > 3 * b.n() - 6) return false;
        if (!planar_block(b)) return false;
    }
    return true;
}

}  // namespace pmk
