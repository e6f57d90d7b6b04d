#include "pmk/graph.hpp"

#include <algorithm>

namespace pmk {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw capacity_error("vertex count " + std::to_string(n) + " outside 0..128");
    n_ = n;
    adj_.assign(n, Bits128{});
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw precondition_error("vertex " + std::to_string(v) + " out of range");
}

int Graph::m() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += adj_[v].count();
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw precondition_error("loop edge rejected");
    if (adj_[u].test(v)) throw precondition_error("edge already present");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::delete_edge(int u, int v) {
    if (!has_edge(u, v)) throw precondition_error("edge not present");
    adj_[u].reset(v);
    adj_[v].reset(u);
}

Bits128 Graph::neighbors_of_set(const Bits128& s) const {
    Bits128 out;
    for (int v = s.first(); v >= 0; v = s.next(v)) out |= adj_[v];
    return out - s;
}

int Graph::triangles_per_edge(int u, int v) const {
    if (!has_edge(u, v)) throw precondition_error("triangles_per_edge needs an edge");
    return (adj_[u] & adj_[v]).count();
}

Graph Graph::contract_edge(int v, int w) const {
    if (!has_edge(v, w)) throw precondition_error("contract_edge needs an edge");
    Graph out(n_ - 1);
    auto remap = [&](int u) { return u - (u > v) - (u > w); };
    for (int a = 0; a < n_; ++a) {
        if (a == v || a == w) continue;
        for (int b = adj_[a].next(a); b >= 0; b = adj_[a].next(b)) {
            if (b == v || b == w) continue;
            out.add_edge(remap(a), remap(b));
        }
    }
    Bits128 merged = (adj_[v] | adj_[w]);
    merged.reset(v);
    merged.reset(w);
    for (int u = merged.first(); u >= 0; u = merged.next(u)) out.add_edge(remap(u), n_ - 2);
    return out;
}

Graph Graph::induced(const Bits128& s, std::vector<int>* old_of_new) const {
    std::vector<int> ids;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        check_vertex(v);
        ids.push_back(v);
    }
    Graph out(static_cast<int>(ids.size()));
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (adj_[ids[i]].test(ids[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (old_of_new) *old_of_new = std::move(ids);
    return out;
}

Graph Graph::delete_vertices(const Bits128& s) const { return induced(vertices() - s); }

Graph Graph::complement() const {
    Graph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].test(v)) out.add_edge(u, v);
    return out;
}

std::vector<Bits128> Graph::components_of(const Bits128& within) const {
    std::vector<Bits128> out;
    Bits128 left = within & vertices();
    while (left.any()) {
        int start = left.first();
        Bits128 comp = Bits128::single(start);
        Bits128 frontier = comp;
        while (frontier.any()) {
            Bits128 next;
            for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= adj_[v];
            next &= left;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

std::vector<Bits128> Graph::components() const { return components_of(vertices()); }

bool Graph::connected_within(const Bits128& within) const {
    Bits128 w = within & vertices();
    if (w.none()) return false;
    return components_of(w).size() == 1;
}

namespace {

// Unit-capacity vertex-split max flow between non-adjacent s and t.
// Nodes 2v = v_in, 2v+1 = v_out; source s_out, sink t_in. Split arcs carry
// capacity one, arcs along graph edges are uncapacitated.
struct VertexFlow {
    const Graph& g;
    int n, s, t;
    std::vector<char> through;     // split arc v_in->v_out saturated
    std::vector<signed char> f;    // f[a*n+b]: arc a_out->b_in carries flow

    VertexFlow(const Graph& gr, int s_, int t_)
        : g(gr), n(gr.n()), s(s_), t(t_), through(n, 0), f(static_cast<size_t>(n) * n, 0) {}

    bool augment() {
        int src = 2 * s + 1, dst = 2 * t;
        std::vector<int> parent(2 * n, -1);
        std::vector<int> queue{src};
        parent[src] = src;
        for (size_t qi = 0; qi < queue.size() && parent[dst] < 0; ++qi) {
            int node = queue[qi];
            int v = node >> 1;
            auto push = [&](int x, int from) {
                if (parent[x] < 0) {
                    parent[x] = from;
                    queue.push_back(x);
                }
            };
            const Bits128& nb = g.neighbors(v);
            if (node & 1) {  // v_out
                for (int u = nb.first(); u >= 0; u = nb.next(u)) push(2 * u, node);
                if (through[v]) push(2 * v, node);  // undo split flow
            } else {  // v_in
                if (v != s && v != t && !through[v]) push(2 * v + 1, node);
                for (int u = nb.first(); u >= 0; u = nb.next(u))
                    if (f[static_cast<size_t>(u) * n + v] > 0) push(2 * u + 1, node);
            }
        }
        if (parent[dst] < 0) return false;
        for (int node = dst; node != src;) {
            int prev = parent[node];
            if ((prev >> 1) == (node >> 1)) {
                through[node >> 1] = (node & 1) ? 1 : 0;
            } else if ((prev & 1) && !(node & 1)) {
                f[static_cast<size_t>(prev >> 1) * n + (node >> 1)] = 1;
            } else {
                f[static_cast<size_t>(node >> 1) * n + (prev >> 1)] = 0;
            }
            node = prev;
        }
        return true;
    }

    int run(int limit, Bits128* cut) {
        int flow = 0;
        while ((limit < 0 || flow < limit) && augment()) ++flow;
        if (cut) {
            std::vector<char> seen(2 * n, 0);
            std::vector<int> queue{2 * s + 1};
            seen[2 * s + 1] = 1;
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int node = queue[qi];
                int v = node >> 1;
                auto push = [&](int x) {
                    if (!seen[x]) {
                        seen[x] = 1;
                        queue.push_back(x);
                    }
                };
                const Bits128& nb = g.neighbors(v);
                if (node & 1) {
                    for (int u = nb.first(); u >= 0; u = nb.next(u)) push(2 * u);
                    if (through[v]) push(2 * v);
                } else {
                    if (v != s && v != t && !through[v]) push(2 * v + 1);
                    for (int u = nb.first(); u >= 0; u = nb.next(u))
                        if (f[static_cast<size_t>(u) * n + v] > 0) push(2 * u + 1);
                }
            }
            Bits128 c;
            for (int v = 0; v < n; ++v)
                if (v != s && v != t && seen[2 * v] && !seen[2 * v + 1]) c.set(v);
            *cut = c;
        }
        return flow;
    }
};

}  // namespace

bool Graph::is_k_connected(int k) const {
    if (k < 0) throw precondition_error("is_k_connected needs k >= 0");
    if (n_ < k + 1) return false;
    if (k == 0) return true;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].test(v)) {
                VertexFlow vf(*this, u, v);
                if (vf.run(k, nullptr) < k) return false;
            }
    return true;
}

bool Graph::is_k_connected_cut_enum(int k) const {
    if (k < 0) throw precondition_error("is_k_connected_cut_enum needs k >= 0");
    if (n_ > 24) throw capacity_error("cut enumeration limited to 24 vertices");
    if (n_ < k + 1) return false;
    if (k == 0) return true;
    auto disconnected = [&](const Bits128& cut) {
        return components_of(vertices() - cut).size() != 1;
    };
    if (disconnected(Bits128{})) return false;
    std::vector<Bits128> frontier{Bits128{}};
    for (int size = 1; size < k; ++size) {
        std::vector<Bits128> next;
        for (const Bits128& base : frontier) {
            int hi = -1;
            for (int v = base.first(); v >= 0; v = base.next(v)) hi = v;
            for (int v = hi + 1; v < n_; ++v) {
                Bits128 c = base;
                c.set(v);
                if (disconnected(c)) return false;
                next.push_back(c);
            }
        }
        frontier = std::move(next);
    }
    return true;
}

Bits128 Graph::min_vertex_cut(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v || has_edge(u, v))
        throw precondition_error("min_vertex_cut needs a distinct non-adjacent pair");
    VertexFlow vf(*this, u, v);
    Bits128 cut;
    vf.run(-1, &cut);
    return cut;
}

Degeneracy Graph::degeneracy() const {
    Degeneracy out;
    std::vector<Bits128> adj = adj_;
    Bits128 alive = vertices();
    while (alive.any()) {
        int best = -1, best_deg = kMaxVertices + 1;
        for (int v = alive.first(); v >= 0; v = alive.next(v)) {
            int d = (adj[v] & alive).count();
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        out.value = std::max(out.value, best_deg);
        out.removal_order.push_back(best);
        alive.reset(best);
    }
    return out;
}

void Separation::check(const Graph& g) const {
    Bits128 all = g.vertices();
    if ((a | b) != all) throw precondition_error("separation: A and B must cover the graph");
    if ((a - b).none()) throw precondition_error("separation: A\\B is empty");
    if ((b - a).none()) throw precondition_error("separation: B\\A is empty");
    Bits128 priv_a = a - b, priv_b = b - a;
    for (int v = priv_a.first(); v >= 0; v = priv_a.next(v))
        if (g.neighbors(v).intersects(priv_b))
            throw precondition_error("separation: edge crosses between private sides");
}

std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int bit = 0, acc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit) out.push_back(static_cast<char>(63 + (acc << (6 - bit))));
    return out;
}

Graph from_graph6(const std::string& line) {
    if (line.empty()) throw precondition_error("graph6: empty line");
    for (char c : line)
        if (c < 63 || c > 126) throw precondition_error("graph6: byte out of range");
    size_t pos = 0;
    long n;
    if (line[0] == 126) {
        if (line.size() >= 2 && line[1] == 126) throw capacity_error("graph6: n too large");
        if (line.size() < 4) throw precondition_error("graph6: truncated header");
        n = (static_cast<long>(line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
        pos = 4;
    } else {
        n = line[0] - 63;
        pos = 1;
    }
    if (n > Graph::kMaxVertices) throw capacity_error("graph6: vertex count above 128");
    long bits = n * (n - 1) / 2;
    size_t want = pos + static_cast<size_t>((bits + 5) / 6);
    if (line.size() != want) throw precondition_error("graph6: wrong length");
    Graph g(static_cast<int>(n));
    long at = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++at)
            if ((line[pos + at / 6] - 63) >> (5 - at % 6) & 1) g.add_edge(row, col);
    if (bits % 6) {
        int pad = static_cast<int>(line.back() - 63) & ((1 << (6 - bits % 6)) - 1);
        if (pad) throw precondition_error("graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace pmk
