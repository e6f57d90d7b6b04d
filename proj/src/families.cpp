#include "pmk/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace pmk {

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// first t-subset of verts (ascending) inducing a clique, in lex order
std::optional<std::vector<int>> lex_least_clique(const Graph& g, const std::vector<int>& verts, int t) {
    std::vector<int> pick;
    std::function<bool(size_t)> go = [&](size_t from) -> bool {
        if (static_cast<int>(pick.size()) == t) return true;
        for (size_t i = from; i < verts.size(); ++i) {
            int v = verts[i];
            bool ok = true;
            for (int u : pick)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(v);
            if (go(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return pick;
}

// validates the glue tree and returns its nodes in BFS order from node 0
std::vector<int> block_build_order(int k, const std::vector<std::pair<int, int>>& tree) {
    if (static_cast<int>(tree.size()) != k - 1)
        throw precondition_error("glue tree must have block_count - 1 edges");
    std::vector<int> root(static_cast<size_t>(k));
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (root[static_cast<size_t>(x)] != x)
            x = root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
        return x;
    };
    std::vector<std::vector<int>> adj(static_cast<size_t>(k));
    for (auto [a, b] : tree) {
        if (a < 0 || a >= k || b < 0 || b >= k || a == b)
            throw precondition_error("glue tree edge out of range");
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) throw precondition_error("glue tree has a cycle");
        root[static_cast<size_t>(ra)] = rb;
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    std::vector<int> order{0};
    std::vector<char> seen(static_cast<size_t>(k), 0);
    seen[0] = 1;
    for (size_t i = 0; i < order.size(); ++i)
        for (int y : adj[static_cast<size_t>(order[i])])
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                order.push_back(y);
            }
    if (static_cast<int>(order.size()) != k) throw precondition_error("glue tree is not connected");
    return order;
}

int edges_within(const Graph& g, const Bits128& s) {
    int doubled = 0;
    for (int v : s) doubled += (g.neighbors(v) & s).count();
    return doubled / 2;
}

// one cockade decomposition of (a completion of) an induced vertex set
struct Completion {
    std::vector<std::vector<int>> blocks;
    std::vector<std::pair<int, int>> tree;
    std::vector<std::pair<int, int>> sites;
    std::vector<std::pair<int, int>> added;
};

struct CockadeRecognizer {
    const Graph& g;
    int budget;
    // required pairs are always currently-missing edges, kept sorted
    using Req = std::vector<std::pair<int, int>>;
    std::map<std::pair<Bits128, Req>, std::optional<Completion>> memo;

    std::optional<Completion> solve(const Bits128& s, Req req) {
        auto key = std::make_pair(s, req);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto result = compute(s, std::move(req));
        memo.emplace(std::move(key), result);
        return result;
    }

    static int block_with(const std::vector<std::vector<int>>& blocks, int u, int v) {
        for (size_t i = 0; i < blocks.size(); ++i)
            if (std::binary_search(blocks[i].begin(), blocks[i].end(), u) &&
                std::binary_search(blocks[i].begin(), blocks[i].end(), v))
                return static_cast<int>(i);
        throw graph_error("internal: glue pair shared by no block");
    }

    std::optional<Completion> compute(const Bits128& s, Req req) {
        int k = s.count();
        std::vector<int> verts;
        for (int v : s) verts.push_back(v);
        if (k == 9) {
            Completion base;
            for (size_t i = 0; i < verts.size(); ++i)
                for (size_t j = i + 1; j < verts.size(); ++j)
                    if (!g.has_edge(verts[i], verts[j])) base.added.push_back({verts[i], verts[j]});
            if (static_cast<int>(base.added.size()) > budget) return std::nullopt;
            base.blocks.push_back(verts);
            return base;
        }
        if (k < 9 || k % 7 != 2) return std::nullopt;
        int defect = 5 * k - 9 - edges_within(g, s);
        if (defect < 0 || defect > budget) return std::nullopt;
        if (static_cast<int>(req.size()) > defect) return std::nullopt;

        for (size_t ui = 0; ui < verts.size(); ++ui)
            for (size_t vi = ui + 1; vi < verts.size(); ++vi) {
                int u = verts[ui];
                int v = verts[vi];
                Bits128 rest = s;
                rest.reset(u);
                rest.reset(v);
                auto comps = g.components_of(rest);
                int c = static_cast<int>(comps.size());
                if (c < 2) continue;
                // a repairable input splits into at most blocks + budget
                // pieces at any cut pair, far below this guard
                if (c > 12) continue;
                for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << (c - 1)); ++mask) {
                    Bits128 a = comps[0] | Bits128::single(u) | Bits128::single(v);
                    for (int i = 0; i + 1 < c; ++i)
                        if (mask >> i & 1) a |= comps[static_cast<size_t>(i + 1)];
                    if (a.count() % 7 != 2) continue;
                    Bits128 b = (s - a) | Bits128::single(u) | Bits128::single(v);
                    Req ra;
                    Req rb;
                    bool routable = true;
                    for (const auto& r : req) {
                        if (r.first == u && r.second == v) continue;
                        if (a.test(r.first) && a.test(r.second))
                            ra.push_back(r);
                        else if (b.test(r.first) && b.test(r.second))
                            rb.push_back(r);
                        else {
                            routable = false;
                            break;
                        }
                    }
                    if (!routable) continue;
                    if (!g.has_edge(u, v)) {
                        ra.push_back({u, v});
                        rb.push_back({u, v});
                    }
                    std::sort(ra.begin(), ra.end());
                    std::sort(rb.begin(), rb.end());
                    auto ca = solve(a, std::move(ra));
                    if (!ca) continue;
                    auto cb = solve(b, std::move(rb));
                    if (!cb) continue;

                    Completion out;
                    out.blocks = ca->blocks;
                    out.blocks.insert(out.blocks.end(), cb->blocks.begin(), cb->blocks.end());
                    int off = static_cast<int>(ca->blocks.size());
                    out.tree = ca->tree;
                    for (auto [x, y] : cb->tree) out.tree.push_back({x + off, y + off});
                    out.sites = ca->sites;
                    out.sites.insert(out.sites.end(), cb->sites.begin(), cb->sites.end());
                    out.tree.push_back({block_with(ca->blocks, u, v), off + block_with(cb->blocks, u, v)});
                    out.sites.push_back({u, v});
                    std::set<std::pair<int, int>> pool(ca->added.begin(), ca->added.end());
                    pool.insert(cb->added.begin(), cb->added.end());
                    if (!g.has_edge(u, v)) pool.insert({u, v});
                    out.added.assign(pool.begin(), pool.end());
                    if (static_cast<int>(out.added.size()) > budget) continue;
                    return out;
                }
            }
        return std::nullopt;
    }
};

}  // namespace

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
    }
    g.add_edge(5, 7);
    g.add_edge(7, 9);
    g.add_edge(9, 6);
    g.add_edge(6, 8);
    g.add_edge(8, 5);
    return g;
}

Graph generic_cockade(const Graph& h, int t, const CockadeSpec& spec) {
    if (t < 1 || t > h.n()) throw precondition_error("glue clique order out of range");
    if (spec.block_count < 1) throw precondition_error("block_count must be positive");
    std::vector<int> hverts(static_cast<size_t>(h.n()));
    std::iota(hverts.begin(), hverts.end(), 0);
    auto hsite = lex_least_clique(h, hverts, t);
    if (!hsite) throw precondition_error("block graph has no t-clique glue site");
    std::vector<int> hrest;
    for (int v = 0; v < h.n(); ++v)
        if (!std::binary_search(hsite->begin(), hsite->end(), v)) hrest.push_back(v);

    std::vector<std::pair<int, int>> tree = spec.glue_tree;
    if (tree.empty())
        for (int i = 0; i + 1 < spec.block_count; ++i) tree.push_back({i, i + 1});
    std::vector<int> order = block_build_order(spec.block_count, tree);
    if (!spec.glue_sites.empty() &&
        static_cast<int>(spec.glue_sites.size()) != spec.block_count - 1)
        throw precondition_error("glue_sites must have one entry per added block");

    int s = h.n();
    long total = static_cast<long>(s) + static_cast<long>(spec.block_count - 1) * (s - t);
    if (total > Graph::kMaxVertices) throw capacity_error("cockade exceeds vertex capacity");
    Graph g(static_cast<int>(total));
    for (int u = 0; u < s; ++u)
        for (int v : h.neighbors(u))
            if (v > u) g.add_edge(u, v);
    std::vector<std::vector<int>> blocks{hverts};
    int cur_n = s;

    for (size_t j = 1; j < order.size(); ++j) {
        std::vector<int> site;
        if (spec.glue_sites.empty() || spec.glue_sites[j - 1].empty()) {
            site = *lex_least_clique(g, blocks.back(), t);
        } else {
            site = spec.glue_sites[j - 1];
            std::sort(site.begin(), site.end());
            if (static_cast<int>(site.size()) != t)
                throw precondition_error("glue site must list exactly t vertices");
            for (size_t a = 0; a < site.size(); ++a) {
                if (site[a] < 0 || site[a] >= cur_n)
                    throw precondition_error("glue site vertex not present at glue time");
                if (a > 0 && site[a] == site[a - 1])
                    throw precondition_error("glue site vertices must be distinct");
                for (size_t b = 0; b < a; ++b)
                    if (!g.has_edge(site[b], site[a]))
                        throw precondition_error("glue site is not a clique at glue time");
            }
        }
        std::vector<int> to_g(static_cast<size_t>(s), -1);
        for (int i = 0; i < t; ++i) to_g[static_cast<size_t>((*hsite)[static_cast<size_t>(i)])] = site[static_cast<size_t>(i)];
        std::vector<int> bverts = site;
        for (size_t i = 0; i < hrest.size(); ++i) {
            to_g[static_cast<size_t>(hrest[i])] = cur_n + static_cast<int>(i);
            bverts.push_back(cur_n + static_cast<int>(i));
        }
        for (int u = 0; u < s; ++u)
            for (int v : h.neighbors(u))
                if (v > u && !g.has_edge(to_g[static_cast<size_t>(u)], to_g[static_cast<size_t>(v)]))
                    g.add_edge(to_g[static_cast<size_t>(u)], to_g[static_cast<size_t>(v)]);
        cur_n += s - t;
        std::sort(bverts.begin(), bverts.end());
        blocks.push_back(std::move(bverts));
    }
    return g;
}

Graph cockade(const CockadeSpec& spec) { return generic_cockade(complete(9), 2, spec); }

std::optional<RecognizedCockade> recognize_cockade_spanning(const Graph& g, int missing_budget) {
    if (missing_budget < 0 || missing_budget > 2)
        throw precondition_error("missing edge budget must be between 0 and 2");
    if (g.n() > 40) throw capacity_error("recognizer supports at most 40 vertices");
    int n = g.n();
    if (n < 9 || n % 7 != 2) return std::nullopt;
    int defect = 5 * n - 9 - g.m();
    if (defect < 0 || defect > missing_budget) return std::nullopt;
    CockadeRecognizer rec{g, missing_budget, {}};
    auto full = rec.solve(g.vertices(), {});
    if (!full) return std::nullopt;
    if (static_cast<int>(full->added.size()) != defect)
        throw graph_error("internal: defect accounting mismatch");
    RecognizedCockade out;
    out.block_count = static_cast<int>(full->blocks.size());
    out.blocks = std::move(full->blocks);
    out.glue_tree = std::move(full->tree);
    out.glue_sites = std::move(full->sites);
    out.added_edges = std::move(full->added);
    return out;
}

Graph dominant_k5_family(int k) {
    if (k < 1) throw precondition_error("at least one clique block is required");
    long total = 3 + 5L * k;
    if (total > Graph::kMaxVertices) throw capacity_error("family exceeds vertex capacity");
    int n = static_cast<int>(total);
    Graph g(n);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    for (int b = 0; b < k; ++b)
        for (int i = 3 + 5 * b; i < 8 + 5 * b; ++i)
            for (int j = i + 1; j < 8 + 5 * b; ++j) g.add_edge(i, j);
    return g;
}

Graph join_k5_empty(int n) {
    if (n < 5) throw precondition_error("needs at least the clique itself");
    Graph g(n);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) g.add_edge(i, j);
    for (int v = 5; v < n; ++v)
        for (int i = 0; i < 5; ++i) g.add_edge(i, v);
    return g;
}

Graph apex_icosahedron() {
    Graph g(13);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(1 + i, 1 + (i + 1) % 5);
        g.add_edge(6 + i, 6 + (i + 1) % 5);
        g.add_edge(1 + i, 6 + i);
        g.add_edge(1 + i, 6 + (i + 1) % 5);
        g.add_edge(11, 6 + i);
    }
    for (int v = 0; v < 12; ++v) g.add_edge(v, 12);
    return g;
}

}  // namespace pmk
