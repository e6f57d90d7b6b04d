#include "pmk/minor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "pmk/iso.hpp"

namespace pmk {

namespace {

std::vector<int> vertices_by_degree(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) order[static_cast<size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&g](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

// ---------------------------------------------------------------------------
// Subgraph embedding
// ---------------------------------------------------------------------------

struct SubgraphSearch {
    const Graph& host;
    const Graph& pat;
    std::vector<int> order;      // pattern vertices, most-constrained first
    std::vector<int> image;      // pattern vertex -> host vertex or -1
    Bits128 used;

    SubgraphSearch(const Graph& h, const Graph& p) : host(h), pat(p) {
        image.assign(static_cast<size_t>(p.n()), -1);
        build_order();
    }

    void build_order() {
        int pn = pat.n();
        std::vector<char> placed(static_cast<size_t>(pn), 0);
        std::vector<int> prio = vertices_by_degree(pat);
        for (int step = 0; step < pn; ++step) {
            int best = -1, best_anchors = -1;
            for (int v : prio) {
                if (placed[static_cast<size_t>(v)]) continue;
                int anchors = 0;
                for (int u : pat.neighbors(v))
                    if (placed[static_cast<size_t>(u)]) ++anchors;
                if (anchors > best_anchors) {
                    best = v;
                    best_anchors = anchors;
                }
            }
            placed[static_cast<size_t>(best)] = 1;
            order.push_back(best);
        }
    }

    bool extend(size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        Bits128 cand = host.vertices();
        for (int u : pat.neighbors(v)) {
            int iu = image[static_cast<size_t>(u)];
            if (iu >= 0) cand &= host.neighbors(iu);
        }
        cand -= used;
        for (int w = cand.first(); w >= 0; w = cand.next(w)) {
            if (host.degree(w) < pat.degree(v)) continue;
            image[static_cast<size_t>(v)] = w;
            used.set(w);
            if (extend(pos + 1)) return true;
            used.reset(w);
            image[static_cast<size_t>(v)] = -1;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// Minor search: grow branch sets one pattern edge at a time. Pattern edges
// are processed in a per-component breadth-first order, so except for the
// first edge of a component the earlier endpoint already has a set. A new
// edge is realised by a simple chain of free host vertices attached between
// the two sets; enumerating every chain together with every split of it
// between the two endpoint sets covers every minimal model.
// ---------------------------------------------------------------------------

struct MinorSearch {
    const Graph& host;
    const Graph& pat;
    uint64_t budget;
    uint64_t& nodes;

    std::vector<std::pair<int, int>> edges;  // processing order, first started
    std::vector<int> lonely;                 // isolated pattern vertices
    std::vector<int> host_order;             // host vertices, high degree first
    std::vector<Bits128> sets;
    Bits128 free_;

    MinorSearch(const Graph& h, const Graph& p, uint64_t budget_limit, uint64_t& node_counter)
        : host(h), pat(p), budget(budget_limit), nodes(node_counter) {
        sets.assign(static_cast<size_t>(p.n()), Bits128{});
        free_ = h.vertices();
        host_order = vertices_by_degree(h);
        plan_edges();
    }

    void plan_edges() {
        std::vector<int> prio = vertices_by_degree(pat);
        std::vector<char> seen(static_cast<size_t>(pat.n()), 0);
        for (int root : prio) {
            if (pat.degree(root) == 0) {
                lonely.push_back(root);
                continue;
            }
            if (seen[static_cast<size_t>(root)]) continue;
            std::vector<int> bfs{root};
            seen[static_cast<size_t>(root)] = 1;
            for (size_t head = 0; head < bfs.size(); ++head) {
                for (int w : prio) {
                    if (seen[static_cast<size_t>(w)] || !pat.has_edge(bfs[head], w)) continue;
                    seen[static_cast<size_t>(w)] = 1;
                    bfs.push_back(w);
                }
            }
            for (size_t i = 1; i < bfs.size(); ++i)
                for (size_t j = 0; j < i; ++j)
                    if (pat.has_edge(bfs[j], bfs[i])) edges.emplace_back(bfs[j], bfs[i]);
        }
    }

    void tick() {
        if (++nodes > budget) throw budget_error(nodes);
    }

    Bits128 set_neighborhood(int pv) const { return host.neighbors_of_set(sets[static_cast<size_t>(pv)]); }

    bool feasible(size_t ei) const {
        int unstarted = 0;
        for (const Bits128& s : sets)
            if (s.none()) ++unstarted;
        if (free_.count() < unstarted) return false;

        for (size_t k = ei; k < edges.size(); ++k) {
            auto [a, b] = edges[k];
            bool sa = sets[static_cast<size_t>(a)].any();
            bool sb = sets[static_cast<size_t>(b)].any();
            if (!sa && !sb) continue;
            if (sa && sb) {
                if (set_neighborhood(a).intersects(sets[static_cast<size_t>(b)])) continue;
                // both sets live: a chain through free vertices must link them
                Bits128 frontier = set_neighborhood(a) & free_;
                Bits128 region = frontier;
                Bits128 target = set_neighborhood(b) & free_;
                if (!frontier.intersects(target)) {
                    bool linked = false;
                    while (frontier.any()) {
                        Bits128 grow = (host.neighbors_of_set(frontier) & free_) - region;
                        if (grow.intersects(target)) {
                            linked = true;
                            break;
                        }
                        region |= grow;
                        frontier = grow;
                    }
                    if (!linked && !region.intersects(target)) return false;
                }
            } else {
                int started = sa ? a : b;
                if (!(set_neighborhood(started) & free_).any()) return false;
            }
        }
        return true;
    }

    bool run(std::vector<Bits128>* out) {
        if (!step(0)) return false;
        *out = sets;
        return true;
    }

    bool step(size_t ei) {
        tick();
        if (!feasible(ei)) return false;
        if (ei == edges.size()) return place_lonely();
        auto [a, b] = edges[ei];
        if (sets[static_cast<size_t>(a)].none() && sets[static_cast<size_t>(b)].none()) {
            for (int y : host_order) {
                if (!free_.test(y)) continue;
                sets[static_cast<size_t>(a)] = Bits128::single(y);
                free_.reset(y);
                if (process_edge(ei, a, b)) return true;
                free_.set(y);
                sets[static_cast<size_t>(a)] = Bits128{};
            }
            return false;
        }
        if (sets[static_cast<size_t>(a)].none()) std::swap(a, b);
        return process_edge(ei, a, b);
    }

    bool process_edge(size_t ei, int a, int b) {
        if (sets[static_cast<size_t>(b)].any()) {
            if (set_neighborhood(a).intersects(sets[static_cast<size_t>(b)])) return step(ei + 1);
            return join_chain(ei, a, b, set_neighborhood(a) & free_);
        }
        return grow_chain(ei, a, b, set_neighborhood(a) & free_);
    }

    // Edge (a, b) with b unstarted: chain u1..uk of free vertices, u1 next to
    // a's set, prefix absorbed into a, the last vertex becoming b's root.
    bool grow_chain(size_t ei, int a, int b, Bits128 attach) {
        tick();
        Bits128 cand = attach & free_;
        for (int u = cand.first(); u >= 0; u = cand.next(u)) {
            free_.reset(u);
            sets[static_cast<size_t>(b)] = Bits128::single(u);
            if (step(ei + 1)) return true;
            sets[static_cast<size_t>(b)] = Bits128{};
            sets[static_cast<size_t>(a)].set(u);
            if (grow_chain(ei, a, b, host.neighbors(u))) return true;
            sets[static_cast<size_t>(a)].reset(u);
            free_.set(u);
        }
        return false;
    }

    // Edge (a, b) with both sets started and not yet adjacent: chain from a's
    // set to b's neighborhood; a split point hands the tail over to b.
    bool join_chain(size_t ei, int a, int b, Bits128 attach) {
        tick();
        Bits128 cand = attach & free_;
        Bits128 near_b = set_neighborhood(b);
        for (int u = cand.first(); u >= 0; u = cand.next(u)) {
            free_.reset(u);
            if (near_b.test(u)) {
                sets[static_cast<size_t>(a)].set(u);
                if (step(ei + 1)) return true;
                sets[static_cast<size_t>(a)].reset(u);
            }
            std::vector<int> tail{u};
            if (tail_chain(ei, b, u, tail)) return true;
            sets[static_cast<size_t>(a)].set(u);
            if (join_chain(ei, a, b, host.neighbors(u))) return true;
            sets[static_cast<size_t>(a)].reset(u);
            free_.set(u);
        }
        return false;
    }

    // Tail of a join chain: vertices destined for b's set. The tail may close
    // as soon as its last vertex touches b's set, or keep extending.
    bool tail_chain(size_t ei, int b, int last, std::vector<int>& tail) {
        tick();
        if (set_neighborhood(b).test(last)) {
            Bits128 saved = sets[static_cast<size_t>(b)];
            for (int t : tail) sets[static_cast<size_t>(b)].set(t);
            if (step(ei + 1)) return true;
            sets[static_cast<size_t>(b)] = saved;
        }
        Bits128 cand = host.neighbors(last) & free_;
        for (int w = cand.first(); w >= 0; w = cand.next(w)) {
            free_.reset(w);
            tail.push_back(w);
            if (tail_chain(ei, b, w, tail)) return true;
            tail.pop_back();
            free_.set(w);
        }
        return false;
    }

    bool place_lonely() {
        Bits128 avail = free_;
        std::vector<int> taken;
        for (int v : lonely) {
            int u = avail.first();
            if (u < 0) {
                for (size_t i = 0; i < taken.size(); ++i) {
                    sets[static_cast<size_t>(lonely[i])] = Bits128{};
                    free_.set(taken[i]);
                }
                return false;
            }
            sets[static_cast<size_t>(v)] = Bits128::single(u);
            avail.reset(u);
            free_.reset(u);
            taken.push_back(u);
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// Clique separators
// ---------------------------------------------------------------------------

bool extend_clique(const Graph& g, int t, Bits128 clique, Bits128 cand, int low, Bits128* sep) {
    if (clique.count() > 0 && static_cast<int>(clique.count()) <= t) {
        if (g.components_of(g.vertices() - clique).size() > 1) {
            *sep = clique;
            return true;
        }
    }
    if (static_cast<int>(clique.count()) == t) return false;
    for (int v = low; v < g.n(); ++v) {
        if (!cand.test(v)) continue;
        Bits128 c2 = clique;
        c2.set(v);
        if (extend_clique(g, t, c2, cand & g.neighbors(v), v + 1, sep)) return true;
    }
    return false;
}

bool find_clique_separator(const Graph& g, int t, Bits128* sep) {
    if (g.n() == 0) return false;
    if (g.components().size() > 1) {
        *sep = Bits128{};
        return true;
    }
    if (t <= 0) return false;
    return extend_clique(g, t, Bits128{}, g.vertices(), 0, sep);
}

struct Piece {
    Graph graph;
    std::vector<int> ids;  // piece vertex -> original host vertex
};

void split_pieces(const Graph& g, const std::vector<int>& ids, int t, std::vector<Piece>& out) {
    Bits128 sep;
    if (find_clique_separator(g, t, &sep)) {
        for (const Bits128& comp : g.components_of(g.vertices() - sep)) {
            std::vector<int> sub;
            Graph piece = g.induced(comp | sep, &sub);
            std::vector<int> piece_ids(sub.size());
            for (size_t i = 0; i < sub.size(); ++i)
                piece_ids[i] = ids[static_cast<size_t>(sub[i])];
            split_pieces(piece, piece_ids, t, out);
        }
        return;
    }
    out.push_back(Piece{g, ids});
}

// Any separator of size <= t, clique or not, found by vertex cuts between
// non-adjacent pairs. Used by the absence probe below.
std::optional<Bits128> find_small_separator(const Graph& g, int t) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            Bits128 cut = g.min_vertex_cut(u, v);
            if (static_cast<int>(cut.count()) <= t) return cut;
        }
    return std::nullopt;
}

Graph complete_on(const Graph& g, Bits128 s) {
    Graph h = g;
    for (int u = s.first(); u >= 0; u = s.next(u))
        for (int v = s.next(u); v >= 0; v = s.next(v))
            if (!h.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

int pattern_split_order(const Graph& pattern) {
    if (pattern.n() == 0) return -1;
    if (pattern.components().size() > 1) return -1;
    int kappa = 0;
    while (kappa < pattern.n() && pattern.is_k_connected(kappa + 1)) ++kappa;
    return std::max(kappa - 1, 0);
}

// Probes may recurse through solve_piece; past this depth only the plain
// search runs, so probe recursion cannot ping-pong.
constexpr int kProbeDepthLimit = 2;

std::optional<std::vector<Bits128>> solve_piece(const Graph& g, const Graph& pattern, int t,
                                                const MinorOptions& opts, uint64_t& nodes,
                                                int depth);

// Absence-only probe: if the host has any separator S with |S| <= t, the
// pattern (being (t+1)-connected) is a minor iff it is a minor of some
// component of host + clique(S) together with S. Absence of all pieces
// settles absence; a presence there is only suggestive, so fall through.
bool probe_absent(const Graph& g, const Graph& pattern, int t, const MinorOptions& opts,
                  uint64_t& nodes, int depth) {
    std::optional<Bits128> sep = find_small_separator(g, t);
    if (!sep) return false;
    Graph closed = complete_on(g, *sep);
    for (const Bits128& comp : closed.components_of(closed.vertices() - *sep)) {
        std::vector<int> sub;
        Graph piece = closed.induced(comp | *sep, &sub);
        if (solve_piece(piece, pattern, t, opts, nodes, depth)) return false;
    }
    return true;
}

// Absence-only probe by minor transitivity: an obstruction that is a minor
// of the pattern but not of the host rules the pattern out. Planarity is the
// polynomial form of the same idea; the explicit searches run probe-free and
// under a node cap, treating an out-of-cap search as inconclusive.
bool probe_obstruction(const Graph& g, const Graph& pattern, const MinorOptions& opts,
                       uint64_t& nodes) {
    if (!is_planar(pattern) && is_planar(g)) return true;
    static const Graph k5 = [] {
        Graph k(5);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) k.add_edge(i, j);
        return k;
    }();
    static const Graph k33 = [] {
        Graph k(6);
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) k.add_edge(i, j);
        return k;
    }();
    constexpr uint64_t kObstructionNodeCap = 2000000;
    for (const Graph* obstruction : {&k5, &k33}) {
        if (pattern.n() < obstruction->n() || pattern.m() < obstruction->m()) continue;
        int ot = pattern_split_order(*obstruction);
        MinorOptions inner = opts;
        inner.node_budget = std::min(opts.node_budget, kObstructionNodeCap);
        try {
            uint64_t local = 0;
            bool in_pattern =
                solve_piece(pattern, *obstruction, ot, inner, local, kProbeDepthLimit).has_value();
            nodes += local;
            if (!in_pattern) continue;
            local = 0;
            bool in_host =
                solve_piece(g, *obstruction, ot, inner, local, kProbeDepthLimit).has_value();
            nodes += local;
            if (!in_host) return true;
        } catch (const budget_error& e) {
            nodes += e.nodes;
        }
    }
    return false;
}

// Absence-only probe: at most |D| branch sets of any model meet a vertex set
// D, and the remaining sets survive deleting D intact. So the pattern minus
// some <= |D| vertices must be a minor of host - D; refuting every reduced
// pattern refutes the pattern. D is the set of universal vertices, which
// tends to leave a structurally trivial remainder.
bool probe_deletion_split(const Graph& g, const Graph& pattern, const MinorOptions& opts,
                          uint64_t& nodes, int depth) {
    if (pattern.n() > 16) return false;
    Bits128 dom;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == g.n() - 1) dom.set(v);
    int d = dom.count();
    if (d == 0 || d >= pattern.n()) return false;
    Graph rest = g.induced(g.vertices() - dom);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pattern.n()); ++mask) {
        if (std::popcount(mask) > d) continue;
        Bits128 keep;
        for (int v = 0; v < pattern.n(); ++v)
            if (!(mask >> v & 1)) keep.set(v);
        Graph sub = pattern.induced(keep);
        if (solve_piece(rest, sub, pattern_split_order(sub), opts, nodes, depth + 1))
            return false;
    }
    return true;
}

std::optional<std::vector<Bits128>> solve_piece(const Graph& g, const Graph& pattern, int t,
                                                const MinorOptions& opts, uint64_t& nodes,
                                                int depth) {
    if (g.n() < pattern.n() || g.m() < pattern.m()) return std::nullopt;

    if (auto emb = has_subgraph(g, pattern)) {
        std::vector<Bits128> sets(static_cast<size_t>(pattern.n()));
        for (int v = 0; v < pattern.n(); ++v)
            sets[static_cast<size_t>(v)] = Bits128::single((*emb)[static_cast<size_t>(v)]);
        return sets;
    }
    if (pattern.n() == 0) return std::vector<Bits128>{};

    if (opts.use_reduction && depth < kProbeDepthLimit) {
        if (probe_obstruction(g, pattern, opts, nodes)) return std::nullopt;
        if (probe_deletion_split(g, pattern, opts, nodes, depth)) return std::nullopt;
    }
    if (opts.use_reduction && t >= 1 && probe_absent(g, pattern, t, opts, nodes, depth))
        return std::nullopt;

    MinorSearch search(g, pattern, opts.node_budget, nodes);
    std::vector<Bits128> sets;
    if (!search.run(&sets)) return std::nullopt;
    return sets;
}

Graph petersen_graph_local() {
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

}  // namespace

std::optional<std::vector<int>> has_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.n() > host.n() || pattern.m() > host.m()) return std::nullopt;
    if (pattern.n() == 0) return std::vector<int>{};
    SubgraphSearch search(host, pattern);
    if (!search.extend(0)) return std::nullopt;
    return search.image;
}

std::optional<std::vector<int>> petersen_subgraph_10(const Graph& host) {
    if (host.n() != 10) throw precondition_error("petersen_subgraph_10 needs a 10-vertex host");
    static const Graph pat = petersen_graph_local();
    std::vector<int> image(10, -1);
    Bits128 used;
    // map pattern vertices 0..9 in order; each after 0 has a mapped neighbor
    struct Frame {
        int v;
        Bits128 cand;
    };
    auto candidates = [&](int v) {
        Bits128 cand = host.vertices() - used;
        for (int u : pat.neighbors(v))
            if (image[static_cast<size_t>(u)] >= 0) cand &= host.neighbors(image[static_cast<size_t>(u)]);
        return cand;
    };
    std::vector<Frame> frames;
    frames.push_back(Frame{0, candidates(0)});
    while (!frames.empty()) {
        Frame& f = frames.back();
        int w = f.cand.first();
        if (w < 0) {
            frames.pop_back();
            if (!frames.empty()) {
                int v = frames.back().v;
                used.reset(image[static_cast<size_t>(v)]);
                image[static_cast<size_t>(v)] = -1;
            }
            continue;
        }
        f.cand.reset(w);
        if (host.degree(w) < 3) continue;
        image[static_cast<size_t>(f.v)] = w;
        used.set(w);
        if (f.v == 9) return image;
        frames.push_back(Frame{f.v + 1, candidates(f.v + 1)});
    }
    return std::nullopt;
}

bool validate_branch_model(const Graph& host, const Graph& pattern, const BranchModel& model) {
    if (model.sets.size() != static_cast<size_t>(pattern.n())) return false;
    Bits128 all;
    for (const Bits128& s : model.sets) {
        if (s.none()) return false;
        if (!s.subset_of(host.vertices())) return false;
        if (s.intersects(all)) return false;
        all |= s;
        if (!host.connected_within(s)) return false;
    }
    for (int u = 0; u < pattern.n(); ++u)
        for (int v : pattern.neighbors(u)) {
            if (v <= u) continue;
            if (!host.neighbors_of_set(model.sets[static_cast<size_t>(u)])
                     .intersects(model.sets[static_cast<size_t>(v)]))
                return false;
        }
    return true;
}

std::optional<BranchModel> has_minor(const Graph& host, const Graph& pattern,
                                     const MinorOptions& opts) {
    if (pattern.n() == 0) return BranchModel{};
    if (pattern.n() > host.n() || pattern.m() > host.m()) return std::nullopt;

    uint64_t nodes = 0;
    int t = pattern_split_order(pattern);

    if (!opts.use_reduction || t < 0) {
        auto sets = solve_piece(host, pattern, opts.use_reduction ? t : -1, opts, nodes, 0);
        if (!sets) return std::nullopt;
        return BranchModel{*sets};
    }

    std::vector<int> ids(static_cast<size_t>(host.n()));
    for (int v = 0; v < host.n(); ++v) ids[static_cast<size_t>(v)] = v;
    std::vector<Piece> pieces;
    split_pieces(host, ids, t, pieces);
    for (const Piece& piece : pieces) {
        auto sets = solve_piece(piece.graph, pattern, t, opts, nodes, 0);
        if (!sets) continue;
        BranchModel model;
        model.sets.assign(static_cast<size_t>(pattern.n()), Bits128{});
        for (int v = 0; v < pattern.n(); ++v) {
            const Bits128& s = (*sets)[static_cast<size_t>(v)];
            for (int u = s.first(); u >= 0; u = s.next(u))
                model.sets[static_cast<size_t>(v)].set(piece.ids[static_cast<size_t>(u)]);
        }
        return model;
    }
    return std::nullopt;
}

bool rooted_k3_minor(const Graph& host, const RootedTriple& roots) {
    int r[3] = {roots.x, roots.y, roots.z};
    for (int i = 0; i < 3; ++i) {
        if (r[i] < 0 || r[i] >= host.n()) throw precondition_error("root out of range");
        for (int j = i + 1; j < 3; ++j)
            if (r[i] == r[j]) throw precondition_error("roots must be distinct");
    }
    for (int v = 0; v < host.n(); ++v) {
        std::vector<int> keep;
        for (int i = 0; i < 3; ++i)
            if (r[i] != v) keep.push_back(r[i]);
        Bits128 rest = host.vertices();
        rest.reset(v);
        std::vector<Bits128> comps = host.components_of(rest);
        bool all_separated = true;
        for (size_t a = 0; a < keep.size() && all_separated; ++a)
            for (size_t b = a + 1; b < keep.size() && all_separated; ++b) {
                for (const Bits128& c : comps)
                    if (c.test(keep[a]) && c.test(keep[b])) {
                        all_separated = false;
                        break;
                    }
            }
        if (keep.size() < 2) all_separated = false;
        if (all_separated) return false;
    }
    return true;
}

bool minor_oracle_bruteforce(const Graph& host, const Graph& pattern) {
    if (host.n() > 9) throw capacity_error("brute-force minor oracle limited to 9 vertices");
    if (pattern.n() > host.n() || pattern.m() > host.m()) return false;
    std::string target = canonical_form(pattern);
    std::set<std::string> seen;
    std::queue<Graph> work;
    if (canonical_form(host) == target) return true;
    seen.insert(canonical_form(host));
    work.push(host);
    while (!work.empty()) {
        Graph g = work.front();
        work.pop();
        for (int v = 0; v < g.n(); ++v) {
            Bits128 keep = g.vertices();
            keep.reset(v);
            Graph h = g.induced(keep, nullptr);
            if (h.n() >= pattern.n() && h.m() >= pattern.m()) {
                std::string key = canonical_form(h);
                if (key == target) return true;
                if (seen.insert(key).second) work.push(h);
            }
        }
        for (int u = 0; u < g.n(); ++u)
            for (int v : g.neighbors(u)) {
                if (v <= u) continue;
                Graph h = g;
                h.delete_edge(u, v);
                if (h.n() >= pattern.n() && h.m() >= pattern.m()) {
                    std::string key = canonical_form(h);
                    if (key == target) return true;
                    if (seen.insert(key).second) work.push(h);
                }
                Graph c = g.contract_edge(u, v);
                if (c.n() >= pattern.n() && c.m() >= pattern.m()) {
                    std::string key = canonical_form(c);
                    if (key == target) return true;
                    if (seen.insert(key).second) work.push(c);
                }
            }
    }
    return false;
}

std::vector<Graph> clique_separator_reduce(const Graph& host, int t) {
    if (t < 0) throw precondition_error("separator size bound must be non-negative");
    std::vector<int> ids(static_cast<size_t>(host.n()));
    for (int v = 0; v < host.n(); ++v) ids[static_cast<size_t>(v)] = v;
    std::vector<Piece> pieces;
    split_pieces(host, ids, t, pieces);
    std::vector<Graph> out;
    out.reserve(pieces.size());
    for (Piece& p : pieces) out.push_back(std::move(p.graph));
    return out;
}

}  // namespace pmk
