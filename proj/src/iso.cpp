#include "pmk/iso.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

namespace pmk {

namespace {

constexpr int kIsoMax = 12;
constexpr uint32_t kUnset = std::numeric_limits<uint32_t>::max();

// Minimal column sequence over all orderings: placing vertices one by one,
// column p is the adjacency pattern of the new vertex against positions
// 0..p-1. Prefix-pruned depth-first search; counts orderings that realize
// the minimum, which is exactly |Aut|.
struct Canon {
    const Graph& g;
    int n;
    std::vector<uint32_t> best;
    std::vector<int> perm;
    uint64_t hits = 0;

    explicit Canon(const Graph& gr) : g(gr), n(gr.n()), best(gr.n(), kUnset), perm(gr.n(), -1) {}

    void dfs(int p, Bits128 used) {
        if (p == n) {
            ++hits;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used.test(v)) continue;
            uint32_t col = 0;
            const Bits128& nb = g.neighbors(v);
            for (int q = 0; q < p; ++q) col |= (nb.test(perm[q]) ? 1u : 0u) << q;
            if (col > best[p]) continue;
            if (col < best[p]) {
                best[p] = col;
                for (int q = p + 1; q < n; ++q) best[q] = kUnset;
                hits = 0;
            }
            perm[p] = v;
            Bits128 u2 = used;
            u2.set(v);
            dfs(p + 1, u2);
        }
    }

    void run() {
        if (n > kIsoMax) throw capacity_error("canonical form limited to 12 vertices");
        dfs(0, Bits128{});
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    Canon c(g);
    c.run();
    std::string s;
    s.push_back(static_cast<char>(g.n()));
    for (int p = 0; p < g.n(); ++p) {
        s.push_back(static_cast<char>(c.best[p] & 0xff));
        s.push_back(static_cast<char>((c.best[p] >> 8) & 0xff));
    }
    return s;
}

uint64_t automorphism_count(const Graph& g) {
    if (g.n() == 0) return 1;
    Canon c(g);
    c.run();
    return c.hits;
}

uint64_t automorphism_count_naive(const Graph& g) {
    int n = g.n();
    if (n > 10) throw capacity_error("naive automorphism count limited to 10 vertices");
    if (n == 0) return 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace pmk
