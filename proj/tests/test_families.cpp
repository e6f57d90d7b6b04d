#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "pmk/families.hpp"
#include "pmk/graph.hpp"
#include "pmk/iso.hpp"
#include "pmk/minor.hpp"
#include "pmk/rng.hpp"
#include "test_util.hpp"

using namespace pmk;
using namespace testutil;

namespace {

// labeled tree on k nodes from a Pruefer sequence of length k-2
std::vector<std::pair<int, int>> pruefer_tree(int k, const std::vector<int>& seq) {
    std::vector<int> degree(static_cast<size_t>(k), 1);
    for (int x : seq) ++degree[static_cast<size_t>(x)];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < k; ++v)
        if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({std::min(leaf, x), std::max(leaf, x)});
        if (--degree[static_cast<size_t>(x)] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.push_back({a, b});
    return edges;
}

std::vector<std::vector<std::pair<int, int>>> all_glue_trees(int k) {
    std::vector<std::vector<std::pair<int, int>>> trees;
    if (k == 1) {
        trees.push_back({});
        return trees;
    }
    if (k == 2) {
        trees.push_back({{0, 1}});
        return trees;
    }
    std::vector<int> seq(static_cast<size_t>(k - 2), 0);
    while (true) {
        trees.push_back(pruefer_tree(k, seq));
        int pos = k - 3;
        while (pos >= 0 && seq[static_cast<size_t>(pos)] == k - 1) {
            seq[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<size_t>(pos)];
    }
    return trees;
}

std::multiset<int> degree_multiset(const Graph& g) {
    std::multiset<int> out;
    for (int v = 0; v < g.n(); ++v) out.insert(g.degree(v));
    return out;
}

// structural audit of a recognized decomposition against the graph it came from
void check_recognized(const Graph& g, const RecognizedCockade& r) {
    Graph completed = g;
    for (auto [u, v] : r.added_edges) {
        CHECK(!g.has_edge(u, v));
        completed.add_edge(u, v);
    }
    REQUIRE(r.block_count == static_cast<int>(r.blocks.size()));
    CHECK(completed.m() == 5 * completed.n() - 9);

    Bits128 covered;
    for (const auto& block : r.blocks) {
        REQUIRE(block.size() == 9);
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                CHECK(completed.has_edge(block[i], block[j]));
        for (int v : block) covered.set(v);
    }
    CHECK(covered == g.vertices());

    // every edge lies inside some block
    int inside = 0;
    std::set<std::pair<int, int>> seen;
    for (const auto& block : r.blocks)
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                seen.insert({block[i], block[j]});
    for (const auto& e : seen) {
        (void)e;
        ++inside;
    }
    CHECK(inside == completed.m());

    REQUIRE(r.glue_tree.size() == static_cast<size_t>(r.block_count - 1));
    REQUIRE(r.glue_sites.size() == r.glue_tree.size());
    // the glue tree is a tree over block indices and each site is shared
    std::vector<int> root(static_cast<size_t>(r.block_count));
    for (size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (root[static_cast<size_t>(x)] != x) x = root[static_cast<size_t>(x)];
        return x;
    };
    for (size_t i = 0; i < r.glue_tree.size(); ++i) {
        auto [a, b] = r.glue_tree[i];
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        REQUIRE(a < r.block_count);
        REQUIRE(b < r.block_count);
        CHECK(find(a) != find(b));
        root[static_cast<size_t>(find(a))] = find(b);
        auto [u, v] = r.glue_sites[i];
        const auto& ba = r.blocks[static_cast<size_t>(a)];
        const auto& bb = r.blocks[static_cast<size_t>(b)];
        CHECK(std::binary_search(ba.begin(), ba.end(), u));
        CHECK(std::binary_search(ba.begin(), ba.end(), v));
        CHECK(std::binary_search(bb.begin(), bb.end(), u));
        CHECK(std::binary_search(bb.begin(), bb.end(), v));
    }
}

}  // namespace

TEST_CASE("petersen fixed construction") {
    Graph p = petersen();
    CHECK(p.n() == 10);
    CHECK(p.m() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(p.is_k_connected(3));
    // girth five: no triangles, no four-cycles
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
            Bits128 common = p.neighbors(u) & p.neighbors(v);
            if (p.has_edge(u, v))
                CHECK(common.none());
            else
                CHECK(common.count() <= 1);
        }
}

TEST_CASE("cockade sizes and identity") {
    int expected_n[] = {9, 16, 23, 30};
    int expected_m[] = {36, 71, 106, 141};
    for (int k = 1; k <= 4; ++k) {
        CockadeSpec spec;
        spec.block_count = k;
        Graph g = cockade(spec);
        CHECK(g.n() == expected_n[k - 1]);
        CHECK(g.m() == expected_m[k - 1]);
        CHECK(g.m() == 5 * g.n() - 9);
        CHECK(g.n() % 7 == 2);
    }
}

TEST_CASE("cockade identity holds for every glue tree") {
    for (int k = 1; k <= 6; ++k) {
        for (const auto& tree : all_glue_trees(k)) {
            CockadeSpec spec;
            spec.block_count = k;
            spec.glue_tree = tree;
            Graph g = cockade(spec);
            CHECK(g.n() == 9 + 7 * (k - 1));
            CHECK(g.m() == 5 * g.n() - 9);
        }
        if (k > 4) break;  // k = 5 has 125 trees already; enough shapes
    }
}

TEST_CASE("path and star glue trees agree on size") {
    CockadeSpec path;
    path.block_count = 3;
    path.glue_tree = {{0, 1}, {1, 2}};
    CockadeSpec star;
    star.block_count = 3;
    star.glue_tree = {{0, 1}, {0, 2}};
    Graph gp = cockade(path);
    Graph gs = cockade(star);
    CHECK(gp.n() == gs.n());
    CHECK(gp.m() == gs.m());
    CHECK(degree_multiset(gp) == degree_multiset(gs));
}

TEST_CASE("explicit glue sites spread the blocks") {
    CockadeSpec spec;
    spec.block_count = 3;
    spec.glue_tree = {{0, 1}, {1, 2}};
    spec.glue_sites = {{2, 3}, {9, 10}};
    Graph g = cockade(spec);
    CHECK(g.n() == 23);
    CHECK(g.m() == 106);
    // canonical gluing stacks every block on {0,1}; the explicit sites give a
    // different degree profile
    CockadeSpec canon;
    canon.block_count = 3;
    Graph gc = cockade(canon);
    CHECK(degree_multiset(g) != degree_multiset(gc));

    auto rec = recognize_cockade_spanning(g, 0);
    REQUIRE(rec.has_value());
    CHECK(rec->block_count == 3);
    CHECK(rec->added_edges.empty());
    check_recognized(g, *rec);
}

TEST_CASE("cockade spec validation") {
    CockadeSpec bad_count;
    bad_count.block_count = 0;
    CHECK_THROWS_AS(cockade(bad_count), precondition_error);

    CockadeSpec short_tree;
    short_tree.block_count = 3;
    short_tree.glue_tree = {{0, 1}};
    CHECK_THROWS_AS(cockade(short_tree), precondition_error);

    CockadeSpec cyclic;
    cyclic.block_count = 4;
    cyclic.glue_tree = {{0, 1}, {1, 2}, {2, 1}};
    CHECK_THROWS_AS(cockade(cyclic), precondition_error);

    CockadeSpec range;
    range.block_count = 2;
    range.glue_tree = {{0, 2}};
    CHECK_THROWS_AS(cockade(range), precondition_error);

    CockadeSpec bad_site_count;
    bad_site_count.block_count = 3;
    bad_site_count.glue_sites = {{0, 1}};
    CHECK_THROWS_AS(cockade(bad_site_count), precondition_error);

    CockadeSpec non_edge;
    non_edge.block_count = 3;
    non_edge.glue_sites = {{}, {8, 9}};  // 8 is block-0 interior, 9 joins later
    CHECK_THROWS_AS(cockade(non_edge), precondition_error);

    CockadeSpec out_of_range_site;
    out_of_range_site.block_count = 2;
    out_of_range_site.glue_sites = {{0, 200}};
    CHECK_THROWS_AS(cockade(out_of_range_site), precondition_error);

    CockadeSpec dup_site;
    dup_site.block_count = 2;
    dup_site.glue_sites = {{3, 3}};
    CHECK_THROWS_AS(cockade(dup_site), precondition_error);

    CockadeSpec wrong_arity;
    wrong_arity.block_count = 2;
    wrong_arity.glue_sites = {{1, 2, 3}};
    CHECK_THROWS_AS(cockade(wrong_arity), precondition_error);
}

TEST_CASE("generic cockades over other blocks") {
    CockadeSpec two;
    two.block_count = 2;
    Graph k41 = generic_cockade(complete_graph(4), 1, two);
    CHECK(k41.n() == 7);
    CHECK(k41.m() == 12);

    Graph k52 = generic_cockade(complete_graph(5), 2, two);
    CHECK(k52.n() == 8);
    CHECK(k52.m() == 19);
    CHECK(!minor_oracle_bruteforce(k52, complete_graph(6)));
    CHECK(minor_oracle_bruteforce(k52, complete_graph(5)));

    CockadeSpec three;
    three.block_count = 3;
    Graph k31 = generic_cockade(complete_graph(3), 1, three);
    CHECK(k31.n() == 7);
    CHECK(k31.m() == 9);
    CHECK(!minor_oracle_bruteforce(k31, complete_graph(4)));

    Graph k42 = generic_cockade(complete_graph(4), 2, three);
    CHECK(k42.n() == 8);
    CHECK(k42.m() == 5 + 5 + 5);
    CHECK(!minor_oracle_bruteforce(k42, complete_graph(5)));

    // a block with no t-clique at all
    Graph no_clique(4);
    no_clique.add_edge(0, 1);
    no_clique.add_edge(2, 3);
    CHECK_THROWS_AS(generic_cockade(no_clique, 3, two), precondition_error);
    CHECK_THROWS_AS(generic_cockade(complete_graph(4), 0, two), precondition_error);
    CHECK_THROWS_AS(generic_cockade(complete_graph(4), 5, two), precondition_error);
}

TEST_CASE("cockade capacity") {
    CockadeSpec huge;
    huge.block_count = 18;
    Graph g = cockade(huge);  // 9 + 7 * 17 = 128 exactly
    CHECK(g.n() == 128);
    CHECK(g.m() == 5 * 128 - 9);
    huge.block_count = 19;
    CHECK_THROWS_AS(cockade(huge), capacity_error);
}

TEST_CASE("recognizer accepts built cockades") {
    for (int k = 1; k <= 4; ++k) {
        for (const auto& tree : all_glue_trees(k)) {
            CockadeSpec spec;
            spec.block_count = k;
            spec.glue_tree = tree;
            Graph g = cockade(spec);
            auto rec = recognize_cockade_spanning(g, 0);
            REQUIRE(rec.has_value());
            CHECK(rec->block_count == k);
            CHECK(rec->added_edges.empty());
            check_recognized(g, *rec);
            if (k > 3) break;  // one k = 4 shape suffices at this size
        }
    }
}

TEST_CASE("recognizer repairs removed edges") {
    SplitMix64 rng(777001);
    CockadeSpec spec;
    spec.block_count = 3;
    Graph base = cockade(spec);

    for (int trial = 0; trial < 25; ++trial) {
        Graph g = base;
        std::vector<std::pair<int, int>> removed;
        int how_many = 1 + static_cast<int>(rng.below(2));
        while (static_cast<int>(removed.size()) < how_many) {
            int u = static_cast<int>(rng.below(static_cast<uint64_t>(g.n())));
            int v = static_cast<int>(rng.below(static_cast<uint64_t>(g.n())));
            if (u == v || !g.has_edge(u, v)) continue;
            g.delete_edge(u, v);
            removed.push_back({std::min(u, v), std::max(u, v)});
        }
        std::sort(removed.begin(), removed.end());

        auto rec = recognize_cockade_spanning(g, 2);
        REQUIRE(rec.has_value());
        CHECK(rec->added_edges == removed);
        check_recognized(g, *rec);

        // with a budget below the defect the answer is no
        auto tight = recognize_cockade_spanning(g, how_many - 1);
        CHECK(!tight.has_value());
    }
}

TEST_CASE("recognizer rejects non-cockades") {
    // right size, wrong structure: rewire one block edge across blocks
    CockadeSpec spec;
    spec.block_count = 2;
    Graph g = cockade(spec);
    g.delete_edge(4, 5);
    g.add_edge(8, 15);
    CHECK(g.m() == 5 * g.n() - 9);
    CHECK(!recognize_cockade_spanning(g, 2).has_value());

    // wrong vertex count modulus
    CHECK(!recognize_cockade_spanning(petersen(), 2).has_value());

    // too many edges can never be completed
    Graph dense = complete_graph(16);
    CHECK(!recognize_cockade_spanning(dense, 2).has_value());

    // three missing edges exceed every allowed budget
    Graph three = cockade(spec);
    three.delete_edge(2, 3);
    three.delete_edge(4, 5);
    three.delete_edge(6, 7);
    CHECK(!recognize_cockade_spanning(three, 2).has_value());

    CHECK_THROWS_AS(recognize_cockade_spanning(g, 3), precondition_error);
    CHECK_THROWS_AS(recognize_cockade_spanning(g, -1), precondition_error);
    CockadeSpec big;
    big.block_count = 6;
    CHECK_THROWS_AS(recognize_cockade_spanning(cockade(big), 2), capacity_error);
}

TEST_CASE("recognizer accepts K_9 variants") {
    Graph k9 = complete_graph(9);
    auto rec = recognize_cockade_spanning(k9, 0);
    REQUIRE(rec.has_value());
    CHECK(rec->block_count == 1);
    CHECK(rec->added_edges.empty());

    Graph missing = k9;
    missing.delete_edge(0, 8);
    CHECK(!recognize_cockade_spanning(missing, 0).has_value());
    auto repaired = recognize_cockade_spanning(missing, 1);
    REQUIRE(repaired.has_value());
    REQUIRE(repaired->added_edges.size() == 1);
    CHECK(repaired->added_edges[0] == std::pair<int, int>{0, 8});
}

TEST_CASE("dominant clique family shape") {
    int expected_n[] = {8, 13, 18};
    int expected_m[] = {28, 53, 78};
    for (int k = 1; k <= 3; ++k) {
        Graph g = dominant_k5_family(k);
        CHECK(g.n() == expected_n[k - 1]);
        CHECK(g.m() == expected_m[k - 1]);
        CHECK(g.m() == 5 * g.n() - 12);
        for (int i = 0; i < 3; ++i) CHECK(g.degree(i) == g.n() - 1);
        for (int v = 3; v < g.n(); ++v) CHECK(g.degree(v) == 7);
        CHECK(g.is_k_connected(3));
        if (k >= 2) CHECK(!g.is_k_connected(4));
    }
    CHECK_THROWS_AS(dominant_k5_family(0), precondition_error);
    CHECK_THROWS_AS(dominant_k5_family(26), capacity_error);
}

TEST_CASE("clique join family shape") {
    Graph k5 = join_k5_empty(5);
    CHECK(k5.n() == 5);
    CHECK(k5.m() == 10);
    for (int n : {6, 10, 14}) {
        Graph g = join_k5_empty(n);
        CHECK(g.n() == n);
        CHECK(g.m() == 5 * n - 15);
        for (int v = 5; v < n; ++v) CHECK(g.degree(v) == 5);
        if (n >= 7) {
            CHECK(g.is_k_connected(5));
            CHECK(!g.is_k_connected(6));
        }
    }
    CHECK_THROWS_AS(join_k5_empty(4), precondition_error);
}

TEST_CASE("apex icosahedron shape") {
    Graph g = apex_icosahedron();
    CHECK(g.n() == 13);
    CHECK(g.m() == 42);
    CHECK(g.degree(12) == 12);
    for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 6);
    CHECK(g.is_k_connected(6));
    CHECK(!g.is_k_connected(7));
    // the base is the icosahedron: 5-regular, planar, 5-connected
    Graph ico = g.induced(Bits128::range(12));
    CHECK(ico.m() == 30);
    for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
    CHECK(ico.is_k_connected(5));
    CHECK(is_planar(ico));
    CHECK(!is_planar(g));
}

TEST_CASE("families exclude the pattern as minor") {
    Graph pet = petersen();
    MinorOptions opts;

    CockadeSpec two;
    two.block_count = 2;
    Graph c2 = cockade(two);
    CHECK(!has_minor(c2, pet, opts).has_value());

    CHECK(!has_minor(dominant_k5_family(2), pet, opts).has_value());
    CHECK(!has_minor(join_k5_empty(12), pet, opts).has_value());
    CHECK(!has_minor(apex_icosahedron(), pet, opts).has_value());

    // one extra edge on an extremal cockade flips the answer
    Graph bumped = c2;
    bumped.add_edge(8, 15);
    auto witness = has_minor(bumped, pet, opts);
    REQUIRE(witness.has_value());
    CHECK(validate_branch_model(bumped, pet, *witness));
}
