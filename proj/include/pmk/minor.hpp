#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pmk/graph.hpp"

namespace pmk {

// Witness that a pattern is a minor of a host: one branch set per pattern
// vertex; sets are disjoint, non-empty and connected, and every pattern edge
// has a host edge between the two sets.
struct BranchModel {
    std::vector<Bits128> sets;
};

struct RootedTriple {
    int x, y, z;
};

// The exact search ran out of its node budget: neither presence nor absence.
struct budget_error : graph_error {
    uint64_t nodes;
    explicit budget_error(uint64_t n)
        : graph_error("minor search node budget exhausted"), nodes(n) {}
};

struct MinorOptions {
    uint64_t node_budget = 100000000ull;
    bool use_reduction = true;  // clique-separator preprocessing
};

// Exact minor test. Returns a branch model when present, nullopt when the
// pattern is provably absent; throws budget_error when undecided in budget.
std::optional<BranchModel> has_minor(const Graph& host, const Graph& pattern,
                                     const MinorOptions& opts = {});

// Independent validation of a claimed model; shares no state with the search.
bool validate_branch_model(const Graph& host, const Graph& pattern, const BranchModel& model);

// Exact subgraph embedding (not induced): injective, edge-preserving map,
// returned as pattern index -> host vertex.
std::optional<std::vector<int>> has_subgraph(const Graph& host, const Graph& pattern);

// Bijective Petersen embedding into a 10-vertex host. Hot path for sweeps
// over dense 10-vertex hosts; agrees with the generic matcher.
std::optional<std::vector<int>> petersen_subgraph_10(const Graph& host);

// Planarity by incremental face embedding over biconnected blocks.
bool is_planar(const Graph& g);

// K_3 minor with one branch set through each of three distinct roots.
// Present iff no single vertex v puts the roots other than v into distinct
// components of host - v.
bool rooted_k3_minor(const Graph& host, const RootedTriple& roots);

// Reference minor test: closure of the host under single vertex deletions,
// edge deletions and edge contractions, deduplicated up to isomorphism.
// Hosts of at most 9 vertices.
bool minor_oracle_bruteforce(const Graph& host, const Graph& pattern);

// Recursively split along clique separators of size <= t; the separator is
// kept in every piece. A (t+1)-connected pattern is a minor of the host iff
// it is a minor of some piece.
std::vector<Graph> clique_separator_reduce(const Graph& host, int t);

}  // namespace pmk
