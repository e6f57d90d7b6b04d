#pragma once

#include <cstdint>
#include <string>

#include "pmk/graph.hpp"

namespace pmk {

// Exact isomorphism utilities for small graphs (n <= 12), by pruned search
// over vertex orderings for the minimal adjacency bit string.

// Canonical key: equal strings iff isomorphic graphs.
std::string canonical_form(const Graph& g);

// Order of the automorphism group, from the same ordering search.
uint64_t automorphism_count(const Graph& g);

// Reference |Aut| by checking every permutation (n <= 10); for audits.
uint64_t automorphism_count_naive(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace pmk
