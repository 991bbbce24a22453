#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "zdg/graph.hpp"

// Reference implementations that share no code with the library: distances by
// Floyd-Warshall, predicates straight from the definitions, optima by
// enumerating subsets in ascending size.
namespace zdg::testing {

using Dist = std::vector<std::vector<int>>;

// Unreachable pairs hold the vertex count, matching the library sentinel.
Dist floyd_warshall(const Graph& g);

// Pairwise distinct codes.
bool oracle_resolving(const Dist& d, const std::vector<VertexId>& w);
// W minus any one member still resolving.
bool oracle_ft_resolving(const Dist& d, const std::vector<VertexId>& w);

struct OracleResult {
  std::size_t optimum = 0;
  std::vector<VertexId> lex_min;  // lexicographically smallest optimal set
  std::uint64_t optimal_sets = 0;
};

// Smallest set whose codes are distinct (k = 1) or fault tolerant (k = 2),
// found with the definitional predicates. Intended for graphs of at most
// ~12 vertices.
OracleResult brute_force_optimum(const Graph& g, int k);

// Same optimum by enumerating bitmask subsets of size 0, 1, ... and checking
// every pair is told apart at least k times. Handles up to 63 vertices; fast
// enough for C(34, 7). `max_size` aborts the search (nullopt) when exceeded.
std::optional<OracleResult> exhaustive_optimum(const Graph& g, int k,
                                               std::optional<std::size_t> max_size = std::nullopt);

// Every resolving set of the given size, each ascending, in lexicographic order.
std::vector<std::vector<VertexId>> oracle_resolving_sets(const Graph& g, std::size_t size);

bool is_path(const Graph& g);

// Connected graph on n vertices: a random labelled tree plus each remaining
// edge with probability `density`.
Graph random_connected_graph(std::size_t n, double density, std::mt19937_64& rng);

// Seeded corpus of connected graphs with vertex counts in [min_n, max_n].
std::vector<Graph> random_corpus(std::size_t count, std::size_t min_n, std::size_t max_n,
                                 std::uint64_t seed);

}  // namespace zdg::testing
