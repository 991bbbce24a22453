#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "zdg/graph.hpp"
#include "zdg/metric.hpp"

namespace zdg {

// Exact minimum set k-multicover over vertex pairs: choose the fewest vertices
// so every pair is resolved by at least k of them. k = 1 is the metric
// dimension, k = 2 the fault-tolerant metric dimension.

struct SearchLimits {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;

  static SearchLimits none() { return {}; }
};

enum class SolveStatus { Exact, BoundsOnly, Timeout };
std::string_view to_string(SolveStatus status);

enum class SearchStrategy {
  // Depth-first search pruned against the incumbent.
  BranchAndBound,
  // Feasibility searches for target sizes lower_bound, lower_bound + 1, ...;
  // every failed size is a certificate that no smaller set exists.
  IterativeDeepening,
};

struct SolveOptions {
  SearchLimits limits;
  SearchStrategy strategy = SearchStrategy::BranchAndBound;
  unsigned threads = 1;
  // Replace the witness by the lexicographically smallest optimal set.
  bool canonical_witness = true;
  // Exact metric dimension of the same graph, if already known; k = 2 uses
  // it as the bound fdim >= dim + 1.
  std::optional<std::size_t> known_dim;
};

struct SolveReport {
  int k = 1;
  std::optional<std::size_t> optimum;   // set iff status == Exact
  std::optional<LandmarkSet> witness;   // ascending; set iff status == Exact
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  std::uint64_t nodes = 0;
  std::chrono::microseconds elapsed{0};
  SolveStatus status = SolveStatus::BoundsOnly;
  bool witness_lex_min = false;
  std::size_t forced = 0;          // vertices committed before search
  std::size_t reduced_pairs = 0;   // pairs left after dominance reduction
};

// Classical greedy: repeatedly take the vertex that helps the most unsatisfied
// pairs (smallest id on ties), then drop members that became redundant.
// `candidates` restricts the pool. Throws Infeasible when some pair has fewer
// than k resolvers in the pool.
LandmarkSet greedy_multicover(const PairCoverage& coverage, int k,
                              std::optional<std::span<const VertexId>> candidates = std::nullopt);

// Largest of: vertices forced by pairs with exactly k resolvers; known_dim + 1
// for k = 2; k times the size of a greedy packing of pairs with pairwise
// disjoint resolver sets; the twin-class count (m - 1 per class of m mutual
// twins for k = 1, m for k = 2).
std::size_t lower_bound_multicover(const PairCoverage& coverage, int k,
                                   std::optional<std::size_t> known_dim = std::nullopt);

SolveReport solve_min_multicover(const PairCoverage& coverage, int k,
                                 const SolveOptions& options = {});
SolveReport solve_min_multicover(const PairCoverage& coverage, int k, const SearchLimits& limits);

SolveReport dim(const LabeledGraph& g, const SolveOptions& options = {});
SolveReport fdim(const LabeledGraph& g, const SolveOptions& options = {});
SolveReport dim(const Graph& g, const SolveOptions& options = {});
SolveReport fdim(const Graph& g, const SolveOptions& options = {});

}  // namespace zdg
