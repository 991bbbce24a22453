#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

using Distance = std::uint16_t;

// All-pairs hop distances. Unreachable pairs hold vertex_count(), which is
// larger than any real distance, so codes stay totally ordered.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<Distance> data);

  std::size_t vertex_count() const { return n_; }
  Distance unreachable() const { return static_cast<Distance>(n_); }
  Distance at(VertexId u, VertexId v) const { return data_[u * n_ + v]; }
  std::span<const Distance> row(VertexId u) const { return {data_.data() + u * n_, n_}; }
  // Largest finite distance.
  Distance diameter() const;
  bool connected() const;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

// BFS from every source; `threads` > 1 splits the sources across workers.
// The result does not depend on the thread count.
DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads = 1);

// {v} ∪ N(v), ascending.
std::vector<VertexId> closed_neighborhood(const Graph& g, VertexId v);

// Ordered landmark list without repeats.
class LandmarkSet {
 public:
  LandmarkSet() = default;
  // Throws std::invalid_argument on repeated vertices.
  explicit LandmarkSet(std::vector<VertexId> vertices);
  LandmarkSet(std::initializer_list<VertexId> vertices)
      : LandmarkSet(std::vector<VertexId>(vertices)) {}

  std::span<const VertexId> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  bool contains(VertexId v) const;
  LandmarkSet without(VertexId v) const;
  // Ascending copy; the canonical form used for comparisons between sets.
  LandmarkSet sorted() const;

  bool operator==(const LandmarkSet&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

struct MetricCode {
  std::vector<VertexId> landmarks;
  std::vector<Distance> entries;
};

MetricCode metric_code(VertexId v, const LandmarkSet& landmarks, const DistanceMatrix& d);

// Codes of every vertex, row-major: row v holds d(v, w_1..w_k).
class CodeTable {
 public:
  CodeTable(const LandmarkSet& landmarks, const DistanceMatrix& d);
  std::size_t vertex_count() const { return n_; }
  std::size_t width() const { return width_; }
  std::span<const Distance> row(VertexId v) const { return {data_.data() + v * width_, width_}; }

 private:
  std::size_t n_;
  std::size_t width_;
  std::vector<Distance> data_;
};

// d(w, x) != d(w, y). Throws SamePair when x == y.
bool resolves(VertexId w, VertexId x, VertexId y, const DistanceMatrix& d);

// Every pair of vertices gets distinct codes (exact vector comparison).
bool is_resolving(const LandmarkSet& landmarks, const DistanceMatrix& d);

// |{w in W : d(w, x) != d(w, y)}|. Throws SamePair when x == y.
std::size_t resolving_multiplicity(const LandmarkSet& landmarks, VertexId x, VertexId y,
                                   const DistanceMatrix& d);

// Minimum multiplicity over all vertex pairs; SIZE_MAX on fewer than two vertices.
std::size_t min_resolving_multiplicity(const LandmarkSet& landmarks, const DistanceMatrix& d);

// Fault tolerance by definition: W \ {w} is resolving for every w in W.
// Empty W only qualifies on graphs with fewer than two vertices.
bool is_ft_resolving(const LandmarkSet& landmarks, const DistanceMatrix& d);

// Fault tolerance as "every pair is resolved at least twice". Must agree with
// is_ft_resolving; kept separate so each route checks the other.
bool is_ft_resolving_by_multiplicity(const LandmarkSet& landmarks, const DistanceMatrix& d);

// For every unordered pair x < y, the bitset of vertices resolving it.
// Pairs are stored in lexicographic order.
class PairCoverage {
 public:
  PairCoverage(std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs,
               std::vector<std::uint64_t> bits);

  std::size_t vertex_count() const { return n_; }
  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t words() const { return words_; }
  std::pair<VertexId, VertexId> pair(std::size_t i) const { return pairs_[i]; }
  std::span<const std::uint64_t> resolvers(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::size_t resolver_count(std::size_t i) const;
  bool resolved_by(std::size_t i, VertexId w) const {
    return (bits_[i * words_ + (w >> 6)] >> (w & 63)) & 1;
  }
  // Index of pair (x, y) for x != y in either order.
  std::size_t index_of(VertexId x, VertexId y) const;

  // Every pair meets W at least k times.
  bool covered(const LandmarkSet& landmarks, std::size_t k) const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::pair<VertexId, VertexId>> pairs_;
  std::vector<std::uint64_t> bits_;
};

// Resolver sets come from row differences: w resolves (x, y) iff
// d(x, w) != d(y, w), by symmetry of d.
PairCoverage pair_coverage(const DistanceMatrix& d, unsigned threads = 1);

// Bitset over `n` vertices with the given members set.
std::vector<std::uint64_t> to_bitset(std::span<const VertexId> members, std::size_t n);

}  // namespace zdg
