#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;
  auto operator<=>(const Residue&) const = default;
};

// Nonzero zero-divisors of Z_n in ascending order, via gcd(a, n) > 1.
std::vector<Residue> zero_divisors(std::uint64_t n);

// Same set found by searching for a nonzero b with a*b = 0 (mod n). Quadratic;
// kept as the reference the gcd route is checked against.
std::vector<Residue> zero_divisors_by_product(std::uint64_t n);

// Γ(Z_n): vertices are zero_divisors(n) in ascending residue order, tagged
// Ring; {a, b} is an edge iff a != b and a*b = 0 (mod n).
// Throws EmptyGraph when Z_n has no zero-divisors (n prime) and BadInput for n < 2.
LabeledGraph build_gamma(std::uint64_t n);

// Side sizes (smaller first) when g is a connected complete bipartite graph
// on at least two vertices.
std::optional<std::pair<std::size_t, std::size_t>> is_complete_bipartite(const Graph& g);

bool is_prime(std::uint64_t n);

// (p, q) with p < q when n is a product of two distinct odd primes.
std::optional<std::pair<std::uint64_t, std::uint64_t>> split_distinct_odd_primes(std::uint64_t n);

// Throws BadInput unless p and q are odd primes with p < q.
void require_odd_prime_pair(std::int64_t p, std::int64_t q);

}  // namespace zdg
