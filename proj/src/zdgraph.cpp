#include "zdg/zdgraph.hpp"

#include <numeric>
#include <queue>
#include <string>

#include "zdg/errors.hpp"

namespace zdg {
namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

void check_modulus(std::uint64_t n) {
  if (n < 2) throw BadInput("modulus must be at least 2, got " + std::to_string(n));
  if (n > kMaxModulus) throw BadInput("modulus too large: " + std::to_string(n));
}

}  // namespace

std::vector<Residue> zero_divisors(std::uint64_t n) {
  check_modulus(n);
  std::vector<Residue> out;
  for (std::uint64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) > 1) out.push_back({a, n});
  }
  return out;
}

std::vector<Residue> zero_divisors_by_product(std::uint64_t n) {
  check_modulus(n);
  std::vector<Residue> out;
  for (std::uint64_t a = 1; a < n; ++a) {
    for (std::uint64_t b = 1; b < n; ++b) {
      if ((a * b) % n == 0) {
        out.push_back({a, n});
        break;
      }
    }
  }
  return out;
}

LabeledGraph build_gamma(std::uint64_t n) {
  const auto zd = zero_divisors(n);
  if (zd.empty()) throw EmptyGraph("Z_" + std::to_string(n) + " has no nonzero zero-divisors");
  EdgeList edges;
  for (VertexId i = 0; i < zd.size(); ++i) {
    for (VertexId j = i + 1; j < zd.size(); ++j) {
      if ((zd[i].value * zd[j].value) % n == 0) edges.emplace_back(i, j);
    }
  }
  std::vector<VertexTag> tags;
  tags.reserve(zd.size());
  for (const auto& r : zd) tags.emplace_back(RingTag{r.value});
  return LabeledGraph(Graph::from_edges(zd.size(), edges), std::move(tags));
}

std::optional<std::pair<std::size_t, std::size_t>> is_complete_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return std::nullopt;
  std::vector<int> side(n, -1);
  std::queue<VertexId> frontier;
  side[0] = 0;
  frontier.push(0);
  std::size_t counts[2] = {1, 0};
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    for (VertexId v : g.neighbors(u)) {
      if (side[v] == -1) {
        side[v] = 1 - side[u];
        ++counts[side[v]];
        frontier.push(v);
      } else if (side[v] == side[u]) {
        return std::nullopt;
      }
    }
  }
  if (counts[0] + counts[1] != n) return std::nullopt;  // disconnected
  if (g.edge_count() != counts[0] * counts[1]) return std::nullopt;
  return std::make_pair(std::min(counts[0], counts[1]), std::max(counts[0], counts[1]));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> split_distinct_odd_primes(std::uint64_t n) {
  if (n < 15 || n % 2 == 0) return std::nullopt;
  for (std::uint64_t p = 3; p * p < n; p += 2) {
    if (n % p != 0) continue;
    const std::uint64_t q = n / p;
    if (is_prime(p) && is_prime(q) && p != q) return std::make_pair(p, q);
    return std::nullopt;
  }
  return std::nullopt;
}

void require_odd_prime_pair(std::int64_t p, std::int64_t q) {
  const auto odd_prime = [](std::int64_t x) {
    return x > 2 && is_prime(static_cast<std::uint64_t>(x));
  };
  if (!odd_prime(p) || !odd_prime(q)) {
    throw BadInput("p and q must be odd primes, got (" + std::to_string(p) + ", " +
                   std::to_string(q) + ")");
  }
  if (p >= q) {
    throw BadInput("expected p < q, got (" + std::to_string(p) + ", " + std::to_string(q) + ")");
  }
}

}  // namespace zdg
