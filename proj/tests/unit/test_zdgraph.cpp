#include <doctest.h>

#include <numeric>

#include "zdg/errors.hpp"
#include "zdg/zdgraph.hpp"

using namespace zdg;

namespace {

std::vector<std::uint64_t> values(const std::vector<Residue>& rs) {
  std::vector<std::uint64_t> out;
  for (const auto& r : rs) out.push_back(r.value);
  return out;
}

}  // namespace

TEST_CASE("zero divisors of small moduli") {
  CHECK(values(zero_divisors(15)) == std::vector<std::uint64_t>{3, 5, 6, 9, 10, 12});
  CHECK(zero_divisors(7).empty());
  CHECK(zero_divisors(2).empty());
  CHECK(values(zero_divisors(9)) == std::vector<std::uint64_t>{3, 6});

  const auto z91 = zero_divisors(91);
  CHECK(z91.size() == 18);
  for (const auto& r : z91) {
    CHECK(r.modulus == 91);
    CHECK((r.value % 7 == 0 || r.value % 13 == 0));
  }
  CHECK_THROWS_AS(zero_divisors(1), BadInput);
}

TEST_CASE("gcd and product characterizations agree for n <= 500") {
  for (std::uint64_t n = 2; n <= 500; ++n) {
    CAPTURE(n);
    CHECK(zero_divisors(n) == zero_divisors_by_product(n));
  }
}

TEST_CASE("build_gamma edges are exactly the zero products") {
  for (std::uint64_t n : {4u, 8u, 9u, 12u, 15u, 16u, 30u, 36u, 91u}) {
    CAPTURE(n);
    const LabeledGraph g = build_gamma(n);
    const auto zd = zero_divisors_by_product(n);
    REQUIRE(g.vertex_count() == zd.size());
    std::size_t degree_sum = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      CHECK(std::get<RingTag>(g.tags[u]).residue == zd[u].value);
      CHECK_FALSE(g.graph.adjacent(u, u));
      degree_sum += g.graph.degree(u);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const bool zero = u != v && (zd[u].value * zd[v].value) % n == 0;
        CHECK(g.graph.adjacent(u, v) == zero);
        CHECK(g.graph.adjacent(u, v) == g.graph.adjacent(v, u));
      }
    }
    CHECK(degree_sum == 2 * g.graph.edge_count());
  }
}

TEST_CASE("gamma of a prime modulus is empty") {
  CHECK_THROWS_AS(build_gamma(7), EmptyGraph);
  CHECK_THROWS_AS(build_gamma(13), EmptyGraph);
  CHECK_THROWS_AS(build_gamma(1), BadInput);
}

TEST_CASE("worked counts") {
  const LabeledGraph g15 = build_gamma(15);
  CHECK(g15.vertex_count() == 6);
  CHECK(g15.graph.edge_count() == 8);
  const LabeledGraph g91 = build_gamma(91);
  CHECK(g91.vertex_count() == 18);
  CHECK(g91.graph.edge_count() == 72);
  const LabeledGraph g9 = build_gamma(9);
  CHECK(g9.vertex_count() == 2);
  CHECK(g9.graph.edge_count() == 1);
  CHECK(g9.label(0) == "3");
  CHECK(g9.label(1) == "6");
}

TEST_CASE("complete bipartite recognition") {
  using Sides = std::pair<std::size_t, std::size_t>;
  CHECK(is_complete_bipartite(build_gamma(15).graph) == Sides{2, 4});
  CHECK(is_complete_bipartite(path_graph(3)) == Sides{1, 2});
  CHECK_FALSE(is_complete_bipartite(cycle_graph(5)).has_value());
  CHECK(is_complete_bipartite(cycle_graph(4)) == Sides{2, 2});
  CHECK_FALSE(is_complete_bipartite(cycle_graph(6)).has_value());
  CHECK_FALSE(is_complete_bipartite(path_graph(4)).has_value());
  CHECK(is_complete_bipartite(star_graph(5)) == Sides{1, 5});
}

TEST_CASE("gamma of pq is K_{p-1,q-1} for every odd prime pair with pq <= 2000") {
  std::size_t checked = 0;
  for (std::uint64_t p = 3; p * p < 2000; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t q = p + 2; p * q <= 2000; q += 2) {
      if (!is_prime(q)) continue;
      CAPTURE(p);
      CAPTURE(q);
      const LabeledGraph g = build_gamma(p * q);
      using Sides = std::pair<std::size_t, std::size_t>;
      CHECK(is_complete_bipartite(g.graph) == Sides{p - 1, q - 1});
      CHECK(g.graph.edge_count() == (p - 1) * (q - 1));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  using PQ = std::pair<std::uint64_t, std::uint64_t>;
  CHECK(split_distinct_odd_primes(91) == PQ{7, 13});
  CHECK(split_distinct_odd_primes(15) == PQ{3, 5});
  CHECK_FALSE(split_distinct_odd_primes(45).has_value());
  CHECK_FALSE(split_distinct_odd_primes(10).has_value());
  CHECK_FALSE(split_distinct_odd_primes(49).has_value());
  CHECK_FALSE(split_distinct_odd_primes(105).has_value());
  CHECK_NOTHROW(require_odd_prime_pair(3, 5));
  CHECK_THROWS_AS(require_odd_prime_pair(5, 3), BadInput);
  CHECK_THROWS_AS(require_odd_prime_pair(2, 5), BadInput);
  CHECK_THROWS_AS(require_odd_prime_pair(3, 9), BadInput);
  CHECK_THROWS_AS(require_odd_prime_pair(5, 5), BadInput);
}
