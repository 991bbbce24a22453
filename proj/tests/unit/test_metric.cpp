#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "z91_tables.hpp"
#include "zdg/errors.hpp"
#include "zdg/kernels.hpp"
#include "zdg/metric.hpp"
#include "zdg/papersets.hpp"
#include "zdg/subdivision.hpp"
#include "zdg/zdgraph.hpp"

using namespace zdg;

namespace {

LandmarkSet by_labels(const PqGraph& g, std::initializer_list<const char*> labels) {
  std::vector<VertexId> ids;
  for (const char* l : labels) ids.push_back(*g.graph.find_label(l));
  return LandmarkSet(std::move(ids));
}

LandmarkSet z91_e(const PqGraph& g) {
  std::vector<VertexId> ids;
  for (const char* l : testing::kZ91Landmarks) ids.push_back(*g.graph.find_label(l));
  return LandmarkSet(std::move(ids));
}

std::vector<VertexId> random_subset(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution take(0.35);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (take(rng)) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("distances agree with Floyd-Warshall and are thread-count independent") {
  const auto corpus = testing::random_corpus(60, 1, 14, 11);
  for (const Graph& g : corpus) {
    const auto ref = testing::floyd_warshall(g);
    const DistanceMatrix d1 = all_pairs_distances(g, 1);
    const DistanceMatrix d3 = all_pairs_distances(g, 3);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        CHECK(d1.at(u, v) == ref[u][v]);
        CHECK(d3.at(u, v) == d1.at(u, v));
      }
    }
  }
}

TEST_CASE("disconnected pairs carry the vertex-count sentinel") {
  const Graph g = Graph::from_edges(4, EdgeList{{0, 1}, {2, 3}});
  const DistanceMatrix d = all_pairs_distances(g);
  CHECK(d.unreachable() == 4);
  CHECK(d.at(0, 2) == 4);
  CHECK(d.at(0, 1) == 1);
  CHECK_FALSE(d.connected());
  CHECK(d.diameter() == 1);
}

TEST_CASE("distance matrix basics") {
  const DistanceMatrix d15 = all_pairs_distances(barycentric_subdivision(build_gamma(15)).graph);
  CHECK(d15.diameter() == 4);
  for (VertexId v = 0; v < d15.vertex_count(); ++v) {
    CHECK(d15.at(v, v) == 0);
    for (VertexId u = 0; u < d15.vertex_count(); ++u) CHECK(d15.at(u, v) == d15.at(v, u));
  }
  CHECK_THROWS_AS(DistanceMatrix(3, std::vector<Distance>(8)), std::invalid_argument);
}

TEST_CASE("closed neighborhoods") {
  CHECK(closed_neighborhood(Graph(1), 0) == std::vector<VertexId>{0});
  CHECK(closed_neighborhood(path_graph(3), 1) == std::vector<VertexId>{0, 1, 2});
  const PqGraph g = build_pq_graph(3, 5);
  const VertexId r1 = g.partition.r(1);
  const auto nbhd = closed_neighborhood(g.graph.graph, r1);
  CHECK(nbhd.size() == 3);
  CHECK(std::count(nbhd.begin(), nbhd.end(), r1) == 1);
  CHECK(std::count(nbhd.begin(), nbhd.end(), g.partition.t(1, 1)) == 1);
  CHECK(std::count(nbhd.begin(), nbhd.end(), g.partition.s(1, 1)) == 1);
}

TEST_CASE("resolving predicates on the worked example") {
  const PqGraph g = build_pq_graph(7, 13);
  const DistanceMatrix d = all_pairs_distances(g.graph.graph);
  const auto& part = g.partition;
  CHECK(d.at(part.r(1), part.u(1)) == 2);
  CHECK_FALSE(resolves(part.r(1), part.u(1), part.u(2), d));
  CHECK(resolves(part.t(1, 2), part.u(1), part.u(2), d));
  CHECK(resolves(part.u(1), part.u(1), part.u(2), d));
  CHECK_THROWS_AS(resolves(part.r(1), part.u(1), part.u(1), d), SamePair);

  const LandmarkSet e = z91_e(g);
  CHECK(is_resolving(e, d));
  CHECK(is_ft_resolving(e, d));
  CHECK(is_ft_resolving_by_multiplicity(e, d));
  CHECK(resolving_multiplicity(e, part.r(2), part.r(3), d) == 2);
  CHECK(resolving_multiplicity(LandmarkSet{}, part.r(2), part.r(3), d) == 0);
  CHECK(resolving_multiplicity(LandmarkSet{part.r(2)}, part.r(2), part.u(3), d) == 1);
  CHECK_THROWS_AS(resolving_multiplicity(e, 0, 0, d), SamePair);
  for (VertexId w : e.vertices()) CHECK(is_resolving(e.without(w), d));
}

TEST_CASE("metric codes on the worked example") {
  const PqGraph g = build_pq_graph(7, 13);
  const DistanceMatrix d = all_pairs_distances(g.graph.graph);
  const LandmarkSet e = z91_e(g);
  using Code = std::vector<Distance>;
  CHECK(metric_code(g.partition.r(1), e, d).entries == Code{0, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2});
  CHECK(metric_code(g.partition.s(3, 1), e, d).entries == Code{1, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 2, 1});
  // The printed u1 row ends in 3; d(u1, u6) is 4.
  CHECK(metric_code(g.partition.u(1), e, d).entries == Code{2, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3, 3, 4});
  CHECK(d.at(g.partition.u(1), g.partition.u(6)) == 4);
  const auto code = metric_code(g.partition.u(6), e, d);
  CHECK(code.entries == Code{2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 1, 0});
  CHECK(code.landmarks == std::vector<VertexId>(e.vertices().begin(), e.vertices().end()));
}

TEST_CASE("golden tables of the worked example") {
  const PqGraph g = build_pq_graph(7, 13);
  const DistanceMatrix d = all_pairs_distances(g.graph.graph);
  const LandmarkSet e = z91_e(g);
  // The E construction and the transcribed landmark header agree.
  CHECK(build_e_set(TheoremCase::QEq2pMinus1, 7, 13, g.partition) == e);
  const CodeTable table(e, d);

  std::vector<std::string> mismatched;
  for (const auto& row : testing::kZ91Rows) {
    const auto v = g.graph.find_label(row.position);
    REQUIRE(v.has_value());
    const auto computed = table.row(*v);
    if (!std::equal(computed.begin(), computed.end(), row.code.begin())) {
      mismatched.emplace_back(row.position);
    }
  }
  const std::vector<std::string> errata(testing::kZ91Unrealizable.begin(),
                                        testing::kZ91Unrealizable.end());
  std::vector<std::string> expected = errata;
  std::sort(expected.begin(), expected.end());
  std::sort(mismatched.begin(), mismatched.end());
  CHECK(mismatched == expected);

  // Each mismatched row is a code no vertex has, not a relabeling.
  for (const auto& row : testing::kZ91Rows) {
    if (std::find(errata.begin(), errata.end(), row.position) == errata.end()) continue;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      const auto computed = table.row(v);
      CHECK_FALSE(std::equal(computed.begin(), computed.end(), row.code.begin()));
    }
  }
}

TEST_CASE("trivial resolving cases") {
  const DistanceMatrix d15 = all_pairs_distances(barycentric_subdivision(build_gamma(15)).graph);
  std::vector<VertexId> all(d15.vertex_count());
  std::iota(all.begin(), all.end(), VertexId{0});
  CHECK(is_resolving(LandmarkSet(all), d15));
  CHECK(is_ft_resolving(LandmarkSet(all), d15));
  for (VertexId v = 0; v < d15.vertex_count(); ++v) {
    CHECK_FALSE(is_resolving(LandmarkSet{v}, d15));
    CHECK_FALSE(is_ft_resolving(LandmarkSet{v}, d15));
  }
  CHECK_FALSE(is_ft_resolving(LandmarkSet{}, d15));
  CHECK(is_ft_resolving(LandmarkSet{}, all_pairs_distances(Graph(1))));
  CHECK(min_resolving_multiplicity(LandmarkSet{}, all_pairs_distances(Graph(1))) == SIZE_MAX);
  CHECK_THROWS_AS(LandmarkSet({1, 2, 1}), std::invalid_argument);
}

TEST_CASE("code entries stay within the diameter and contain 0 exactly for members") {
  const PqGraph g = build_pq_graph(5, 7);
  const DistanceMatrix d = all_pairs_distances(g.graph.graph);
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const LandmarkSet w(random_subset(d.vertex_count(), rng));
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      const auto code = metric_code(v, w, d);
      for (Distance x : code.entries) CHECK(x <= d.diameter());
      const bool has_zero = std::find(code.entries.begin(), code.entries.end(), 0) != code.entries.end();
      CHECK(has_zero == w.contains(v));
    }
  }
}

TEST_CASE("fault tolerance: definition, multiplicity and coverage agree on random graphs") {
  const auto corpus = testing::random_corpus(200, 2, 12, 2024);
  std::mt19937_64 rng(99);
  for (const Graph& g : corpus) {
    const DistanceMatrix d = all_pairs_distances(g);
    const PairCoverage cov = pair_coverage(d);
    const auto ref = testing::floyd_warshall(g);
    for (int rep = 0; rep < 3; ++rep) {
      const auto members = random_subset(g.vertex_count(), rng);
      const LandmarkSet w(members);
      const bool ft = is_ft_resolving(w, d);
      CHECK(ft == is_ft_resolving_by_multiplicity(w, d));
      CHECK(ft == cov.covered(w, 2));
      CHECK(ft == testing::oracle_ft_resolving(ref, members));
      const bool res = is_resolving(w, d);
      CHECK(res == cov.covered(w, 1));
      CHECK(res == testing::oracle_resolving(ref, members));
    }
  }
}

TEST_CASE("resolving and fault tolerance are monotone") {
  const auto corpus = testing::random_corpus(80, 3, 12, 77);
  std::mt19937_64 rng(3);
  for (const Graph& g : corpus) {
    const DistanceMatrix d = all_pairs_distances(g);
    auto small = random_subset(g.vertex_count(), rng);
    auto big = small;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (std::find(big.begin(), big.end(), v) == big.end() && rng() % 2) big.push_back(v);
    }
    if (is_resolving(LandmarkSet(small), d)) CHECK(is_resolving(LandmarkSet(big), d));
    if (is_ft_resolving(LandmarkSet(small), d)) CHECK(is_ft_resolving(LandmarkSet(big), d));
  }
}

TEST_CASE("pair coverage layout and contents") {
  const Graph g = barycentric_subdivision(build_gamma(15)).graph;
  const DistanceMatrix d = all_pairs_distances(g);
  const PairCoverage cov = pair_coverage(d);
  const PairCoverage cov4 = pair_coverage(d, 4);
  CHECK(cov.pair_count() == 14 * 13 / 2);
  for (std::size_t i = 0; i < cov.pair_count(); ++i) {
    const auto [x, y] = cov.pair(i);
    CHECK(x < y);
    CHECK(cov.index_of(x, y) == i);
    CHECK(cov.index_of(y, x) == i);
    CHECK(cov.resolved_by(i, x));
    CHECK(cov.resolved_by(i, y));
    CHECK(cov.resolver_count(i) >= 2);
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      CHECK(cov.resolved_by(i, w) == resolves(w, x, y, d));
      CHECK(cov4.resolved_by(i, w) == cov.resolved_by(i, w));
    }
  }
  CHECK_THROWS_AS(cov.index_of(3, 3), SamePair);
}

TEST_CASE("twins are resolved only by themselves") {
  // Leaves of a star are pairwise twins.
  const DistanceMatrix d = all_pairs_distances(star_graph(4));
  const PairCoverage cov = pair_coverage(d);
  const std::size_t i = cov.index_of(1, 2);
  CHECK(cov.resolver_count(i) == 2);
  CHECK(cov.resolved_by(i, 1));
  CHECK(cov.resolved_by(i, 2));
  CHECK(pair_coverage(all_pairs_distances(Graph(1))).pair_count() == 0);
}

TEST_CASE("kernel choice does not change coverage or multiplicities") {
  const PqGraph g = build_pq_graph(5, 7);
  const DistanceMatrix d = all_pairs_distances(g.graph.graph);
  kernels::set_kernel_isa(kernels::Isa::Scalar);
  const PairCoverage scalar = pair_coverage(d);
  const LandmarkSet e = build_e_set(TheoremCase::QEq2pMinus3, 5, 7, g.partition);
  const std::size_t m_scalar = min_resolving_multiplicity(e, d);
  kernels::reset_kernel_isa();
  const PairCoverage fast = pair_coverage(d);
  CHECK(m_scalar == min_resolving_multiplicity(e, d));
  for (std::size_t i = 0; i < scalar.pair_count(); ++i) {
    const auto a = scalar.resolvers(i);
    const auto b = fast.resolvers(i);
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
  }
}

TEST_CASE("distinct A-vertices look the same from every common non-neighbor") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 5}, {3, 7}, {5, 7}, {7, 13}}) {
    const PqGraph g = build_pq_graph(p, q);
    const DistanceMatrix d = all_pairs_distances(g.graph.graph);
    std::size_t violations = 0;
    std::size_t checks = 0;
    for (int i = 1; i < q; ++i) {
      for (int j = 1; j < q; ++j) {
        if (i == j) continue;
        const VertexId ri = g.partition.r(i);
        const VertexId rj = g.partition.r(j);
        for (VertexId x = 0; x < d.vertex_count(); ++x) {
          if (x == ri || x == rj || d.at(ri, x) == 1 || d.at(rj, x) == 1) continue;
          ++checks;
          violations += d.at(ri, x) != d.at(rj, x);
        }
      }
    }
    CAPTURE(p);
    CAPTURE(q);
    CHECK(checks > 0);
    CHECK(violations == 0);
  }
}

TEST_CASE("landmark families at a glance") {
  const PqGraph g = build_pq_graph(3, 5);
  const DistanceMatrix d = all_pairs_distances(g.graph.graph);
  CHECK(is_ft_resolving(by_labels(g, {"r1", "t1_2", "t1_3", "s1_4", "u2"}), d));
  CHECK_FALSE(is_ft_resolving(by_labels(g, {"r1", "t1_2", "t1_3", "s1_4"}), d));
}
