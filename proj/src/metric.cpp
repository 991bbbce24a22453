#include "zdg/metric.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "zdg/errors.hpp"
#include "zdg/kernels.hpp"

namespace zdg {
namespace {

// Runs body(t) for t in [0, workers) and joins.
template <typename Body>
void run_workers(unsigned workers, Body body) {
  if (workers <= 1) {
    body(0u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back([&body, t] { body(t); });
}

void check_pair(VertexId x, VertexId y) {
  if (x == y) throw SamePair("pair (" + std::to_string(x) + ", " + std::to_string(x) + ") is not a pair of distinct vertices");
}

// Sorts vertex ids by code, ignoring column `skip` (pass width to skip none),
// and reports whether any two codes coincide.
bool has_duplicate_codes(const CodeTable& table, std::size_t skip) {
  const std::size_t n = table.vertex_count();
  if (n < 2) return false;
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  const auto less = [&](VertexId a, VertexId b) {
    const auto ra = table.row(a);
    const auto rb = table.row(b);
    for (std::size_t c = 0; c < ra.size(); ++c) {
      if (c == skip || ra[c] == rb[c]) continue;
      return ra[c] < rb[c];
    }
    return false;
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < n; ++i) {
    if (!less(order[i - 1], order[i])) return true;
  }
  return false;
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Distance> data)
    : n_(n), data_(std::move(data)) {
  if (data_.size() != n_ * n_) throw std::invalid_argument("distance matrix has wrong size");
}

Distance DistanceMatrix::diameter() const {
  Distance best = 0;
  for (Distance x : data_) {
    if (x != unreachable()) best = std::max(best, x);
  }
  return best;
}

bool DistanceMatrix::connected() const {
  return std::find(data_.begin(), data_.end(), unreachable()) == data_.end();
}

DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads) {
  const std::size_t n = g.vertex_count();
  if (n >= std::numeric_limits<Distance>::max()) {
    throw BadInput("graph too large for 16-bit distances: " + std::to_string(n) + " vertices");
  }
  const auto unreachable = static_cast<Distance>(n);
  std::vector<Distance> data(n * n, unreachable);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  run_workers(workers, [&](unsigned t) {
    std::vector<VertexId> queue(n);
    for (std::size_t s = t; s < n; s += workers) {
      Distance* row = data.data() + s * n;
      std::size_t head = 0;
      std::size_t tail = 0;
      row[s] = 0;
      queue[tail++] = static_cast<VertexId>(s);
      while (head < tail) {
        const VertexId u = queue[head++];
        for (VertexId v : g.neighbors(u)) {
          if (row[v] == unreachable) {
            row[v] = static_cast<Distance>(row[u] + 1);
            queue[tail++] = v;
          }
        }
      }
    }
  });
  return DistanceMatrix(n, std::move(data));
}

std::vector<VertexId> closed_neighborhood(const Graph& g, VertexId v) {
  const auto nbrs = g.neighbors(v);
  std::vector<VertexId> out(nbrs.begin(), nbrs.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

LandmarkSet::LandmarkSet(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::vector<VertexId> copy = vertices_;
  std::sort(copy.begin(), copy.end());
  if (std::adjacent_find(copy.begin(), copy.end()) != copy.end()) {
    throw std::invalid_argument("landmark set repeats a vertex");
  }
}

bool LandmarkSet::contains(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

LandmarkSet LandmarkSet::without(VertexId v) const {
  std::vector<VertexId> rest;
  rest.reserve(vertices_.size());
  for (VertexId w : vertices_) {
    if (w != v) rest.push_back(w);
  }
  return LandmarkSet(std::move(rest));
}

LandmarkSet LandmarkSet::sorted() const {
  std::vector<VertexId> copy = vertices_;
  std::sort(copy.begin(), copy.end());
  return LandmarkSet(std::move(copy));
}

MetricCode metric_code(VertexId v, const LandmarkSet& landmarks, const DistanceMatrix& d) {
  MetricCode code;
  code.landmarks.assign(landmarks.vertices().begin(), landmarks.vertices().end());
  code.entries.reserve(landmarks.size());
  for (VertexId w : landmarks.vertices()) code.entries.push_back(d.at(v, w));
  return code;
}

CodeTable::CodeTable(const LandmarkSet& landmarks, const DistanceMatrix& d)
    : n_(d.vertex_count()), width_(landmarks.size()), data_(n_ * width_) {
  for (std::size_t k = 0; k < width_; ++k) {
    const VertexId w = landmarks[k];
    if (w >= n_) throw std::out_of_range("landmark " + std::to_string(w) + " out of range");
    const auto dist = d.row(w);  // d(w, v) == d(v, w)
    for (std::size_t v = 0; v < n_; ++v) data_[v * width_ + k] = dist[v];
  }
}

bool resolves(VertexId w, VertexId x, VertexId y, const DistanceMatrix& d) {
  check_pair(x, y);
  return d.at(w, x) != d.at(w, y);
}

bool is_resolving(const LandmarkSet& landmarks, const DistanceMatrix& d) {
  const CodeTable table(landmarks, d);
  return !has_duplicate_codes(table, table.width());
}

std::size_t resolving_multiplicity(const LandmarkSet& landmarks, VertexId x, VertexId y,
                                   const DistanceMatrix& d) {
  check_pair(x, y);
  std::size_t count = 0;
  for (VertexId w : landmarks.vertices()) count += d.at(w, x) != d.at(w, y);
  return count;
}

std::size_t min_resolving_multiplicity(const LandmarkSet& landmarks, const DistanceMatrix& d) {
  const CodeTable table(landmarks, d);
  const auto& k = kernels::active();
  const std::size_t n = table.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (VertexId x = 0; x < n; ++x) {
    const auto rx = table.row(x);
    for (VertexId y = x + 1; y < n; ++y) {
      best = std::min(best, k.mismatch_count(rx.data(), table.row(y).data(), table.width()));
      if (best == 0) return 0;
    }
  }
  return best;
}

bool is_ft_resolving(const LandmarkSet& landmarks, const DistanceMatrix& d) {
  if (landmarks.empty()) return d.vertex_count() < 2;
  const CodeTable table(landmarks, d);
  for (std::size_t c = 0; c < table.width(); ++c) {
    if (has_duplicate_codes(table, c)) return false;
  }
  return true;
}

bool is_ft_resolving_by_multiplicity(const LandmarkSet& landmarks, const DistanceMatrix& d) {
  return min_resolving_multiplicity(landmarks, d) >= 2;
}

PairCoverage::PairCoverage(std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs,
                           std::vector<std::uint64_t> bits)
    : n_(n), words_(kernels::words_for(n)), pairs_(std::move(pairs)), bits_(std::move(bits)) {
  if (bits_.size() != pairs_.size() * words_) {
    throw std::invalid_argument("pair coverage bit storage has wrong size");
  }
}

std::size_t PairCoverage::resolver_count(std::size_t i) const {
  std::size_t c = 0;
  for (std::uint64_t w : resolvers(i)) c += std::popcount(w);
  return c;
}

std::size_t PairCoverage::index_of(VertexId x, VertexId y) const {
  check_pair(x, y);
  if (x > y) std::swap(x, y);
  return static_cast<std::size_t>(x) * n_ - static_cast<std::size_t>(x) * (x + 1) / 2 + (y - x - 1);
}

bool PairCoverage::covered(const LandmarkSet& landmarks, std::size_t k) const {
  const auto mask = to_bitset(landmarks.vertices(), n_);
  const auto& kt = kernels::active();
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (kt.and_popcount(resolvers(i).data(), mask.data(), words_) < k) return false;
  }
  return true;
}

PairCoverage pair_coverage(const DistanceMatrix& d, unsigned threads) {
  const std::size_t n = d.vertex_count();
  const std::size_t words = kernels::words_for(n);
  const std::size_t pair_count = n < 2 ? 0 : n * (n - 1) / 2;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(pair_count);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  }
  std::vector<std::uint64_t> bits(pair_count * words, 0);
  const auto& k = kernels::active();
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  run_workers(workers, [&](unsigned t) {
    for (std::size_t x = t; x < n; x += workers) {
      const std::size_t base = x * n - x * (x + 1) / 2;
      const auto rx = d.row(static_cast<VertexId>(x));
      for (std::size_t y = x + 1; y < n; ++y) {
        k.diff_mask(rx.data(), d.row(static_cast<VertexId>(y)).data(), n,
                    bits.data() + (base + y - x - 1) * words);
      }
    }
  });
  return PairCoverage(n, std::move(pairs), std::move(bits));
}

std::vector<std::uint64_t> to_bitset(std::span<const VertexId> members, std::size_t n) {
  std::vector<std::uint64_t> bits(kernels::words_for(n), 0);
  for (VertexId v : members) {
    if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    bits[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  return bits;
}

}  // namespace zdg
