#include "zdg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "zdg/errors.hpp"
#include "zdg/kernels.hpp"

namespace zdg {
namespace {

using Clock = std::chrono::steady_clock;

// Residual instance after forced vertices are committed and dominated pairs
// are dropped. Pairs are kept in original (lexicographic) order so that the
// first minimum found during selection is the lexicographically smallest pair.
struct Problem {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<VertexId> forced;
  std::vector<std::uint8_t> need;        // residual multiplicity per pair
  std::vector<std::uint64_t> sets;       // residual resolver bitsets, forced removed
  std::vector<std::vector<VertexId>> members;
  std::vector<std::vector<std::uint32_t>> pairs_of;  // per vertex
  std::vector<std::uint32_t> by_size;    // pair order used by the packing bound

  std::size_t pair_count() const { return need.size(); }
  const std::uint64_t* set(std::size_t p) const { return sets.data() + p * words; }
};

std::vector<VertexId> bits_to_members(std::span<const std::uint64_t> bits) {
  std::vector<VertexId> out;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word) {
      out.push_back(static_cast<VertexId>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

Problem build_problem(const PairCoverage& coverage, std::size_t k) {
  const auto& kt = kernels::active();
  Problem prob;
  prob.n = coverage.vertex_count();
  prob.words = coverage.words();
  const std::size_t words = prob.words;

  std::vector<std::uint64_t> forced_bits(words, 0);
  for (std::size_t i = 0; i < coverage.pair_count(); ++i) {
    const std::size_t size = coverage.resolver_count(i);
    if (size < k) {
      const auto [x, y] = coverage.pair(i);
      throw Infeasible("pair (" + std::to_string(x) + ", " + std::to_string(y) + ") has only " +
                       std::to_string(size) + " resolvers, need " + std::to_string(k));
    }
    if (size == k) {
      const auto r = coverage.resolvers(i);
      for (std::size_t w = 0; w < words; ++w) forced_bits[w] |= r[w];
    }
  }
  prob.forced = bits_to_members(forced_bits);

  // Residual pairs: what the forced vertices leave uncovered.
  struct Candidate {
    std::size_t origin;
    std::size_t size;
    std::uint8_t need;
  };
  std::vector<Candidate> residual;
  std::vector<std::uint64_t> residual_bits;
  for (std::size_t i = 0; i < coverage.pair_count(); ++i) {
    const auto r = coverage.resolvers(i);
    const std::size_t hit = kt.and_popcount(r.data(), forced_bits.data(), words);
    if (hit >= k) continue;
    const std::size_t base = residual_bits.size();
    residual_bits.resize(base + words);
    for (std::size_t w = 0; w < words; ++w) residual_bits[base + w] = r[w] & ~forced_bits[w];
    residual.push_back({i, kt.andnot_popcount(r.data(), forced_bits.data(), words),
                        static_cast<std::uint8_t>(k - hit)});
  }

  // Drop pair b when some kept pair a has need_a >= need_b and set_a ⊆ set_b:
  // covering a covers b. Scanning by ascending size means a dominator is
  // always examined before anything it dominates.
  std::vector<std::size_t> order(residual.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (residual[a].size != residual[b].size) return residual[a].size < residual[b].size;
    return residual[a].need > residual[b].need;
  });
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    const std::uint64_t* s = residual_bits.data() + idx * words;
    bool dominated = false;
    for (std::size_t j : kept) {
      if (residual[j].need >= residual[idx].need &&
          kt.is_subset(residual_bits.data() + j * words, s, words)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(idx);
  }
  std::sort(kept.begin(), kept.end(),
            [&](std::size_t a, std::size_t b) { return residual[a].origin < residual[b].origin; });

  prob.pairs_of.assign(prob.n, {});
  for (std::size_t p = 0; p < kept.size(); ++p) {
    const std::size_t idx = kept[p];
    prob.need.push_back(residual[idx].need);
    prob.sets.insert(prob.sets.end(), residual_bits.begin() + idx * words,
                     residual_bits.begin() + (idx + 1) * words);
    prob.members.push_back(bits_to_members({prob.set(p), words}));
    for (VertexId v : prob.members.back()) prob.pairs_of[v].push_back(static_cast<std::uint32_t>(p));
  }
  prob.by_size.resize(kept.size());
  std::iota(prob.by_size.begin(), prob.by_size.end(), std::uint32_t{0});
  std::stable_sort(prob.by_size.begin(), prob.by_size.end(), [&](std::uint32_t a, std::uint32_t b) {
    return prob.members[a].size() < prob.members[b].size();
  });
  return prob;
}

// Node and time accounting shared by every search of one solve.
class Budget {
 public:
  explicit Budget(const SearchLimits& limits) : limits_(limits), start_(Clock::now()) {}

  // Counts one node; false once a limit has been hit.
  bool tick() {
    if (stopped_.load(std::memory_order_relaxed)) return false;
    const std::uint64_t count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (limits_.max_nodes && count > *limits_.max_nodes) {
      stopped_.store(true, std::memory_order_relaxed);
      return false;
    }
    if (limits_.max_time && (count & 1023) == 0 && Clock::now() - start_ > *limits_.max_time) {
      stopped_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
  bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
  std::chrono::microseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start_);
  }

 private:
  SearchLimits limits_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stopped_{false};
};

// Depth-first search over the residual problem. Sizes below include the
// forced vertices.
class Search {
 public:
  enum class Mode { Improve, FindAtMost };

  Search(const Problem& prob, Budget& budget)
      : prob_(prob),
        budget_(budget),
        count_(prob.pair_count(), 0),
        avail_(prob.pair_count(), 0),
        state_(prob.n, kFree),
        free_bits_(prob.words, 0),
        unsat_(prob.pair_count()),
        contrib_(prob.n, 0),
        used_(prob.words, 0) {
    for (std::size_t p = 0; p < prob.pair_count(); ++p) {
      avail_[p] = static_cast<std::uint32_t>(prob.members[p].size());
    }
    for (VertexId v : prob.forced) state_[v] = kForced;
    for (VertexId v = 0; v < prob.n; ++v) {
      if (state_[v] == kFree) free_bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }

  // Commits v before searching; false if it leaves the state infeasible.
  bool force_in(VertexId v) {
    if (state_[v] == kForced || state_[v] == kChosen) return true;
    if (state_[v] != kFree) return false;
    include(v);
    return true;
  }
  bool force_out(VertexId v) {
    if (state_[v] == kForced || state_[v] == kChosen) return false;
    if (state_[v] == kFree) exclude(v);
    return dead_ == 0;
  }

  // Improve: look for anything smaller than `cap` + 1, tightening the cap on
  // each solution. FindAtMost: stop at the first solution of size <= cap.
  void run(Mode mode, std::size_t cap, std::atomic<std::size_t>* shared_cap = nullptr) {
    mode_ = mode;
    cap_ = cap;
    shared_cap_ = shared_cap;
    found_ = false;
    if (dead_ == 0) dfs();
  }

  bool found() const { return found_; }
  const std::vector<VertexId>& best() const { return best_; }

  std::size_t size() const { return prob_.forced.size() + chosen_.size(); }

  // Lower bound on how many more vertices any completion needs.
  std::size_t remaining_bound() {
    std::size_t max_deficit = 0;
    std::size_t total = 0;
    std::size_t packing = 0;
    std::fill(used_.begin(), used_.end(), 0);
    const std::size_t words = prob_.words;
    for (std::uint32_t p : prob_.by_size) {
      if (count_[p] >= prob_.need[p]) continue;
      const std::size_t d = prob_.need[p] - count_[p];
      max_deficit = std::max(max_deficit, d);
      total += d;
      const std::uint64_t* s = prob_.set(p);
      bool disjoint = true;
      for (std::size_t w = 0; w < words; ++w) {
        if (s[w] & free_bits_[w] & used_[w]) {
          disjoint = false;
          break;
        }
      }
      if (disjoint) {
        packing += d;
        for (std::size_t w = 0; w < words; ++w) used_[w] |= s[w] & free_bits_[w];
      }
      for (VertexId v : prob_.members[p]) {
        if (state_[v] == kFree) ++contrib_[v];
      }
    }
    // Each further vertex removes at most contrib[v] units of total deficit.
    touched_.clear();
    for (VertexId v = 0; v < prob_.n; ++v) {
      if (contrib_[v]) {
        touched_.push_back(contrib_[v]);
        contrib_[v] = 0;
      }
    }
    std::sort(touched_.begin(), touched_.end(), std::greater<>());
    std::size_t degree_bound = 0;
    std::size_t covered = 0;
    while (covered < total && degree_bound < touched_.size()) covered += touched_[degree_bound++];
    if (covered < total) degree_bound = prob_.n + 1;  // cannot be completed
    return std::max({max_deficit, packing, degree_bound});
  }

  // Pair to branch on: fewest free resolvers, then smallest pair.
  std::optional<std::uint32_t> select_pair() const {
    std::optional<std::uint32_t> pick;
    std::uint32_t best_avail = ~std::uint32_t{0};
    for (std::uint32_t p = 0; p < prob_.pair_count(); ++p) {
      if (count_[p] >= prob_.need[p]) continue;
      if (avail_[p] < best_avail) {
        best_avail = avail_[p];
        pick = p;
      }
    }
    return pick;
  }

  bool infeasible() const { return dead_ > 0; }
  std::size_t need_of(std::uint32_t p) const { return prob_.need[p] - count_[p]; }
  std::vector<VertexId> free_members(std::uint32_t p) const {
    std::vector<VertexId> out;
    for (VertexId v : prob_.members[p]) {
      if (state_[v] == kFree) out.push_back(v);
    }
    return out;
  }

 private:
  static constexpr std::uint8_t kFree = 0;
  static constexpr std::uint8_t kChosen = 1;
  static constexpr std::uint8_t kExcluded = 2;
  static constexpr std::uint8_t kForced = 3;

  std::size_t cap() const {
    return shared_cap_ ? shared_cap_->load(std::memory_order_relaxed) : cap_;
  }

  void include(VertexId v) {
    state_[v] = kChosen;
    free_bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    chosen_.push_back(v);
    for (std::uint32_t p : prob_.pairs_of[v]) {
      --avail_[p];
      if (++count_[p] == prob_.need[p]) --unsat_;
    }
  }
  void uninclude(VertexId v) {
    for (std::uint32_t p : prob_.pairs_of[v]) {
      if (count_[p]-- == prob_.need[p]) ++unsat_;
      ++avail_[p];
    }
    chosen_.pop_back();
    free_bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
    state_[v] = kFree;
  }
  void exclude(VertexId v) {
    state_[v] = kExcluded;
    free_bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    for (std::uint32_t p : prob_.pairs_of[v]) {
      if (count_[p] + avail_[p] == prob_.need[p]) ++dead_;
      --avail_[p];
    }
  }
  void unexclude(VertexId v) {
    for (std::uint32_t p : prob_.pairs_of[v]) {
      ++avail_[p];
      if (count_[p] + avail_[p] == prob_.need[p]) --dead_;
    }
    free_bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
    state_[v] = kFree;
  }

  void record_solution() {
    const std::size_t s = size();
    if (s > cap()) return;
    best_ = prob_.forced;
    best_.insert(best_.end(), chosen_.begin(), chosen_.end());
    std::sort(best_.begin(), best_.end());
    found_ = true;
    if (mode_ == Mode::Improve && s > 0) {
      if (shared_cap_) {
        std::size_t current = shared_cap_->load(std::memory_order_relaxed);
        while (s - 1 < current &&
               !shared_cap_->compare_exchange_weak(current, s - 1, std::memory_order_relaxed)) {
        }
      } else {
        cap_ = s - 1;
      }
    }
  }

  bool done() const { return budget_.stopped() || (mode_ == Mode::FindAtMost && found_); }

  void dfs() {
    if (!budget_.tick()) return;
    if (dead_ > 0) return;
    if (unsat_ == 0) {
      record_solution();
      return;
    }
    if (size() + remaining_bound() > cap()) return;
    const std::uint32_t p = *select_pair();
    const std::size_t deficit = need_of(p);
    const std::vector<VertexId> candidates = free_members(p);
    std::size_t excluded = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates.size() - i < deficit) break;
      include(candidates[i]);
      dfs();
      uninclude(candidates[i]);
      if (done()) break;
      exclude(candidates[i]);
      ++excluded;
      if (dead_ > 0) break;
    }
    for (std::size_t i = excluded; i-- > 0;) unexclude(candidates[i]);
  }

  const Problem& prob_;
  Budget& budget_;
  std::vector<std::uint8_t> count_;
  std::vector<std::uint32_t> avail_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint64_t> free_bits_;
  std::vector<VertexId> chosen_;
  std::size_t unsat_;
  std::size_t dead_ = 0;

  Mode mode_ = Mode::Improve;
  std::size_t cap_ = 0;
  std::atomic<std::size_t>* shared_cap_ = nullptr;
  bool found_ = false;
  std::vector<VertexId> best_;

  std::vector<std::uint32_t> contrib_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint64_t> used_;
};

// Searches for a set of size <= cap containing `in` and avoiding `out`.
std::optional<std::vector<VertexId>> find_constrained(const Problem& prob, Budget& budget,
                                                      std::span<const VertexId> in,
                                                      std::span<const VertexId> out,
                                                      std::size_t cap) {
  Search search(prob, budget);
  for (VertexId v : in) {
    if (!search.force_in(v)) return std::nullopt;
  }
  for (VertexId v : out) {
    if (!search.force_out(v)) return std::nullopt;
  }
  search.run(Search::Mode::FindAtMost, cap);
  if (!search.found()) return std::nullopt;
  return search.best();
}

// Best solution strictly smaller than `incumbent`, searched in parallel over
// the root branches.
std::optional<std::vector<VertexId>> improve_parallel(const Problem& prob, Budget& budget,
                                                      std::size_t incumbent, unsigned threads) {
  Search root(prob, budget);
  if (root.infeasible() || incumbent == 0) return std::nullopt;
  const auto pick = root.select_pair();
  if (!pick) {
    // Forced vertices alone already satisfy everything.
    if (root.size() < incumbent) return prob.forced;
    return std::nullopt;
  }
  const std::uint32_t p = *pick;
  const std::size_t deficit = root.need_of(p);
  const std::vector<VertexId> candidates = root.free_members(p);
  const std::size_t branches = candidates.size() >= deficit ? candidates.size() - deficit + 1 : 0;

  std::atomic<std::size_t> cap{incumbent - 1};
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::optional<std::vector<VertexId>> best;
  std::size_t best_branch = branches;

  const auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= branches || budget.stopped()) return;
      Search search(prob, budget);
      bool ok = true;
      for (std::size_t j = 0; j < b && ok; ++j) ok = search.force_out(candidates[j]);
      if (!ok || !search.force_in(candidates[b])) continue;
      search.run(Search::Mode::Improve, cap.load(), &cap);
      if (!search.found()) continue;
      std::lock_guard lock(mutex);
      const auto& sol = search.best();
      if (!best || sol.size() < best->size() || (sol.size() == best->size() && b < best_branch)) {
        best = sol;
        best_branch = b;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return best;
}

// Walks vertices in ascending order, keeping each one iff some optimal set
// agrees with every decision so far and contains it. The result is the
// lexicographically smallest optimal set. False if the budget ran out.
bool canonicalize(const Problem& prob, Budget& budget, std::vector<VertexId>& witness) {
  const std::size_t optimum = witness.size();
  std::vector<VertexId> in;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < prob.n && in.size() < optimum; ++v) {
    if (std::binary_search(witness.begin(), witness.end(), v)) {
      in.push_back(v);
      continue;
    }
    in.push_back(v);
    auto found = find_constrained(prob, budget, in, out, optimum);
    if (budget.stopped()) return false;
    if (found) {
      witness = std::move(*found);
    } else {
      in.pop_back();
      out.push_back(v);
    }
  }
  witness = in;
  return true;
}

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Exact:
      return "Exact";
    case SolveStatus::BoundsOnly:
      return "BoundsOnly";
    case SolveStatus::Timeout:
      return "Timeout";
  }
  return "Unknown";
}

LandmarkSet greedy_multicover(const PairCoverage& coverage, int k,
                              std::optional<std::span<const VertexId>> candidates) {
  if (k < 1) throw BadInput("multiplicity must be positive");
  const std::size_t n = coverage.vertex_count();
  const std::size_t m = coverage.pair_count();
  const auto& kt = kernels::active();

  std::vector<char> allowed(n, candidates ? 0 : 1);
  if (candidates) {
    for (VertexId v : *candidates) {
      if (v >= n) throw BadInput("candidate " + std::to_string(v) + " out of range");
      allowed[v] = 1;
    }
  }
  std::vector<VertexId> pool_members;
  for (VertexId v = 0; v < n; ++v) {
    if (allowed[v]) pool_members.push_back(v);
  }
  const auto pool_bits = to_bitset(pool_members, n);

  std::vector<std::vector<std::uint32_t>> pairs_of(n);
  std::vector<std::vector<VertexId>> members(m);
  std::vector<std::size_t> deficit(m, static_cast<std::size_t>(k));
  std::vector<std::size_t> gain(n, 0);
  std::size_t unsat = m;
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = coverage.resolvers(i);
    if (kt.and_popcount(r.data(), pool_bits.data(), coverage.words()) < static_cast<std::size_t>(k)) {
      const auto [x, y] = coverage.pair(i);
      throw Infeasible("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                       ") has fewer than " + std::to_string(k) + " resolvers in the pool");
    }
    for (VertexId v : bits_to_members(r)) {
      if (!allowed[v]) continue;
      members[i].push_back(v);
      pairs_of[v].push_back(static_cast<std::uint32_t>(i));
      ++gain[v];
    }
  }

  std::vector<char> chosen(n, 0);
  std::vector<VertexId> picked;
  while (unsat > 0) {
    VertexId best = 0;
    std::size_t best_gain = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (allowed[v] && !chosen[v] && gain[v] > best_gain) {
        best_gain = gain[v];
        best = v;
      }
    }
    if (best_gain == 0) throw Infeasible("greedy multicover stalled");
    chosen[best] = 1;
    picked.push_back(best);
    for (std::uint32_t p : pairs_of[best]) {
      if (deficit[p] == 0) continue;
      if (--deficit[p] == 0) {
        --unsat;
        for (VertexId u : members[p]) --gain[u];
      }
    }
  }

  // Reverse delete: drop members every pair can spare.
  std::vector<std::size_t> count(m, 0);
  for (VertexId v : picked) {
    for (std::uint32_t p : pairs_of[v]) ++count[p];
  }
  std::sort(picked.begin(), picked.end(), std::greater<>());
  std::vector<VertexId> kept;
  for (VertexId v : picked) {
    const bool removable = std::all_of(pairs_of[v].begin(), pairs_of[v].end(), [&](std::uint32_t p) {
      return count[p] > static_cast<std::size_t>(k);
    });
    if (removable) {
      for (std::uint32_t p : pairs_of[v]) --count[p];
    } else {
      kept.push_back(v);
    }
  }
  std::sort(kept.begin(), kept.end());
  return LandmarkSet(std::move(kept));
}

std::size_t lower_bound_multicover(const PairCoverage& coverage, int k,
                                   std::optional<std::size_t> known_dim) {
  const std::size_t n = coverage.vertex_count();
  const std::size_t words = coverage.words();
  const auto kk = static_cast<std::size_t>(k);

  std::vector<std::uint64_t> forced(words, 0);
  std::vector<std::size_t> order(coverage.pair_count());
  std::vector<std::size_t> sizes(coverage.pair_count());
  for (std::size_t i = 0; i < coverage.pair_count(); ++i) {
    sizes[i] = coverage.resolver_count(i);
    if (sizes[i] == kk) {
      const auto r = coverage.resolvers(i);
      for (std::size_t w = 0; w < words; ++w) forced[w] |= r[w];
    }
  }
  std::size_t forced_count = 0;
  for (std::uint64_t w : forced) forced_count += std::popcount(w);

  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
  std::vector<std::uint64_t> used(words, 0);
  const auto& kt = kernels::active();
  std::size_t packed = 0;
  for (std::size_t i : order) {
    const auto r = coverage.resolvers(i);
    if (kt.and_popcount(r.data(), used.data(), words) != 0) continue;
    for (std::size_t w = 0; w < words; ++w) used[w] |= r[w];
    ++packed;
  }

  // Twins (pairs resolved only by themselves) fall into classes; a class of m
  // vertices needs m - 1 members for k = 1 and all m for k = 2.
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  const auto root = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < coverage.pair_count(); ++i) {
    if (sizes[i] != 2) continue;
    const auto [x, y] = coverage.pair(i);
    parent[root(x)] = root(y);
  }
  std::vector<std::size_t> class_size(n, 0);
  for (VertexId v = 0; v < n; ++v) ++class_size[root(v)];
  std::size_t twin_bound = 0;
  for (std::size_t m : class_size) {
    if (m >= 2) twin_bound += k == 1 ? m - 1 : m;
  }

  std::size_t bound = std::max({forced_count, std::min(packed * kk, n), twin_bound});
  if (k == 2 && known_dim) bound = std::max(bound, *known_dim + 1);
  return bound;
}

SolveReport solve_min_multicover(const PairCoverage& coverage, int k, const SearchLimits& limits) {
  SolveOptions options;
  options.limits = limits;
  return solve_min_multicover(coverage, k, options);
}

SolveReport solve_min_multicover(const PairCoverage& coverage, int k, const SolveOptions& options) {
  if (k < 1 || k > 2) throw BadInput("multiplicity must be 1 or 2, got " + std::to_string(k));
  Budget budget(options.limits);
  SolveReport report;
  report.k = k;

  const Problem prob = build_problem(coverage, static_cast<std::size_t>(k));
  report.forced = prob.forced.size();
  report.reduced_pairs = prob.pair_count();

  LandmarkSet greedy = greedy_multicover(coverage, k);
  std::vector<VertexId> incumbent(greedy.vertices().begin(), greedy.vertices().end());
  std::size_t lower = lower_bound_multicover(coverage, k, options.known_dim);
  {
    Search root(prob, budget);
    lower = std::max(lower, root.size() + root.remaining_bound());
  }
  lower = std::min(lower, incumbent.size());
  report.upper_bound = incumbent.size();
  report.lower_bound = lower;

  const auto finish = [&](SolveStatus status) {
    report.status = status;
    report.nodes = budget.nodes();
    report.elapsed = budget.elapsed();
    return report;
  };

  if (options.limits.max_nodes && *options.limits.max_nodes == 0 && lower < incumbent.size()) {
    return finish(SolveStatus::BoundsOnly);
  }

  if (lower < incumbent.size()) {
    if (options.strategy == SearchStrategy::IterativeDeepening) {
      for (std::size_t target = lower; target < incumbent.size(); ++target) {
        auto found = find_constrained(prob, budget, {}, {}, target);
        if (budget.stopped() && !found) {
          report.lower_bound = target;
          return finish(SolveStatus::Timeout);
        }
        if (found) {
          incumbent = std::move(*found);
          break;
        }
        report.lower_bound = target + 1;
      }
    } else {
      std::optional<std::vector<VertexId>> better;
      if (options.threads > 1) {
        better = improve_parallel(prob, budget, incumbent.size(), options.threads);
      } else {
        Search search(prob, budget);
        search.run(Search::Mode::Improve, incumbent.size() - 1);
        if (search.found()) better = search.best();
      }
      if (better) incumbent = std::move(*better);
      report.upper_bound = incumbent.size();
      if (budget.stopped()) return finish(SolveStatus::Timeout);
    }
  }

  std::sort(incumbent.begin(), incumbent.end());
  report.optimum = incumbent.size();
  report.lower_bound = incumbent.size();
  report.upper_bound = incumbent.size();
  if (options.canonical_witness) {
    report.witness_lex_min = canonicalize(prob, budget, incumbent);
  }
  report.witness = LandmarkSet(incumbent);
  return finish(SolveStatus::Exact);
}

namespace {

SolveReport solve_graph(const Graph& g, int k, const SolveOptions& options) {
  const DistanceMatrix d = all_pairs_distances(g, std::max(1u, options.threads));
  const PairCoverage coverage = pair_coverage(d, std::max(1u, options.threads));
  return solve_min_multicover(coverage, k, options);
}

}  // namespace

SolveReport dim(const Graph& g, const SolveOptions& options) { return solve_graph(g, 1, options); }
SolveReport fdim(const Graph& g, const SolveOptions& options) { return solve_graph(g, 2, options); }
SolveReport dim(const LabeledGraph& g, const SolveOptions& options) { return dim(g.graph, options); }
SolveReport fdim(const LabeledGraph& g, const SolveOptions& options) { return fdim(g.graph, options); }

}  // namespace zdg
