#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/metric.hpp"
#include "zdg/solver.hpp"
#include "zdg/subdivision.hpp"

namespace zdg {

// Which statement about BS(Γ(Z_pq)) applies to a pair of odd primes p < q.
enum class TheoremCase {
  QAbove,        // q > 2p - 1
  QEq2pMinus1,   // q = 2p - 1
  QEq2pMinus3,   // q = 2p - 3
  OpenRange,     // p + 1 < q < 2p - 3
  Unclassified,  // anything else; unreachable for odd primes, kept for completeness
};
std::string_view to_string(TheoremCase c);

// Throws BadInput unless p < q are odd primes.
TheoremCase classify_case(int p, int q);

struct ExpectedValues {
  std::optional<std::size_t> dim;
  std::optional<std::size_t> fdim;
  // Open range only: the values are claimed to be strictly above these.
  std::optional<std::size_t> dim_strictly_above;
  std::optional<std::size_t> fdim_strictly_above;
};
ExpectedValues expected_values(TheoremCase c, int p, int q);

// Size the theorem claims for its landmark family.
std::size_t claimed_e_size(TheoremCase c, int p, int q);

// The family E in listing order. Throws BadInput for cases without a family.
std::vector<PartLabel> e_set_labels(TheoremCase c, int p, int q);

// E as vertex ids, in listing order. Throws CardinalityMismatch when the
// distinct members do not number claimed_e_size().
LandmarkSet build_e_set(TheoremCase c, int p, int q, const PqPartition& partition);

enum class Verdict { Confirmed, BoundConsistent, Refuted, Skipped };
std::string_view to_string(Verdict v);

struct VerifyOptions {
  SolveOptions solve;
  bool solve_dim = true;
  bool solve_fdim = true;
};

struct VerificationRecord {
  int p = 0;
  int q = 0;
  TheoremCase theorem_case = TheoremCase::Unclassified;
  ExpectedValues expected;
  std::optional<LandmarkSet> e_set;
  std::vector<std::string> e_labels;
  bool e_is_ftrs = false;
  std::optional<SolveReport> solver_dim;
  std::optional<SolveReport> solver_fdim;

  // Bracket on fdim combining E, the solvers and fdim >= dim + 1.
  std::size_t dim_lower = 0;
  std::optional<std::size_t> dim_upper;
  std::size_t fdim_lower = 0;
  std::optional<std::size_t> fdim_upper;
  bool bracket_closed = false;

  Verdict verdict = Verdict::Skipped;
  std::vector<std::string> notes;
};

VerificationRecord verify_instance(int p, int q, const VerifyOptions& options = {});

// Every resolving set of exactly `size` vertices, ascending ids, in
// lexicographic order. Throws BudgetExceeded when C(n, size) > budget.
std::vector<LandmarkSet> enumerate_metric_bases(const Graph& g, std::size_t size,
                                                std::uint64_t budget = 50'000'000);

struct ClaimReport {
  int claim = 0;
  std::string statement;
  // False when the claim has no clear reading for this instance; only the
  // histogram is meaningful then.
  bool decidable = true;
  std::size_t evaluated = 0;
  std::size_t satisfied = 0;
  std::vector<LandmarkSet> counterexamples;  // first few
  std::map<std::string, std::size_t> histogram;

  bool holds() const { return decidable && satisfied == evaluated; }
};

struct LemmaReport {
  int p = 0;
  int q = 0;
  std::size_t bases = 0;
  std::vector<ClaimReport> claims;  // claims 1, 2, 3
};

// Evaluates the structural claims about metric bases of BS(Γ(Z_pq)) with
// q = 2p - 1 over the given bases.
LemmaReport check_lemma_structure(const std::vector<LandmarkSet>& bases,
                                  const PqPartition& partition, const Graph& g,
                                  std::size_t max_counterexamples = 8);

}  // namespace zdg
