#include "zdg/papersets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zdg/errors.hpp"
#include "zdg/kernels.hpp"
#include "zdg/zdgraph.hpp"

namespace zdg {

std::string_view to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::QAbove:
      return "QAbove";
    case TheoremCase::QEq2pMinus1:
      return "QEq2pMinus1";
    case TheoremCase::QEq2pMinus3:
      return "QEq2pMinus3";
    case TheoremCase::OpenRange:
      return "OpenRange";
    case TheoremCase::Unclassified:
      return "Unclassified";
  }
  return "Unclassified";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed:
      return "Confirmed";
    case Verdict::BoundConsistent:
      return "BoundConsistent";
    case Verdict::Refuted:
      return "Refuted";
    case Verdict::Skipped:
      return "Skipped";
  }
  return "Skipped";
}

TheoremCase classify_case(int p, int q) {
  require_odd_prime_pair(p, q);
  if (q > 2 * p - 1) return TheoremCase::QAbove;
  if (q == 2 * p - 1) return TheoremCase::QEq2pMinus1;
  if (q == 2 * p - 3) return TheoremCase::QEq2pMinus3;
  if (p + 1 < q && q < 2 * p - 3) return TheoremCase::OpenRange;
  return TheoremCase::Unclassified;
}

ExpectedValues expected_values(TheoremCase c, int p, int q) {
  (void)p;
  const auto qq = static_cast<std::size_t>(q);
  switch (c) {
    case TheoremCase::QAbove:
      return {qq - 2, qq - 1, std::nullopt, std::nullopt};
    case TheoremCase::QEq2pMinus1:
      return {qq - 2, qq, std::nullopt, std::nullopt};
    case TheoremCase::QEq2pMinus3:
      return {qq - 1, qq, std::nullopt, std::nullopt};
    case TheoremCase::OpenRange:
      return {std::nullopt, std::nullopt, qq - 2, qq - 1};
    case TheoremCase::Unclassified:
      break;
  }
  return {};
}

std::size_t claimed_e_size(TheoremCase c, int p, int q) {
  (void)p;
  switch (c) {
    case TheoremCase::QAbove:
      return static_cast<std::size_t>(q - 1);
    case TheoremCase::QEq2pMinus1:
    case TheoremCase::QEq2pMinus3:
      return static_cast<std::size_t>(q);
    default:
      throw BadInput("no landmark family for case " + std::string(to_string(c)));
  }
}

std::vector<PartLabel> e_set_labels(TheoremCase c, int p, int q) {
  (void)claimed_e_size(c, p, q);
  const int h = (p - 1) / 2;
  std::vector<PartLabel> out;
  out.push_back(PartLabel::a(1));
  for (int tau = 1; tau <= h; ++tau) {
    out.push_back(PartLabel::t(tau, 2 * tau));
    out.push_back(PartLabel::t(tau, 2 * tau + 1));
  }
  const auto s_pairs = [&](int last_sigma) {
    for (int sigma = 1; sigma <= last_sigma; ++sigma) {
      out.push_back(PartLabel::s(sigma, p - 1 + 2 * sigma));
      out.push_back(PartLabel::s(sigma, p + 2 * sigma));
    }
  };
  switch (c) {
    case TheoremCase::QAbove:
    case TheoremCase::QEq2pMinus1:
      s_pairs((p - 3) / 2);
      for (int i = 2 * p - 2; i <= q - 1; ++i) out.push_back(PartLabel::s(h, i));
      if (c == TheoremCase::QEq2pMinus1) out.push_back(PartLabel::u(p - 1));
      break;
    case TheoremCase::QEq2pMinus3:
      s_pairs((p - 5) / 2);
      for (int i = 2 * p - 4; i <= q - 1; ++i) out.push_back(PartLabel::s((p - 3) / 2, i));
      out.push_back(PartLabel::s(h, q - 1));
      break;
    default:
      break;
  }
  return out;
}

LandmarkSet build_e_set(TheoremCase c, int p, int q, const PqPartition& partition) {
  if (partition.p() != p || partition.q() != q) {
    throw BadInput("partition is for (" + std::to_string(partition.p()) + ", " +
                   std::to_string(partition.q()) + "), not (" + std::to_string(p) + ", " +
                   std::to_string(q) + ")");
  }
  const std::size_t claimed = claimed_e_size(c, p, q);
  std::vector<VertexId> ids;
  for (const PartLabel& label : e_set_labels(c, p, q)) {
    if (!partition.contains(label)) {
      throw CardinalityMismatch("label " + to_string(label) + " does not exist for (" +
                                    std::to_string(p) + ", " + std::to_string(q) + ")",
                                claimed, ids.size());
    }
    const VertexId v = partition.vertex_of(label);
    if (std::find(ids.begin(), ids.end(), v) == ids.end()) ids.push_back(v);
  }
  if (ids.size() != claimed) {
    throw CardinalityMismatch("landmark family has " + std::to_string(ids.size()) +
                                  " distinct members, claimed " + std::to_string(claimed),
                              claimed, ids.size());
  }
  return LandmarkSet(std::move(ids));
}

VerificationRecord verify_instance(int p, int q, const VerifyOptions& options) {
  VerificationRecord rec;
  rec.p = p;
  rec.q = q;
  rec.theorem_case = classify_case(p, q);
  rec.expected = expected_values(rec.theorem_case, p, q);
  if (rec.theorem_case == TheoremCase::QEq2pMinus1) {
    rec.notes.push_back("q = 2p-1 is routed to the q = 2p-1 statement; the q-1 family needs q > 2p-1");
  }
  if (rec.theorem_case == TheoremCase::Unclassified) {
    rec.verdict = Verdict::Skipped;
    rec.notes.push_back("no statement covers this pair");
    return rec;
  }

  const unsigned threads = std::max(1u, options.solve.threads);
  const PqGraph pq = build_pq_graph(p, q);
  const DistanceMatrix d = all_pairs_distances(pq.graph.graph, threads);
  const PairCoverage coverage = pair_coverage(d, threads);

  bool cardinality_ok = true;
  if (rec.theorem_case != TheoremCase::OpenRange) {
    for (const PartLabel& label : e_set_labels(rec.theorem_case, p, q)) {
      rec.e_labels.push_back(to_string(label));
    }
    try {
      rec.e_set = build_e_set(rec.theorem_case, p, q, pq.partition);
      const bool by_definition = is_ft_resolving(*rec.e_set, d);
      const bool by_pairs = coverage.covered(*rec.e_set, 2);
      if (by_definition != by_pairs) {
        throw std::logic_error("fault-tolerance predicates disagree on the landmark family");
      }
      rec.e_is_ftrs = by_definition;
    } catch (const CardinalityMismatch& e) {
      cardinality_ok = false;
      rec.notes.push_back(std::string("cardinality mismatch: ") + e.what());
    }
  }

  SolveOptions solve = options.solve;
  if (options.solve_dim) {
    rec.solver_dim = solve_min_multicover(coverage, 1, solve);
    if (rec.solver_dim->status == SolveStatus::Exact) solve.known_dim = rec.solver_dim->optimum;
  }
  if (options.solve_fdim) rec.solver_fdim = solve_min_multicover(coverage, 2, solve);

  if (rec.solver_dim) {
    rec.dim_lower = rec.solver_dim->lower_bound;
    rec.dim_upper = rec.solver_dim->upper_bound;
  }
  rec.fdim_lower = rec.dim_lower + 1;
  if (rec.solver_fdim) {
    rec.fdim_lower = std::max(rec.fdim_lower, rec.solver_fdim->lower_bound);
    rec.fdim_upper = rec.solver_fdim->upper_bound;
  }
  if (rec.e_is_ftrs) {
    rec.fdim_upper = rec.fdim_upper ? std::min(*rec.fdim_upper, rec.e_set->size()) : rec.e_set->size();
  }
  rec.bracket_closed = rec.fdim_upper && *rec.fdim_upper == rec.fdim_lower;

  if (rec.theorem_case == TheoremCase::OpenRange) {
    rec.verdict = Verdict::Skipped;
    rec.notes.push_back("open range: only bounds are reported");
    if (rec.dim_upper && *rec.dim_upper <= *rec.expected.dim_strictly_above) {
      rec.verdict = Verdict::Refuted;
      rec.notes.push_back("found a resolving set of size " + std::to_string(*rec.dim_upper) +
                          ", not above " + std::to_string(*rec.expected.dim_strictly_above));
    }
    if (rec.fdim_upper && *rec.fdim_upper <= *rec.expected.fdim_strictly_above) {
      rec.verdict = Verdict::Refuted;
      rec.notes.push_back("found a fault-tolerant resolving set of size " +
                          std::to_string(*rec.fdim_upper) + ", not above " +
                          std::to_string(*rec.expected.fdim_strictly_above));
    }
    return rec;
  }

  // Contradictions between the bracket and the claimed values.
  bool refuted = false;
  const auto check = [&](std::string_view what, std::size_t lower, std::optional<std::size_t> upper,
                         std::size_t expected) {
    if (lower > expected || (upper && *upper < expected)) {
      refuted = true;
      rec.notes.push_back(std::string(what) + " bracket [" + std::to_string(lower) + ", " +
                          (upper ? std::to_string(*upper) : std::string("?")) +
                          "] excludes the claimed " + std::to_string(expected));
    }
  };
  check("dim", rec.dim_lower, rec.dim_upper, *rec.expected.dim);
  check("fdim", rec.fdim_lower, rec.fdim_upper, *rec.expected.fdim);
  if (cardinality_ok && rec.e_set && !rec.e_is_ftrs) {
    refuted = true;
    rec.notes.push_back("the landmark family is not fault-tolerant resolving");
  }

  const auto exact = [](const std::optional<SolveReport>& r) {
    return r && r->status == SolveStatus::Exact;
  };
  if (refuted) {
    rec.verdict = Verdict::Refuted;
  } else if (!cardinality_ok) {
    rec.verdict = Verdict::Skipped;
  } else if (exact(rec.solver_dim) && exact(rec.solver_fdim) && rec.e_is_ftrs) {
    rec.verdict = Verdict::Confirmed;
  } else {
    rec.verdict = Verdict::BoundConsistent;
  }
  return rec;
}

std::vector<LandmarkSet> enumerate_metric_bases(const Graph& g, std::size_t size,
                                                std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  if (size > n) return {};
  // C(n, size) with saturation at budget + 1.
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < size && total <= budget; ++i) {
    total = total * (n - i) / (i + 1);
  }
  if (total > budget) {
    throw BudgetExceeded("C(" + std::to_string(n) + ", " + std::to_string(size) +
                         ") subsets exceed the enumeration budget of " + std::to_string(budget));
  }

  const PairCoverage coverage = pair_coverage(all_pairs_distances(g));
  std::vector<std::size_t> order(coverage.pair_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return coverage.resolver_count(a) < coverage.resolver_count(b);
  });

  const auto& kt = kernels::active();
  std::vector<LandmarkSet> out;
  std::vector<VertexId> pick(size);
  std::iota(pick.begin(), pick.end(), VertexId{0});
  std::vector<std::uint64_t> mask;
  for (;;) {
    mask = to_bitset(pick, n);
    const bool resolving = std::all_of(order.begin(), order.end(), [&](std::size_t i) {
      return kt.and_popcount(coverage.resolvers(i).data(), mask.data(), coverage.words()) > 0;
    });
    if (resolving) out.emplace_back(pick);
    // Next combination in lexicographic order.
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

LemmaReport check_lemma_structure(const std::vector<LandmarkSet>& bases,
                                  const PqPartition& partition, const Graph& g,
                                  std::size_t max_counterexamples) {
  const int p = partition.p();
  const int q = partition.q();
  const int h = partition.half();
  LemmaReport report;
  report.p = p;
  report.q = q;
  report.bases = bases.size();

  ClaimReport c1;
  c1.claim = 1;
  c1.statement = "W is independent and disjoint from U";
  ClaimReport c2;
  c2.claim = 2;
  c2.statement = "every block S^k, T^k holds exactly two members of W, except exactly one block";
  ClaimReport c3;
  c3.claim = 3;
  c3.statement =
      "some r_a in A has N[r_a] disjoint from W, W meets A in a single r_b, and "
      "|N[r_i] ∩ W| = 1 for every other r_i";
  // With p = 3 there are only the two blocks T^1 and S^1 and the exception
  // clause has no unambiguous reading.
  c2.decidable = p > 3;

  const auto note = [&](ClaimReport& c, bool ok, const LandmarkSet& w) {
    ++c.evaluated;
    if (ok) {
      ++c.satisfied;
    } else if (c.counterexamples.size() < max_counterexamples) {
      c.counterexamples.push_back(w);
    }
  };

  for (const LandmarkSet& w : bases) {
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : w.vertices()) in[v] = 1;

    bool independent = true;
    bool touches_u = false;
    for (VertexId v : w.vertices()) {
      if (partition.label_of(v).kind == PartLabel::Kind::U) touches_u = true;
      for (VertexId x : g.neighbors(v)) {
        if (in[x]) independent = false;
      }
    }
    note(c1, independent && !touches_u, w);

    std::vector<int> t_count(h + 1, 0);
    std::vector<int> s_count(h + 1, 0);
    for (VertexId v : w.vertices()) {
      const PartLabel& l = partition.label_of(v);
      if (l.kind == PartLabel::Kind::T) ++t_count[l.block];
      if (l.kind == PartLabel::Kind::S) ++s_count[l.block];
    }
    std::string key;
    int off_two = 0;
    for (int k = 1; k <= h; ++k) {
      key += (key.empty() ? "" : " ") + std::string("T") + std::to_string(k) + "=" +
             std::to_string(t_count[k]);
      off_two += t_count[k] != 2;
    }
    for (int k = 1; k <= h; ++k) {
      key += " S" + std::to_string(k) + "=" + std::to_string(s_count[k]);
      off_two += s_count[k] != 2;
    }
    ++c2.histogram[key];
    if (c2.decidable) {
      note(c2, off_two == 1, w);
    } else {
      ++c2.evaluated;
    }

    int empty = 0;
    int single = 0;
    int in_a = 0;
    for (int i = 1; i <= q - 1; ++i) {
      const VertexId r = partition.r(i);
      in_a += in[r];
      int meet = in[r];
      for (VertexId x : g.neighbors(r)) meet += in[x];
      empty += meet == 0;
      single += meet == 1;
    }
    note(c3, empty == 1 && single == q - 2 && in_a == 1, w);
    ++c3.histogram["empty=" + std::to_string(empty) + " single=" + std::to_string(single) +
                   " in_A=" + std::to_string(in_a)];
  }

  report.claims = {std::move(c1), std::move(c2), std::move(c3)};
  return report;
}

}  // namespace zdg
