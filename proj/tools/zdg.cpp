// zdg: zero-divisor graphs, subdivisions, and their (fault-tolerant) metric
// dimensions from the command line.

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracle.hpp"
#include "zdg/errors.hpp"
#include "zdg/io.hpp"
#include "zdg/metric.hpp"
#include "zdg/papersets.hpp"
#include "zdg/solver.hpp"
#include "zdg/subdivision.hpp"
#include "zdg/zdgraph.hpp"

namespace {

using namespace zdg;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitRefuted = 4;

struct Config {
  std::optional<std::uint64_t> n;
  std::optional<int> p;
  std::optional<int> q;
  std::string p_range;
  std::string q_range;
  std::string edges_file;
  std::string kind = "fdim";
  std::string graph = "bs";
  std::string format = "json";
  std::string landmarks = "paper-E";
  std::string strategy = "bb";
  std::uint64_t limit_nodes = 100'000'000;
  std::uint64_t limit_ms = 60'000;
  unsigned threads = 1;
  bool strict = false;
  std::uint64_t seed = 20240601;
  std::size_t count = 300;
  std::string out;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw BadInput("cannot write " + cfg.out);
  file << text;
}

void log(const std::string& line) { std::cerr << "zdg: " << line << '\n'; }

SolveOptions solve_options(const Config& cfg) {
  SolveOptions options;
  options.limits.max_nodes = cfg.limit_nodes;
  options.limits.max_time = std::chrono::milliseconds(cfg.limit_ms);
  options.threads = cfg.threads;
  if (cfg.strategy == "id") {
    options.strategy = SearchStrategy::IterativeDeepening;
  } else if (cfg.strategy != "bb") {
    throw BadInput("unknown strategy '" + cfg.strategy + "' (bb or id)");
  }
  return options;
}

io::Format output_format(const Config& cfg) {
  const auto f = io::parse_format(cfg.format);
  if (!f) throw BadInput("unknown format '" + cfg.format + "'");
  return *f;
}

std::uint64_t require_n(const Config& cfg) {
  if (!cfg.n) throw BadInput("--n is required");
  return *cfg.n;
}

// BS(Γ(Z_n)) with part labels when n = pq, residue/edge labels otherwise.
LabeledGraph subdivided(std::uint64_t n) {
  if (const auto pq = split_distinct_odd_primes(n)) {
    return build_pq_graph(static_cast<int>(pq->first), static_cast<int>(pq->second)).graph;
  }
  return barycentric_subdivision(build_gamma(n));
}

std::pair<int, int> parse_range(const std::string& text, const char* flag) {
  const auto sep = text.find("..");
  const auto number = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw BadInput(std::string(flag) + " expects A..B or A, got '" + text + "'");
    }
    return v;
  };
  if (sep == std::string::npos) {
    const int v = number(text);
    return {v, v};
  }
  const std::string_view view(text);
  return {number(view.substr(0, sep)), number(view.substr(sep + 2))};
}

int cmd_gamma(const Config& cfg) {
  const std::uint64_t n = require_n(cfg);
  const LabeledGraph g = build_gamma(n);
  log("gamma Z_" + std::to_string(n) + ": " + std::to_string(g.vertex_count()) + " vertices, " +
      std::to_string(g.graph.edge_count()) + " edges");
  emit(cfg, io::write_graph(g, output_format(cfg), n));
  return kExitOk;
}

int cmd_subdivide(const Config& cfg) {
  const std::uint64_t n = require_n(cfg);
  const auto pq = split_distinct_odd_primes(n);
  if (!pq) throw BadInput(std::to_string(n) + " is not a product of two distinct odd primes");
  const LabeledGraph g = subdivided(n);
  log("BS(Gamma(Z_" + std::to_string(n) + ")): " + std::to_string(g.vertex_count()) +
      " vertices, " + std::to_string(g.graph.edge_count()) + " edges");
  emit(cfg, io::write_graph(g, output_format(cfg), n));
  return kExitOk;
}

int cmd_solve(const Config& cfg) {
  if (cfg.n.has_value() == !cfg.edges_file.empty()) {
    throw BadInput("give exactly one of --n and --edges");
  }
  int k = 0;
  if (cfg.kind == "dim") {
    k = 1;
  } else if (cfg.kind == "fdim") {
    k = 2;
  } else {
    throw BadInput("--kind must be dim or fdim");
  }
  LabeledGraph g;
  if (cfg.n) {
    if (cfg.graph == "bs") {
      g = subdivided(*cfg.n);
    } else if (cfg.graph == "gamma") {
      g = build_gamma(*cfg.n);
    } else {
      throw BadInput("--graph must be bs or gamma");
    }
  } else {
    g = io::read_graph_file(cfg.edges_file);
  }
  if (g.vertex_count() == 0) throw BadInput("graph has no vertices");
  const SolveOptions options = solve_options(cfg);
  const DistanceMatrix d = all_pairs_distances(g.graph, cfg.threads);
  const PairCoverage coverage = pair_coverage(d, cfg.threads);
  const SolveReport report = solve_min_multicover(coverage, k, options);
  log(cfg.kind + ": " + std::string(to_string(report.status)) + ", bounds [" +
      std::to_string(report.lower_bound) + ", " + std::to_string(report.upper_bound) + "], " +
      std::to_string(report.nodes) + " nodes");
  emit(cfg, io::report_to_json(report, g).dump(2) + "\n");
  return report.status == SolveStatus::Exact ? kExitOk : kExitTimeout;
}

int cmd_codes(const Config& cfg) {
  const std::uint64_t n = require_n(cfg);
  const auto pq = split_distinct_odd_primes(n);
  if (!pq) throw BadInput(std::to_string(n) + " is not a product of two distinct odd primes");
  const int p = static_cast<int>(pq->first);
  const int q = static_cast<int>(pq->second);
  const PqGraph g = build_pq_graph(p, q);
  std::vector<VertexId> ids;
  if (cfg.landmarks == "paper-E") {
    const LandmarkSet e = build_e_set(classify_case(p, q), p, q, g.partition);
    ids.assign(e.vertices().begin(), e.vertices().end());
  } else {
    std::string_view rest = cfg.landmarks;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string label(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      const auto v = g.graph.find_label(label);
      if (!v) throw BadInput("unknown landmark label '" + label + "'");
      ids.push_back(*v);
    }
  }
  LandmarkSet landmarks;
  try {
    landmarks = LandmarkSet(std::move(ids));
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  if (landmarks.empty()) throw BadInput("no landmarks given");
  const DistanceMatrix d = all_pairs_distances(g.graph.graph, cfg.threads);
  emit(cfg, io::codes_csv(g.graph, landmarks, d));
  return kExitOk;
}

VerifyOptions verify_options(const Config& cfg) {
  VerifyOptions options;
  options.solve = solve_options(cfg);
  return options;
}

int cmd_verify(const Config& cfg) {
  if (!cfg.p || !cfg.q) throw BadInput("--p and --q are required");
  const int p = *cfg.p;
  const int q = *cfg.q;
  const VerificationRecord rec = verify_instance(p, q, verify_options(cfg));
  Json doc = io::record_to_json(rec);
  int code = rec.verdict == Verdict::Refuted ? kExitRefuted : kExitOk;

  // The metric-basis structure claims are only checked where enumeration fits.
  if (rec.theorem_case == TheoremCase::QEq2pMinus1 && rec.solver_dim &&
      rec.solver_dim->status == SolveStatus::Exact) {
    const PqGraph g = build_pq_graph(p, q);
    try {
      const auto bases = enumerate_metric_bases(g.graph.graph, *rec.solver_dim->optimum);
      const LemmaReport lemma = check_lemma_structure(bases, g.partition, g.graph.graph);
      doc["lemma"] = io::lemma_to_json(lemma, g.graph);
      if (!lemma.claims.front().holds()) code = kExitRefuted;
    } catch (const BudgetExceeded& e) {
      doc["lemma"] = nullptr;
      log(std::string("basis enumeration skipped: ") + e.what());
    }
  }
  log("verify (" + std::to_string(p) + ", " + std::to_string(q) + "): " +
      std::string(to_string(rec.verdict)));
  if (cfg.strict && code == kExitOk && rec.verdict != Verdict::Confirmed) code = kExitTimeout;
  emit(cfg, doc.dump(2) + "\n");
  return code;
}

int cmd_sweep(const Config& cfg) {
  if (cfg.p_range.empty() || cfg.q_range.empty()) throw BadInput("--p and --q ranges are required");
  const auto [p_lo, p_hi] = parse_range(cfg.p_range, "--p");
  const auto [q_lo, q_hi] = parse_range(cfg.q_range, "--q");
  const VerifyOptions options = verify_options(cfg);
  std::string csv = io::records_csv_header();
  bool refuted = false;
  bool unfinished = false;
  for (int p = std::max(p_lo, 3); p <= p_hi; ++p) {
    if (p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p))) continue;
    for (int q = std::max(q_lo, p + 1); q <= q_hi; ++q) {
      if (q % 2 == 0 || !is_prime(static_cast<std::uint64_t>(q))) continue;
      if (classify_case(p, q) == TheoremCase::Unclassified) {
        log("skipping (" + std::to_string(p) + ", " + std::to_string(q) + "): unclassified");
        continue;
      }
      const VerificationRecord rec = verify_instance(p, q, options);
      log("(" + std::to_string(p) + ", " + std::to_string(q) + ") " +
          std::string(to_string(rec.theorem_case)) + ": " + std::string(to_string(rec.verdict)));
      refuted = refuted || rec.verdict == Verdict::Refuted;
      unfinished = unfinished || rec.verdict != Verdict::Confirmed;
      csv += io::record_csv_row(rec);
    }
  }
  emit(cfg, csv);
  if (refuted) return kExitRefuted;
  return cfg.strict && unfinished ? kExitTimeout : kExitOk;
}

int cmd_selftest(const Config& cfg) {
  const auto corpus = testing::random_corpus(cfg.count, 2, 10, cfg.seed);
  std::size_t mismatches = 0;
  std::size_t witness_mismatches = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    const PairCoverage coverage = pair_coverage(all_pairs_distances(g));
    for (int k = 1; k <= 2; ++k) {
      const auto oracle = testing::brute_force_optimum(g, k);
      const SolveReport report = solve_min_multicover(coverage, k);
      if (report.optimum != oracle.optimum) {
        ++mismatches;
        log("graph " + std::to_string(i) + " k=" + std::to_string(k) + ": solver " +
            (report.optimum ? std::to_string(*report.optimum) : std::string("none")) +
            ", oracle " + std::to_string(oracle.optimum));
      } else {
        const auto w = report.witness->vertices();
        if (!std::equal(w.begin(), w.end(), oracle.lex_min.begin(), oracle.lex_min.end())) {
          ++witness_mismatches;
        }
      }
    }
  }
  Json doc;
  doc["seed"] = cfg.seed;
  doc["graphs"] = corpus.size();
  doc["mismatches"] = mismatches;
  doc["witness_mismatches"] = witness_mismatches;
  doc["passed"] = mismatches == 0 && witness_mismatches == 0;
  emit(cfg, doc.dump(2) + "\n");
  return mismatches == 0 && witness_mismatches == 0 ? kExitOk : kExitFailure;
}

void add_limits(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--limits-nodes", cfg.limit_nodes, "Search node budget per solve");
  cmd->add_option("--limits-ms", cfg.limit_ms, "Time budget per solve in milliseconds");
  cmd->add_option("--threads", cfg.threads, "Worker threads (1 gives reproducible witnesses)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--strategy", cfg.strategy, "bb (branch and bound) or id (iterative deepening)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor graphs of Z_n and their metric dimensions"};
  app.require_subcommand(1);
  Config cfg;

  auto* gamma = app.add_subcommand("gamma", "Export the zero-divisor graph of Z_n");
  gamma->add_option("--n", cfg.n, "Modulus")->required();
  gamma->add_option("--format", cfg.format, "json, csv, dot or graphml");
  gamma->add_option("--out", cfg.out, "Output file (default: standard output)");

  auto* subdivide = app.add_subcommand("subdivide", "Export BS(Gamma(Z_pq)) with part labels");
  subdivide->add_option("--n", cfg.n, "Product of two distinct odd primes")->required();
  subdivide->add_option("--format", cfg.format, "json, csv, dot or graphml");
  subdivide->add_option("--out", cfg.out, "Output file");

  auto* solve = app.add_subcommand("solve", "Compute dim or fdim exactly");
  solve->add_option("--n", cfg.n, "Solve on BS(Gamma(Z_n))");
  solve->add_option("--edges", cfg.edges_file, "Solve on a graph file (JSON or edge list)");
  solve->add_option("--kind", cfg.kind, "dim or fdim");
  solve->add_option("--graph", cfg.graph, "bs (default) or gamma, with --n");
  solve->add_option("--out", cfg.out, "Output file");
  add_limits(solve, cfg);

  auto* codes = app.add_subcommand("codes", "Metric codes of every vertex as CSV");
  codes->add_option("--n", cfg.n, "Product of two distinct odd primes")->required();
  codes->add_option("--landmarks", cfg.landmarks, "Comma-separated labels or paper-E");
  codes->add_option("--out", cfg.out, "Output file");
  codes->add_option("--threads", cfg.threads, "BFS worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check the stated values for one (p, q)");
  verify->add_option("--p", cfg.p, "Smaller odd prime")->required();
  verify->add_option("--q", cfg.q, "Larger odd prime")->required();
  verify->add_flag("--strict", cfg.strict, "Exit 3 unless both values are solved exactly");
  verify->add_option("--out", cfg.out, "Output file");
  add_limits(verify, cfg);

  auto* sweep = app.add_subcommand("sweep", "Verify every prime pair in a range, CSV output");
  sweep->add_option("--p", cfg.p_range, "Range A..B for p")->required();
  sweep->add_option("--q", cfg.q_range, "Range A..B for q")->required();
  sweep->add_flag("--strict", cfg.strict, "Exit 3 unless every record is Confirmed");
  sweep->add_option("--out", cfg.out, "Output file");
  add_limits(sweep, cfg);

  auto* selftest = app.add_subcommand("selftest", "Solver against brute force on random graphs");
  selftest->add_option("--seed", cfg.seed, "Corpus seed");
  selftest->add_option("--count", cfg.count, "Number of graphs");
  selftest->add_option("--out", cfg.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gamma) return cmd_gamma(cfg);
    if (*subdivide) return cmd_subdivide(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*codes) return cmd_codes(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*sweep) return cmd_sweep(cfg);
    if (*selftest) return cmd_selftest(cfg);
  } catch (const Error& e) {
    log(std::string("error: ") + e.what());
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    log(std::string("error: ") + e.what());
    return kExitInput;
  } catch (const std::out_of_range& e) {
    log(std::string("error: ") + e.what());
    return kExitInput;
  }
  return kExitFailure;
}
