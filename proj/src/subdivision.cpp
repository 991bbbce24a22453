#include "zdg/subdivision.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "zdg/errors.hpp"
#include "zdg/zdgraph.hpp"

namespace zdg {

LabeledGraph barycentric_subdivision(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  const EdgeList old_edges = g.graph.edges();
  EdgeList edges;
  edges.reserve(2 * old_edges.size());
  std::vector<VertexTag> tags = g.tags;
  tags.reserve(n + old_edges.size());
  for (std::size_t j = 0; j < old_edges.size(); ++j) {
    const auto [u, v] = old_edges[j];
    const auto mid = static_cast<VertexId>(n + j);
    edges.emplace_back(u, mid);
    edges.emplace_back(v, mid);
    const auto* ru = std::get_if<RingTag>(&g.tags[u]);
    const auto* rv = std::get_if<RingTag>(&g.tags[v]);
    SubTag sub = (ru && rv) ? SubTag{ru->residue, rv->residue} : SubTag{u, v};
    if (sub.a > sub.b) std::swap(sub.a, sub.b);
    tags.emplace_back(sub);
  }
  return LabeledGraph(Graph::from_edges(n + old_edges.size(), edges), std::move(tags));
}

std::string to_string(const PartLabel& label) {
  switch (label.kind) {
    case PartLabel::Kind::A:
      return "r" + std::to_string(label.index);
    case PartLabel::Kind::U:
      return "u" + std::to_string(label.index);
    case PartLabel::Kind::T:
      return "t" + std::to_string(label.block) + "_" + std::to_string(label.index);
    case PartLabel::Kind::S:
      return "s" + std::to_string(label.block) + "_" + std::to_string(label.index);
  }
  return {};
}

std::optional<PartLabel> parse_part_label(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  const char head = text.front();
  text.remove_prefix(1);
  const auto parse_int = [](std::string_view s) -> std::optional<int> {
    int value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 1) return std::nullopt;
    return value;
  };
  if (head == 'r' || head == 'u') {
    auto i = parse_int(text);
    if (!i) return std::nullopt;
    return head == 'r' ? PartLabel::a(*i) : PartLabel::u(*i);
  }
  if (head == 't' || head == 's') {
    const auto sep = text.find('_');
    if (sep == std::string_view::npos) return std::nullopt;
    auto tau = parse_int(text.substr(0, sep));
    auto i = parse_int(text.substr(sep + 1));
    if (!tau || !i) return std::nullopt;
    return head == 't' ? PartLabel::t(*tau, *i) : PartLabel::s(*tau, *i);
  }
  return std::nullopt;
}

PqPartition::PqPartition(int p, int q, std::vector<PartLabel> label_of)
    : p_(p), q_(q), label_of_(std::move(label_of)) {
  const std::size_t total = static_cast<std::size_t>(p) * q - 1;
  if (label_of_.size() != total) {
    throw BadShape("partition of " + std::to_string(label_of_.size()) + " vertices, expected " +
                   std::to_string(total));
  }
  constexpr VertexId kUnset = ~VertexId{0};
  vertex_of_.assign(total, kUnset);
  for (VertexId v = 0; v < label_of_.size(); ++v) {
    const std::size_t k = slot(label_of_[v]);
    if (vertex_of_[k] != kUnset) throw BadShape("label " + to_string(label_of_[v]) + " used twice");
    vertex_of_[k] = v;
  }
}

std::size_t PqPartition::slot(const PartLabel& label) const {
  const int a_count = q_ - 1;
  const int u_count = p_ - 1;
  const int block_size = q_ - 1;
  const auto fail = [&]() -> std::size_t {
    throw std::out_of_range("label " + to_string(label) + " is outside the (" +
                            std::to_string(p_) + ", " + std::to_string(q_) + ") partition");
  };
  switch (label.kind) {
    case PartLabel::Kind::A:
      if (label.index < 1 || label.index > a_count) return fail();
      return label.index - 1;
    case PartLabel::Kind::U:
      if (label.index < 1 || label.index > u_count) return fail();
      return a_count + label.index - 1;
    case PartLabel::Kind::T:
    case PartLabel::Kind::S: {
      if (label.block < 1 || label.block > half() || label.index < 1 || label.index > block_size) {
        return fail();
      }
      const std::size_t layer = label.kind == PartLabel::Kind::T ? 0 : 1;
      return a_count + u_count + (layer * half() + label.block - 1) * block_size + label.index - 1;
    }
  }
  return fail();
}

bool PqPartition::contains(const PartLabel& label) const {
  try {
    (void)slot(label);
    return true;
  } catch (const std::out_of_range&) {
    return false;
  }
}

VertexId PqPartition::vertex_of(const PartLabel& label) const { return vertex_of_[slot(label)]; }

PqPartition canonical_pq_labeling(const LabeledGraph& bs, int p, int q) {
  require_odd_prime_pair(p, q);
  const Graph& g = bs.graph;
  const std::size_t expected_vertices = static_cast<std::size_t>(p) * q - 1;
  const std::size_t expected_edges = 2 * static_cast<std::size_t>(p - 1) * (q - 1);
  if (g.vertex_count() != expected_vertices || g.edge_count() != expected_edges) {
    throw BadShape("expected " + std::to_string(expected_vertices) + " vertices and " +
                   std::to_string(expected_edges) + " edges, got " +
                   std::to_string(g.vertex_count()) + " and " + std::to_string(g.edge_count()));
  }

  std::vector<std::pair<std::uint64_t, VertexId>> a_side;
  std::vector<std::pair<std::uint64_t, VertexId>> u_side;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto* ring = std::get_if<RingTag>(&bs.tags[v]);
    if (ring == nullptr) continue;
    const bool mult_p = ring->residue % p == 0;
    const bool mult_q = ring->residue % q == 0;
    if (mult_p == mult_q) throw BadShape("ring vertex " + std::to_string(ring->residue) + " is not a zero-divisor of Z_pq");
    if (mult_p && g.degree(v) == static_cast<std::size_t>(p - 1)) {
      a_side.emplace_back(ring->residue, v);
    } else if (mult_q && g.degree(v) == static_cast<std::size_t>(q - 1)) {
      u_side.emplace_back(ring->residue, v);
    } else {
      throw BadShape("ring vertex " + std::to_string(ring->residue) + " has unexpected degree " +
                     std::to_string(g.degree(v)));
    }
  }
  if (a_side.size() != static_cast<std::size_t>(q - 1) ||
      u_side.size() != static_cast<std::size_t>(p - 1)) {
    throw BadShape("expected " + std::to_string(q - 1) + " multiples of p and " +
                   std::to_string(p - 1) + " multiples of q");
  }
  std::sort(a_side.begin(), a_side.end());
  std::sort(u_side.begin(), u_side.end());

  constexpr int kNone = 0;
  std::vector<int> a_index(g.vertex_count(), kNone);
  std::vector<int> u_index(g.vertex_count(), kNone);
  std::vector<PartLabel> labels(g.vertex_count());
  std::vector<char> assigned(g.vertex_count(), 0);
  for (std::size_t i = 0; i < a_side.size(); ++i) {
    const VertexId v = a_side[i].second;
    a_index[v] = static_cast<int>(i + 1);
    labels[v] = PartLabel::a(static_cast<int>(i + 1));
    assigned[v] = 1;
  }
  for (std::size_t t = 0; t < u_side.size(); ++t) {
    const VertexId v = u_side[t].second;
    u_index[v] = static_cast<int>(t + 1);
    labels[v] = PartLabel::u(static_cast<int>(t + 1));
    assigned[v] = 1;
  }

  const int half = (p - 1) / 2;
  std::vector<char> seen_edge(static_cast<std::size_t>(p - 1) * (q - 1), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (assigned[v]) continue;
    const auto nbrs = g.neighbors(v);
    if (nbrs.size() != 2) throw BadShape("subdivision vertex " + bs.label(v) + " does not have degree 2");
    int i = a_index[nbrs[0]] ? a_index[nbrs[0]] : a_index[nbrs[1]];
    int tau = u_index[nbrs[0]] ? u_index[nbrs[0]] : u_index[nbrs[1]];
    if (i == kNone || tau == kNone) {
      throw BadShape("subdivision vertex " + bs.label(v) + " does not join A to U");
    }
    char& seen = seen_edge[static_cast<std::size_t>(tau - 1) * (q - 1) + (i - 1)];
    if (seen) throw BadShape("edge (r" + std::to_string(i) + ", u" + std::to_string(tau) + ") subdivided twice");
    seen = 1;
    labels[v] = tau <= half ? PartLabel::t(tau, i) : PartLabel::s(tau - half, i);
  }
  return PqPartition(p, q, std::move(labels));
}

LabeledGraph apply_part_labels(const LabeledGraph& bs, const PqPartition& partition) {
  std::vector<VertexTag> tags;
  tags.reserve(bs.vertex_count());
  for (VertexId v = 0; v < bs.vertex_count(); ++v) {
    tags.emplace_back(PartTag{to_string(partition.label_of(v))});
  }
  return LabeledGraph(bs.graph, std::move(tags));
}

PqGraph build_pq_graph(int p, int q) {
  require_odd_prime_pair(p, q);
  const LabeledGraph bs = barycentric_subdivision(build_gamma(static_cast<std::uint64_t>(p) * q));
  PqPartition partition = canonical_pq_labeling(bs, p, q);
  LabeledGraph labeled = apply_part_labels(bs, partition);
  return PqGraph{std::move(labeled), std::move(partition)};
}

}  // namespace zdg
