#include "zdg/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace zdg {

Graph Graph::from_edges(std::size_t vertex_count,
                        std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                  std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("repeated edge");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adj_.size(); ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (adj_.empty()) return true;
  std::vector<char> seen(adj_.size(), 0);
  std::queue<VertexId> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    for (VertexId v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == adj_.size();
}

std::string tag_label(const VertexTag& tag) {
  struct Visitor {
    std::string operator()(const RingTag& t) const { return std::to_string(t.residue); }
    std::string operator()(const SubTag& t) const {
      return "e" + std::to_string(t.a) + "_" + std::to_string(t.b);
    }
    std::string operator()(const PartTag& t) const { return t.label; }
  };
  return std::visit(Visitor{}, tag);
}

LabeledGraph::LabeledGraph(Graph g, std::vector<VertexTag> t)
    : graph(std::move(g)), tags(std::move(t)) {
  if (tags.size() != graph.vertex_count()) {
    throw std::invalid_argument("tag count " + std::to_string(tags.size()) +
                                " does not match vertex count " +
                                std::to_string(graph.vertex_count()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& tag : tags) {
    if (!seen.insert(tag_label(tag)).second) {
      throw std::invalid_argument("duplicate vertex label '" + tag_label(tag) + "'");
    }
  }
}

std::optional<VertexId> LabeledGraph::find_label(std::string_view label) const {
  for (VertexId v = 0; v < tags.size(); ++v) {
    if (tag_label(tags[v]) == label) return v;
  }
  return std::nullopt;
}

Graph path_graph(std::size_t n) {
  EdgeList edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  EdgeList edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(static_cast<VertexId>(n - 1), 0);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  EdgeList edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  EdgeList edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

LabeledGraph with_id_labels(Graph g) {
  std::vector<VertexTag> tags;
  tags.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    tags.emplace_back(PartTag{"v" + std::to_string(v)});
  }
  return LabeledGraph(std::move(g), std::move(tags));
}

}  // namespace zdg
