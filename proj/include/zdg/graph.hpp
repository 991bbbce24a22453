#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace zdg {

using VertexId = std::uint32_t;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Simple undirected graph with sorted, symmetric adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adj_(vertex_count) {}

  // Rejects self-loops, repeated edges, and out-of-range endpoints
  // (std::invalid_argument). Edge orientation does not matter.
  static Graph from_edges(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  // Every edge once as (u, v) with u < v, sorted lexicographically.
  EdgeList edges() const;

  bool is_connected() const;

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

// Vertex of Γ(Z_n): the residue it stands for.
struct RingTag {
  std::uint64_t residue = 0;
  auto operator<=>(const RingTag&) const = default;
};

// Vertex inserted on edge {a, b} by a subdivision, a < b. The endpoints are
// recorded by residue when the original vertices were Ring-tagged and by
// vertex id otherwise.
struct SubTag {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  auto operator<=>(const SubTag&) const = default;
};

// Free-form name, used for the r/u/t/s partition labels.
struct PartTag {
  std::string label;
  auto operator<=>(const PartTag&) const = default;
};

using VertexTag = std::variant<RingTag, SubTag, PartTag>;

// "12" for Ring, "e3_5" for Sub, the label itself for Part.
std::string tag_label(const VertexTag& tag);

struct LabeledGraph {
  Graph graph;
  std::vector<VertexTag> tags;

  LabeledGraph() = default;
  // Throws std::invalid_argument when tags do not match the vertex count or
  // two vertices share a label.
  LabeledGraph(Graph g, std::vector<VertexTag> t);

  std::size_t vertex_count() const { return graph.vertex_count(); }
  std::string label(VertexId v) const { return tag_label(tags.at(v)); }
  std::optional<VertexId> find_label(std::string_view label) const;
};

// Handy fixtures for tests and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

// Labels every vertex with its id ("v0", "v1", ...).
LabeledGraph with_id_labels(Graph g);

}  // namespace zdg
