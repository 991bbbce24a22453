#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

// Replaces every edge {u, v} by a path u - x - v through a fresh vertex x.
// Original vertices keep their ids and tags; the new vertex for the j-th edge
// of g.graph.edges() gets id |V(g)| + j and a SubTag.
LabeledGraph barycentric_subdivision(const LabeledGraph& g);

// One vertex of BS(Γ(Z_pq)) under the four-part split:
//   A  r_i       i in 1..q-1   multiples of p (degree p-1)
//   U  u_tau     tau in 1..p-1 multiples of q (degree q-1)
//   T  t^tau_i   tau in 1..(p-1)/2, on edge (r_i, u_tau)
//   S  s^tau_i   tau in 1..(p-1)/2, on edge (r_i, u_{tau+(p-1)/2})
struct PartLabel {
  enum class Kind { A, U, T, S };
  Kind kind = Kind::A;
  int block = 0;  // tau for T and S; 0 otherwise
  int index = 0;  // i for A, T, S; tau for U

  static PartLabel a(int i) { return {Kind::A, 0, i}; }
  static PartLabel u(int tau) { return {Kind::U, 0, tau}; }
  static PartLabel t(int tau, int i) { return {Kind::T, tau, i}; }
  static PartLabel s(int tau, int i) { return {Kind::S, tau, i}; }

  auto operator<=>(const PartLabel&) const = default;
};

// "r3", "u2", "t1_4", "s2_7".
std::string to_string(const PartLabel& label);
std::optional<PartLabel> parse_part_label(std::string_view text);

class PqPartition {
 public:
  PqPartition(int p, int q, std::vector<PartLabel> label_of);

  int p() const { return p_; }
  int q() const { return q_; }
  int half() const { return (p_ - 1) / 2; }
  std::size_t vertex_count() const { return label_of_.size(); }

  const PartLabel& label_of(VertexId v) const { return label_of_.at(v); }
  bool contains(const PartLabel& label) const;
  // Throws std::out_of_range for labels outside the index ranges.
  VertexId vertex_of(const PartLabel& label) const;

  VertexId r(int i) const { return vertex_of(PartLabel::a(i)); }
  VertexId u(int tau) const { return vertex_of(PartLabel::u(tau)); }
  VertexId t(int tau, int i) const { return vertex_of(PartLabel::t(tau, i)); }
  VertexId s(int tau, int i) const { return vertex_of(PartLabel::s(tau, i)); }

 private:
  std::size_t slot(const PartLabel& label) const;

  int p_;
  int q_;
  std::vector<PartLabel> label_of_;
  std::vector<VertexId> vertex_of_;  // indexed by slot()
};

// Labels bs = BS(Γ(Z_pq)). A and U are indexed by ascending residue; the
// midpoint of (r_i, u_tau) becomes t^tau_i for tau <= (p-1)/2 and
// s^{tau-(p-1)/2}_i otherwise. Throws BadInput for invalid (p, q) and
// BadShape when bs is not the subdivision of Γ(Z_pq).
PqPartition canonical_pq_labeling(const LabeledGraph& bs, int p, int q);

// Copy of bs whose tags are the partition labels.
LabeledGraph apply_part_labels(const LabeledGraph& bs, const PqPartition& partition);

// build_gamma(p*q) -> subdivision -> labeling, with part tags applied.
struct PqGraph {
  LabeledGraph graph;
  PqPartition partition;
};
PqGraph build_pq_graph(int p, int q);

}  // namespace zdg
