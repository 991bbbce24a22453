#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zdg/graph.hpp"
#include "zdg/metric.hpp"
#include "zdg/papersets.hpp"
#include "zdg/solver.hpp"

namespace zdg::io {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Dot, GraphMl };
std::optional<Format> parse_format(std::string_view name);

// {"n": n?, "vertices": [{"id", "label", "residue" | "sub"}], "edges": [[u, v], ...]}
// with edges sorted, u < v. "n" is written only when given.
Json graph_to_json(const LabeledGraph& g, std::optional<std::uint64_t> n = std::nullopt);
// Inverse of graph_to_json. Throws BadInput on malformed documents.
LabeledGraph graph_from_json(const Json& doc);

// "source,target" rows by label.
std::string graph_to_csv(const LabeledGraph& g);
std::string graph_to_dot(const LabeledGraph& g);
std::string graph_to_graphml(const LabeledGraph& g);
std::string write_graph(const LabeledGraph& g, Format format,
                        std::optional<std::uint64_t> n = std::nullopt);

// Plain text: "n <count>", optional "v <id> <label>" lines, then one "u v"
// line per edge. '#' starts a comment.
std::string graph_to_edge_list(const LabeledGraph& g);
// Unlabeled vertices get "v<id>". Throws BadInput on malformed input.
LabeledGraph read_edge_list(std::istream& in);
// JSON when the first non-blank character is '{', edge list otherwise.
LabeledGraph read_graph_file(const std::string& path);

Json report_to_json(const SolveReport& report, const LabeledGraph& g);

// Header "vertex,<landmark labels>", then one row per vertex in id order.
std::string codes_csv(const LabeledGraph& g, const LandmarkSet& landmarks, const DistanceMatrix& d);

Json lemma_to_json(const LemmaReport& report, const LabeledGraph& g);
Json record_to_json(const VerificationRecord& rec);
std::string records_csv_header();
std::string record_csv_row(const VerificationRecord& rec);

}  // namespace zdg::io
