#include "zdg/io.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>

#include "zdg/errors.hpp"

namespace zdg::io {
namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

LabeledGraph make_labeled(std::size_t n, const EdgeList& edges, std::vector<VertexTag> tags) {
  try {
    return LabeledGraph(Graph::from_edges(n, edges), std::move(tags));
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
}

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json landmarks_json(const LandmarkSet& w, const LabeledGraph& g) {
  Json out = Json::array();
  for (VertexId v : w.vertices()) out.push_back(g.label(v));
  return out;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "dot") return Format::Dot;
  if (name == "graphml") return Format::GraphMl;
  return std::nullopt;
}

Json graph_to_json(const LabeledGraph& g, std::optional<std::uint64_t> n) {
  Json doc;
  if (n) doc["n"] = *n;
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Json item;
    item["id"] = v;
    if (const auto* ring = std::get_if<RingTag>(&g.tags[v])) {
      item["residue"] = ring->residue;
    } else if (const auto* sub = std::get_if<SubTag>(&g.tags[v])) {
      item["sub"] = {sub->a, sub->b};
    }
    item["label"] = g.label(v);
    vertices.push_back(std::move(item));
  }
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& [u, v] : g.graph.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc;
}

LabeledGraph graph_from_json(const Json& doc) {
  try {
    const Json& vertices = doc.at("vertices");
    if (!vertices.is_array()) throw BadInput("\"vertices\" must be an array");
    const std::size_t n = vertices.size();
    std::vector<std::optional<VertexTag>> slots(n);
    for (const Json& item : vertices) {
      const auto id = item.at("id").get<std::uint64_t>();
      if (id >= n) throw BadInput("vertex id " + std::to_string(id) + " out of range");
      if (slots[id]) throw BadInput("vertex id " + std::to_string(id) + " listed twice");
      if (item.contains("residue")) {
        slots[id] = RingTag{item["residue"].get<std::uint64_t>()};
      } else if (item.contains("sub")) {
        const Json& sub = item["sub"];
        if (!sub.is_array() || sub.size() != 2) throw BadInput("\"sub\" must be a pair");
        slots[id] = SubTag{sub[0].get<std::uint64_t>(), sub[1].get<std::uint64_t>()};
      } else if (item.contains("label")) {
        slots[id] = PartTag{item["label"].get<std::string>()};
      } else {
        slots[id] = PartTag{"v" + std::to_string(id)};
      }
    }
    std::vector<VertexTag> tags;
    tags.reserve(n);
    for (auto& slot : slots) tags.push_back(std::move(*slot));
    EdgeList edges;
    for (const Json& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw BadInput("edges must be [u, v] pairs");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return make_labeled(n, edges, std::move(tags));
  } catch (const nlohmann::json::exception& e) {
    throw BadInput(std::string("malformed graph document: ") + e.what());
  }
}

std::string graph_to_csv(const LabeledGraph& g) {
  std::string out = "source,target\n";
  for (const auto& [u, v] : g.graph.edges()) out += g.label(u) + "," + g.label(v) + "\n";
  return out;
}

std::string graph_to_dot(const LabeledGraph& g) {
  std::string out = "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + g.label(v) + "\"];\n";
  }
  for (const auto& [u, v] : g.graph.edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string graph_to_graphml(const LabeledGraph& g) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += "    <node id=\"n" + std::to_string(v) + "\"><data key=\"label\">" +
           xml_escape(g.label(v)) + "</data></node>\n";
  }
  for (const auto& [u, v] : g.graph.edges()) {
    out += "    <edge source=\"n" + std::to_string(u) + "\" target=\"n" + std::to_string(v) + "\"/>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string write_graph(const LabeledGraph& g, Format format, std::optional<std::uint64_t> n) {
  switch (format) {
    case Format::Json:
      return graph_to_json(g, n).dump(2) + "\n";
    case Format::Csv:
      return graph_to_csv(g);
    case Format::Dot:
      return graph_to_dot(g);
    case Format::GraphMl:
      return graph_to_graphml(g);
  }
  return {};
}

std::string graph_to_edge_list(const LabeledGraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += "v " + std::to_string(v) + " " + g.label(v) + "\n";
  }
  for (const auto& [u, v] : g.graph.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

LabeledGraph read_edge_list(std::istream& in) {
  std::optional<std::size_t> declared;
  std::vector<std::pair<VertexId, std::string>> labels;
  EdgeList edges;
  std::size_t max_id = 0;
  bool any_vertex = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    const auto fail = [&]() -> BadInput {
      return BadInput("edge list line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    };
    std::string extra;
    if (head == "n") {
      std::size_t count = 0;
      if (!(fields >> count) || (fields >> extra)) throw fail();
      declared = count;
    } else if (head == "v") {
      VertexId id = 0;
      std::string label;
      if (!(fields >> id >> label) || (fields >> extra)) throw fail();
      labels.emplace_back(id, label);
      max_id = std::max<std::size_t>(max_id, id);
      any_vertex = true;
    } else {
      std::istringstream pair(line);
      long long u = -1;
      long long v = -1;
      if (!(pair >> u >> v) || (pair >> extra) || u < 0 || v < 0) throw fail();
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      max_id = std::max<std::size_t>(max_id, static_cast<std::size_t>(std::max(u, v)));
      any_vertex = true;
    }
  }
  const std::size_t n = declared ? *declared : (any_vertex ? max_id + 1 : 0);
  std::vector<VertexTag> tags;
  tags.reserve(n);
  for (std::size_t v = 0; v < n; ++v) tags.emplace_back(PartTag{"v" + std::to_string(v)});
  for (const auto& [id, label] : labels) {
    if (id >= n) throw BadInput("vertex " + std::to_string(id) + " out of range");
    tags[id] = PartTag{label};
  }
  return make_labeled(n, edges, std::move(tags));
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw BadInput(path + ": " + e.what());
    }
    return graph_from_json(doc);
  }
  std::istringstream stream(text);
  return read_edge_list(stream);
}

Json report_to_json(const SolveReport& report, const LabeledGraph& g) {
  Json doc;
  doc["kind"] = report.k == 1 ? "dim" : "fdim";
  doc["optimum"] = optional_json(report.optimum);
  doc["witness"] = report.witness ? landmarks_json(*report.witness, g) : Json(nullptr);
  doc["lower_bound"] = report.lower_bound;
  doc["upper_bound"] = report.upper_bound;
  doc["status"] = to_string(report.status);
  doc["nodes"] = report.nodes;
  doc["millis"] = static_cast<double>(report.elapsed.count()) / 1000.0;
  doc["witness_lex_min"] = report.witness_lex_min;
  doc["forced"] = report.forced;
  doc["reduced_pairs"] = report.reduced_pairs;
  return doc;
}

std::string codes_csv(const LabeledGraph& g, const LandmarkSet& landmarks, const DistanceMatrix& d) {
  std::string out = "vertex";
  for (VertexId w : landmarks.vertices()) out += "," + g.label(w);
  out += "\n";
  const CodeTable table(landmarks, d);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += g.label(v);
    for (Distance x : table.row(v)) out += "," + std::to_string(x);
    out += "\n";
  }
  return out;
}

Json lemma_to_json(const LemmaReport& report, const LabeledGraph& g) {
  Json doc;
  doc["p"] = report.p;
  doc["q"] = report.q;
  doc["bases"] = report.bases;
  Json claims = Json::array();
  for (const ClaimReport& c : report.claims) {
    Json item;
    item["claim"] = c.claim;
    item["statement"] = c.statement;
    item["decidable"] = c.decidable;
    item["evaluated"] = c.evaluated;
    if (c.decidable) {
      item["satisfied"] = c.satisfied;
      item["holds"] = c.holds();
    } else {
      item["satisfied"] = nullptr;
      item["holds"] = nullptr;
    }
    Json examples = Json::array();
    for (const LandmarkSet& w : c.counterexamples) examples.push_back(landmarks_json(w, g));
    item["counterexamples"] = std::move(examples);
    Json hist = Json::object();
    for (const auto& [key, count] : c.histogram) hist[key] = count;
    item["histogram"] = std::move(hist);
    claims.push_back(std::move(item));
  }
  doc["claims"] = std::move(claims);
  return doc;
}

Json record_to_json(const VerificationRecord& rec) {
  Json doc;
  doc["p"] = rec.p;
  doc["q"] = rec.q;
  doc["case"] = to_string(rec.theorem_case);
  doc["expected_dim"] = optional_json(rec.expected.dim);
  doc["expected_fdim"] = optional_json(rec.expected.fdim);
  if (rec.expected.dim_strictly_above) doc["dim_strictly_above"] = *rec.expected.dim_strictly_above;
  if (rec.expected.fdim_strictly_above) doc["fdim_strictly_above"] = *rec.expected.fdim_strictly_above;
  doc["e_set"] = rec.e_labels;
  doc["e_is_ftrs"] = rec.e_is_ftrs;
  const auto solver = [](const std::optional<SolveReport>& r) -> Json {
    if (!r) return nullptr;
    Json s;
    s["status"] = to_string(r->status);
    s["optimum"] = optional_json(r->optimum);
    s["lower_bound"] = r->lower_bound;
    s["upper_bound"] = r->upper_bound;
    s["nodes"] = r->nodes;
    s["millis"] = static_cast<double>(r->elapsed.count()) / 1000.0;
    return s;
  };
  doc["solver_dim"] = solver(rec.solver_dim);
  doc["solver_fdim"] = solver(rec.solver_fdim);
  doc["dim_bracket"] = {rec.dim_lower, optional_json(rec.dim_upper)};
  doc["fdim_bracket"] = {rec.fdim_lower, optional_json(rec.fdim_upper)};
  doc["bracket_closed"] = rec.bracket_closed;
  doc["verdict"] = to_string(rec.verdict);
  doc["notes"] = rec.notes;
  return doc;
}

std::string records_csv_header() {
  return "p,q,case,expected_dim,expected_fdim,e_size,e_is_ftrs,dim_status,dim_lower,dim_upper,"
         "fdim_status,fdim_lower,fdim_upper,bracket_closed,verdict\n";
}

std::string record_csv_row(const VerificationRecord& rec) {
  const auto opt = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  const auto status = [](const std::optional<SolveReport>& r) {
    return r ? std::string(to_string(r->status)) : std::string("NotRun");
  };
  std::string row;
  row += std::to_string(rec.p) + "," + std::to_string(rec.q) + ",";
  row += std::string(to_string(rec.theorem_case)) + ",";
  row += opt(rec.expected.dim) + "," + opt(rec.expected.fdim) + ",";
  row += (rec.e_set ? std::to_string(rec.e_set->size()) : std::string()) + ",";
  row += std::string(rec.e_is_ftrs ? "true" : "false") + ",";
  row += status(rec.solver_dim) + "," + std::to_string(rec.dim_lower) + "," + opt(rec.dim_upper) + ",";
  row += status(rec.solver_fdim) + "," + std::to_string(rec.fdim_lower) + "," + opt(rec.fdim_upper) + ",";
  row += std::string(rec.bracket_closed ? "true" : "false") + ",";
  row += std::string(to_string(rec.verdict)) + "\n";
  return row;
}

}  // namespace zdg::io
