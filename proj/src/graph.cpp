#include "mcfl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "mcfl/errors.hpp"
#include "mcfl/grammar.hpp"

namespace mcfl {
namespace {

std::uint64_t edge_key(NodeId s, LabelId l, NodeId d) {
  std::uint64_t h = s;
  h = h * 0x9e3779b97f4a7c15ull ^ l;
  h = h * 0xbf58476d1ce4e5b9ull ^ d;
  return h;
}

}  // namespace

LabeledGraph::LabeledGraph() { intern_label(kEpsilonToken); }

NodeId LabeledGraph::add_node(std::string_view name) {
  auto it = node_ids_.find(std::string(name));
  if (it != node_ids_.end()) return it->second;
  auto id = static_cast<NodeId>(node_names_.size());
  node_names_.emplace_back(name);
  node_ids_.emplace(std::string(name), id);
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

std::optional<NodeId> LabeledGraph::find_node(std::string_view name) const {
  auto it = node_ids_.find(std::string(name));
  if (it == node_ids_.end()) return std::nullopt;
  return it->second;
}

LabelId LabeledGraph::intern_label(std::string_view label) {
  auto it = label_ids_.find(std::string(label));
  if (it != label_ids_.end()) return it->second;
  auto id = static_cast<LabelId>(labels_.size());
  labels_.emplace_back(label);
  label_ids_.emplace(std::string(label), id);
  return id;
}

std::optional<LabelId> LabeledGraph::find_label(std::string_view label) const {
  auto it = label_ids_.find(std::string(label));
  if (it == label_ids_.end()) return std::nullopt;
  return it->second;
}

bool LabeledGraph::has_edge(NodeId src, LabelId label, NodeId dst) const {
  if (!edge_keys_.count(edge_key(src, label, dst))) return false;
  for (EdgeId e : out_[src])
    if (edges_[e].label == label && edges_[e].dst == dst) return true;
  return false;
}

bool LabeledGraph::add_edge(NodeId src, LabelId label, NodeId dst) {
  if (has_edge(src, label, dst)) return false;
  auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({src, label, dst});
  out_[src].push_back(id);
  in_[dst].push_back(id);
  edge_keys_.insert(edge_key(src, label, dst));
  return true;
}

bool LabeledGraph::add_edge(std::string_view src, std::string_view label, std::string_view dst) {
  NodeId s = add_node(src);
  NodeId d = add_node(dst);
  return add_edge(s, intern_label(label), d);
}

std::size_t LabeledGraph::max_degree() const {
  std::size_t m = 0;
  for (std::size_t v = 0; v < node_count(); ++v) m = std::max(m, out_[v].size() + in_[v].size());
  return m;
}

LabeledGraph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  LabeledGraph g;
  std::size_t lineno = 0;
  std::size_t begin = 0;
  while (begin < text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string line(text.substr(begin, end - begin));
    begin = end + 1;
    std::istringstream in(line);
    std::vector<std::string> fields;
    for (std::string f; in >> f;) fields.push_back(f);
    if (fields.empty() || fields[0][0] == '#') continue;
    if (fields.size() > 3) {
      if (fields[3][0] != '#')
        throw ParseError(ParseError::Kind::syntax, lineno, line.find(fields[3]) + 1, "too many fields");
      fields.resize(3);
    }
    if (fields.size() == 1) throw ParseError(ParseError::Kind::syntax, lineno, 1, "expected 'src label dst'");
    if (fields.size() == 2) fields = {fields[0], std::string(kEpsilonToken), fields[1]};
    if (!g.add_edge(fields[0], fields[1], fields[2]) && warnings)
      warnings->push_back("line " + std::to_string(lineno) + ": duplicate edge " + fields[0] + " " + fields[1] + " " +
                          fields[2]);
  }
  return g;
}

LabeledGraph parse_graph_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseError::Kind::syntax, 0, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str(), warnings);
}

std::string format_graph(const LabeledGraph& g) {
  std::vector<std::tuple<std::string, std::string, std::string>> rows;
  for (const auto& e : g.edges()) rows.emplace_back(g.node_name(e.src), g.label_name(e.label), g.node_name(e.dst));
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [s, l, d] : rows) out += s + " " + l + " " + d + "\n";
  return out;
}

LabeledGraph add_epsilon_selfloops(const LabeledGraph& g) {
  LabeledGraph out = g;
  for (NodeId v = 0; v < g.node_count(); ++v) out.add_edge(v, kEpsilon, v);
  return out;
}

LabeledGraph string_to_path_graph(std::span<const std::string> w) {
  LabeledGraph g;
  for (std::size_t i = 0; i <= w.size(); ++i) g.add_node(std::to_string(i));
  for (std::size_t i = 0; i < w.size(); ++i)
    g.add_edge(static_cast<NodeId>(i), g.intern_label(w[i]), static_cast<NodeId>(i + 1));
  return g;
}

LabeledGraph contract(const LabeledGraph& g, const ContractionMap& map, std::vector<EdgeId>* edge_origin) {
  LabeledGraph out;
  for (LabelId l = 1; l < g.label_count(); ++l) out.intern_label(g.label_name(l));
  std::vector<NodeId> image(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    NodeId rep = map.representative[v];
    if (rep == v) image[v] = out.add_node(g.node_name(v));
  }
  for (NodeId v = 0; v < g.node_count(); ++v) image[v] = image[map.representative[v]];
  if (edge_origin) edge_origin->clear();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& x = g.edges()[e];
    if (out.add_edge(image[x.src], x.label, image[x.dst]) && edge_origin) edge_origin->push_back(e);
  }
  return out;
}

std::vector<std::string> PathWitness::labels() const {
  std::vector<std::string> out;
  for (const auto& e : edges)
    if (e.label != kEpsilonToken) out.push_back(e.label);
  return out;
}

bool PathWitness::is_contiguous() const {
  NodeId at = source;
  for (const auto& e : edges) {
    if (e.src != at) return false;
    at = e.dst;
  }
  return at == target;
}

}  // namespace mcfl
