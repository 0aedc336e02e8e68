#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace mcfl {

using NodeId = std::uint32_t;
using LabelId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Label id 0 is always the empty label, spelled @eps.
inline constexpr LabelId kEpsilon = 0;

struct Edge {
  NodeId src;
  LabelId label;
  NodeId dst;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct NodePair {
  NodeId source;
  NodeId target;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

/// Directed edge-labelled graph with interned node names and labels. Parallel duplicates are dropped.
class LabeledGraph {
 public:
  LabeledGraph();

  NodeId add_node(std::string_view name);
  std::optional<NodeId> find_node(std::string_view name) const;
  LabelId intern_label(std::string_view label);
  std::optional<LabelId> find_label(std::string_view label) const;

  /// Returns false when the edge already exists.
  bool add_edge(NodeId src, LabelId label, NodeId dst);
  bool add_edge(std::string_view src, std::string_view label, std::string_view dst);

  std::size_t node_count() const { return node_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t label_count() const { return labels_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& node_name(NodeId v) const { return node_names_[v]; }
  const std::string& label_name(LabelId l) const { return labels_[l]; }
  std::span<const EdgeId> out_edges(NodeId v) const { return out_[v]; }
  std::span<const EdgeId> in_edges(NodeId v) const { return in_[v]; }
  bool has_edge(NodeId src, LabelId label, NodeId dst) const;
  std::size_t max_degree() const;

 private:
  std::vector<std::string> node_names_;
  std::unordered_map<std::string, NodeId> node_ids_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, LabelId> label_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

/**
 * One edge per line: `src label dst`, or `src dst` for an epsilon edge. `@eps` is the
 * empty label. Lines starting with `#` are comments, as is anything after a fourth
 * field starting with `#`. Duplicate edges are reported in `warnings` and dropped.
 * Throws ParseError.
 */
LabeledGraph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
LabeledGraph parse_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Edges sorted by (src, label, dst) names.
std::string format_graph(const LabeledGraph& g);

/// Copy with an epsilon self-loop on every node.
LabeledGraph add_epsilon_selfloops(const LabeledGraph& g);

/// Path graph 0 -w1-> 1 -w2-> ... -> |w|; the node named i has id i.
LabeledGraph string_to_path_graph(std::span<const std::string> w);

/// Maps every node to the representative of its class.
struct ContractionMap {
  std::vector<NodeId> representative;
};

/// Quotient by `map`; node names are those of the representatives.
/// `edge_origin`, if given, receives one original edge id per quotient edge.
LabeledGraph contract(const LabeledGraph& g, const ContractionMap& map, std::vector<EdgeId>* edge_origin = nullptr);

struct WitnessEdge {
  NodeId src;
  std::string label;
  NodeId dst;
};

/// A path; `edges` may include epsilon steps, `labels()` drops them.
struct PathWitness {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<WitnessEdge> edges;

  std::vector<std::string> labels() const;
  bool is_contiguous() const;
};

}  // namespace mcfl
