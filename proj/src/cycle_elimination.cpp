#include "mcfl/cycle_elimination.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "engine_state.hpp"

namespace mcfl {
namespace detail {

PathWitness lifted_witness(const Lifting& lift, const SolveState& quotient, NodePair p) {
  const auto& ce = lift.elimination;
  const LabeledGraph& original = lift.original;
  const std::size_t n = original.node_count();
  std::vector<std::vector<NodeId>> mutual(n);
  for (const auto& m : ce.mutual) mutual[m.source].push_back(m.target);

  PathWitness out;
  out.source = p.source;
  out.target = p.target;
  auto connect = [&](NodeId a, NodeId b) {
    if (a == b) return;
    std::vector<NodeId> prev(n, static_cast<NodeId>(n));
    std::deque<NodeId> queue{a};
    prev[a] = a;
    while (!queue.empty() && prev[b] == n) {
      NodeId x = queue.front();
      queue.pop_front();
      for (NodeId y : mutual[x])
        if (prev[y] == n) {
          prev[y] = x;
          queue.push_back(y);
        }
    }
    if (prev[b] == n) throw std::logic_error("contracted nodes are not connected");
    std::vector<NodeId> hops{b};
    while (hops.back() != a) hops.push_back(prev[hops.back()]);
    for (std::size_t i = hops.size() - 1; i > 0; --i) {
      auto seg = ce.base_result.witness({hops[i], hops[i - 1]});
      out.edges.insert(out.edges.end(), seg.edges.begin(), seg.edges.end());
    }
  };

  const auto& rep = ce.map.representative;
  NodeId key[2] = {lift.original_to_quotient[rep[p.source]], lift.original_to_quotient[rep[p.target]]};
  auto f = quotient.find(quotient.start, key, 2);
  if (f < 0) throw std::out_of_range("pair is not reachable");
  auto paths = quotient.paths(static_cast<std::uint32_t>(f));
  NodeId at = p.source;
  for (EdgeId qe : paths.front()) {
    if (qe >= ce.quotient.edge_count()) continue;
    const EdgeId oe = ce.edge_origin[qe];
    const Edge& x = original.edges()[oe];
    connect(at, x.src);
    out.edges.push_back({x.src, original.label_name(x.label), x.dst});
    at = x.dst;
  }
  connect(at, p.target);
  return out;
}

}  // namespace detail

CycleElimination cycle_eliminate(const LabeledGraph& graph, const NormalGrammar& base) {
  CycleElimination ce;
  ce.base_result = solve(base, graph);
  const std::size_t n = graph.node_count();
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& pr : ce.base_result.pairs()) {
    if (pr.source == pr.target || !ce.base_result.reachable(pr.target, pr.source)) continue;
    ce.mutual.push_back(pr);
    NodeId a = find(pr.source);
    NodeId b = find(pr.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  ce.map.representative.resize(n);
  for (NodeId v = 0; v < n; ++v) ce.map.representative[v] = find(v);
  ce.quotient = contract(graph, ce.map, &ce.edge_origin);
  return ce;
}

ReachResult solve_contracted(const NormalGrammar& g, const LabeledGraph& graph, const EngineConfig& config) {
  if (!config.cycle_base) throw std::invalid_argument("cycle elimination needs a base grammar");
  auto lift = std::make_shared<detail::Lifting>();
  lift->original = graph;
  lift->elimination = cycle_eliminate(graph, *config.cycle_base);
  const auto& ce = lift->elimination;
  const std::size_t n = graph.node_count();
  lift->original_to_quotient.assign(n, 0);
  lift->quotient_to_original.resize(ce.quotient.node_count());
  for (NodeId q = 0; q < ce.quotient.node_count(); ++q) {
    NodeId o = *graph.find_node(ce.quotient.node_name(q));
    lift->quotient_to_original[q] = o;
    lift->original_to_quotient[o] = q;
  }
  std::vector<std::vector<NodeId>> members(ce.quotient.node_count());
  for (NodeId v = 0; v < n; ++v) members[lift->original_to_quotient[ce.map.representative[v]]].push_back(v);

  EngineConfig qcfg = config;
  qcfg.cycle_elimination = false;
  if (config.target) {
    const auto& rep = ce.map.representative;
    qcfg.target = NodePair{lift->original_to_quotient[rep[config.target->source]],
                           lift->original_to_quotient[rep[config.target->target]]};
  }
  ReachResult q = solve(g, ce.quotient, qcfg);

  ReachResult result;
  result.state_ = q.state_;
  result.stats_ = q.stats_;
  result.stats_.original_nodes = n;
  for (const auto& pr : q.pairs())
    for (NodeId u : members[pr.source])
      for (NodeId v : members[pr.target]) result.pairs_.push_back({u, v});
  std::sort(result.pairs_.begin(), result.pairs_.end());
  result.lifting_ = std::move(lift);
  return result;
}

}  // namespace mcfl
