#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcfl/closure.hpp"
#include "mcfl/graph.hpp"
#include "mcfl/normal_form.hpp"

namespace mcfl {

struct EngineConfig {
  bool prune_with_plain_reachability = true;
  /// Contract mutually reachable nodes first; needs `cycle_base` and an insertion-closed grammar.
  bool cycle_elimination = false;
  std::shared_ptr<const NormalGrammar> cycle_base;
  /// Single-pair mode: stop as soon as S[(source, target)] is extracted.
  std::optional<NodePair> target;
  std::uint64_t fact_budget = 50'000'000;
  bool record_justifications = true;
};

struct EngineStats {
  std::uint64_t inserted = 0;
  std::uint64_t extracted = 0;
  std::uint64_t pruned = 0;
  bool early_exit = false;
  std::vector<std::uint64_t> per_nonterminal;
  std::size_t nodes = 0;           ///< nodes of the graph actually solved
  std::size_t original_nodes = 0;  ///< before contraction
};

/// A derived fact A[(u_1, v_1), ..., (u_k, v_k)]; `nodes` is u_1 v_1 ... u_k v_k.
struct FactView {
  NonterminalId nonterminal;
  std::span<const NodeId> nodes;
};

namespace detail {
struct SolveState;
struct Lifting;
}  // namespace detail

class ReachResult {
 public:
  ReachResult();

  /// Start-symbol pairs, sorted. Partial when the run stopped early.
  const std::vector<NodePair>& pairs() const { return pairs_; }
  bool reachable(NodeId u, NodeId v) const;
  const EngineStats& stats() const { return stats_; }

  /// Facts of the solved graph, in insertion order.
  std::size_t fact_count() const;
  FactView fact(std::size_t i) const;
  std::optional<std::size_t> find_fact(NonterminalId a, std::span<const NodeId> nodes) const;
  /// One path per component of fact i. Requires recorded justifications.
  std::vector<PathWitness> fact_witness(std::size_t i) const;
  /// The graph the facts refer to: the input, or its quotient under cycle elimination, with epsilon self-loops.
  const LabeledGraph& solved_graph() const;

  /// A path from p.source to p.target whose label the grammar derives. Throws std::out_of_range if unreachable.
  PathWitness witness(NodePair p) const;

 private:
  friend ReachResult solve(const NormalGrammar&, const LabeledGraph&, const EngineConfig&);
  friend ReachResult solve_contracted(const NormalGrammar&, const LabeledGraph&, const EngineConfig&);
  std::shared_ptr<const detail::SolveState> state_;
  std::shared_ptr<const detail::Lifting> lifting_;
  std::vector<NodePair> pairs_;
  EngineStats stats_;
};

/// Worklist saturation. Throws BudgetExceeded when more than `fact_budget` facts are inserted.
ReachResult solve(const NormalGrammar& g, const LabeledGraph& graph, const EngineConfig& config = {});

PathWitness extract_witness(const ReachResult& result, NodePair p);

/// Whether `w` is in the start language, via a path graph and single-pair search.
bool member(const NormalGrammar& g, std::span<const std::string> w);

/// Combines child facts under a merge rule; nullopt when adjacent components do not meet.
std::optional<std::vector<NodePair>> merge_join(const NormalRuleKind& kind,
                                                std::span<const std::vector<NodePair>> children);

/// Keeps a fact only if every gap v_i -> u_{i+1} is plainly reachable.
bool passes_pruning(const ReachMatrix& reach, std::span<const NodePair> fact);

}  // namespace mcfl
