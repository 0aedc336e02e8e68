#pragma once

#include <vector>

#include "mcfl/engine.hpp"
#include "mcfl/graph.hpp"
#include "mcfl/normal_form.hpp"

namespace mcfl {

struct CycleElimination {
  LabeledGraph quotient;
  ContractionMap map;
  std::vector<EdgeId> edge_origin;  ///< original edge behind each quotient edge
  std::vector<NodePair> mutual;     ///< pairs u != v with u ->* v and v ->* u under `base`
  ReachResult base_result;
};

/**
 * Groups nodes that reach each other under `base` (normally the one-dimensional
 * insertion-closed family) and contracts each group to its smallest node id.
 * Reachability under any grammar closed under insertion of base strings is
 * preserved by lifting pairs through the map.
 */
CycleElimination cycle_eliminate(const LabeledGraph& graph, const NormalGrammar& base);

/// solve() with contraction; called by solve() when EngineConfig::cycle_elimination is set.
ReachResult solve_contracted(const NormalGrammar& g, const LabeledGraph& graph, const EngineConfig& config);

}  // namespace mcfl
