#pragma once

#include <cstdint>
#include <vector>

#include "mcfl/cycle_elimination.hpp"
#include "mcfl/engine.hpp"

namespace mcfl::detail {

enum class Origin : std::uint8_t { initial, epsilon, prepend, append, insert, merge };

struct Justification {
  Origin origin;
  std::uint8_t side;   ///< epsilon: 0 extends u, 1 extends v
  std::uint16_t slot;  ///< component, insertion index, or child count for merge
  std::uint32_t parent;  ///< parent fact, or offset into `children` for merge
  std::uint32_t edge;
  std::uint32_t rule;
};

struct SolveState {
  LabeledGraph graph;
  NonterminalId start = -1;
  std::vector<std::vector<std::vector<VarRef>>> plans;
  std::vector<NonterminalId> fact_nt;
  std::vector<std::uint32_t> fact_offset;
  std::vector<NodeId> arena;
  std::vector<Justification> just;
  std::vector<std::uint32_t> children;
  std::vector<std::uint32_t> table;
  std::uint64_t table_mask = 0;

  std::size_t arity(std::size_t f) const {
    std::size_t end = f + 1 < fact_offset.size() ? fact_offset[f + 1] : arena.size();
    return (end - fact_offset[f]) / 2;
  }
  const NodeId* nodes(std::size_t f) const { return arena.data() + fact_offset[f]; }
  std::int64_t find(NonterminalId a, const NodeId* nodes, std::size_t len) const;
  std::vector<std::vector<EdgeId>> paths(std::uint32_t f) const;
};

struct Lifting {
  LabeledGraph original;
  CycleElimination elimination;
  std::vector<NodeId> quotient_to_original;
  std::vector<NodeId> original_to_quotient;
};

std::uint64_t hash_fact(NonterminalId a, const NodeId* nodes, std::size_t len);

PathWitness lifted_witness(const Lifting& lift, const SolveState& quotient, NodePair p);

}  // namespace mcfl::detail
