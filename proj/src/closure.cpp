#include "mcfl/closure.hpp"

#include <omp.h>

#include <bit>

namespace mcfl {

std::size_t ReachMatrix::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

namespace {

std::vector<std::vector<NodeId>> successors(const LabeledGraph& g) {
  std::vector<std::vector<NodeId>> succ(g.node_count());
  for (const auto& e : g.edges()) succ[e.src].push_back(e.dst);
  return succ;
}

void bfs_row(const std::vector<std::vector<NodeId>>& succ, NodeId s, ReachMatrix& m, std::vector<NodeId>& stack) {
  stack.clear();
  m.set(s, s);
  stack.push_back(s);
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : succ[u]) {
      if (m.get(s, v)) continue;
      m.set(s, v);
      stack.push_back(v);
    }
  }
}

}  // namespace

ReachMatrix plain_reachability(const LabeledGraph& g, int threads) {
  const auto succ = successors(g);
  const auto n = static_cast<std::int64_t>(g.node_count());
  ReachMatrix m(g.node_count());
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    std::vector<NodeId> stack;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < n; ++s) bfs_row(succ, static_cast<NodeId>(s), m, stack);
  }
  return m;
}

ReachMatrix plain_reachability_serial(const LabeledGraph& g) {
  const auto succ = successors(g);
  ReachMatrix m(g.node_count());
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.node_count(); ++s) bfs_row(succ, s, m, stack);
  return m;
}

}  // namespace mcfl
