#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mcfl/graph.hpp"

namespace mcfl {

/// Dense bit matrix; row u holds the nodes reachable from u.
class ReachMatrix {
 public:
  ReachMatrix() = default;
  explicit ReachMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  bool get(NodeId u, NodeId v) const { return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u; }
  void set(NodeId u, NodeId v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }
  std::uint64_t* row(NodeId u) { return bits_.data() + u * words_; }
  const std::uint64_t* row(NodeId u) const { return bits_.data() + u * words_; }
  std::size_t words() const { return words_; }
  std::size_t count() const;
  friend bool operator==(const ReachMatrix&, const ReachMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Reflexive-transitive closure ignoring labels; one BFS per source, sources split across threads.
ReachMatrix plain_reachability(const LabeledGraph& g, int threads = 0);

/// Single-threaded reference for plain_reachability.
ReachMatrix plain_reachability_serial(const LabeledGraph& g);

}  // namespace mcfl
