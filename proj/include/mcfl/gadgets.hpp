#pragma once

#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcfl/grammar.hpp"
#include "mcfl/graph.hpp"

namespace mcfl {

/// k sets of m vectors in {0,1}^b; sets[i][j][c] is coordinate c of vector j of set i.
struct OVInstance {
  int k = 0;
  int m = 0;
  int b = 0;
  std::vector<std::vector<std::vector<int>>> sets;
};

/// Marker tokens of the encoding: #<i> and |<2i-1><2i>.
std::string ov_hash(int i);
std::string ov_bar(int i);

/// Grammar of dimension k/2 deriving exactly the encodings of instances with an orthogonal k-tuple. k must be even.
Grammar ov_grammar(int k);

/// #1 w^1 |12 w^2 w^3 |34 w^4 ... ; odd sets list reversed vectors each followed by #i, even sets each preceded by #i.
std::vector<std::string> ov_encode(const OVInstance& inst);

/// Some choice of one vector per set has coordinate-wise product zero everywhere.
bool ov_brute(const OVInstance& inst);

OVInstance random_ov(int k, int m, int b, std::mt19937_64& rng);

/// One 0/1 row per vector, blank lines between sets. Throws ParseError.
OVInstance parse_ov_vectors(std::string_view text, int k);

/// Undirected simple graph on nodes 0..n-1.
struct TriangleInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct TriangleGadget {
  Grammar grammar;
  LabeledGraph graph;
  NodeId source = 0;
  NodeId target = 0;
};

/// Reduction to reachability under {0^n 1^n}: source reaches target iff the graph has a triangle.
TriangleGadget triangle_gadget(const TriangleInstance& inst);
bool triangle_brute(const TriangleInstance& inst);

TriangleInstance random_graph(int n, double p, std::mt19937_64& rng);

/// One `a b` pair per line; node names are numbered in order of appearance. Throws ParseError.
TriangleInstance parse_undirected_graph(std::string_view text, std::vector<std::string>* names = nullptr);

}  // namespace mcfl
