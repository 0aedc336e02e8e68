#include <gtest/gtest.h>

#include <random>

#include "mcfl/engine.hpp"
#include "mcfl/errors.hpp"
#include "mcfl/gadgets.hpp"
#include "support.hpp"

using namespace mcfl;

namespace {

OVInstance ov_sample() {
  return {2, 2, 3, {{{1, 1, 0}, {0, 1, 0}}, {{0, 1, 1}, {1, 0, 1}}}};
}

bool solve_gadget(const TriangleGadget& t) {
  EngineConfig cfg;
  cfg.target = NodePair{t.source, t.target};
  cfg.record_justifications = false;
  return solve(normalize(t.grammar), t.graph, cfg).reachable(t.source, t.target);
}

// Trace of A^3 is nonzero iff some closed walk of length 3 exists.
bool cube_check(const TriangleInstance& g) {
  std::vector<std::vector<long>> a(g.n, std::vector<long>(g.n, 0));
  for (auto [u, v] : g.edges) a[u][v] = a[v][u] = 1;
  long trace = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      for (int k = 0; k < g.n; ++k) trace += a[i][j] * a[j][k] * a[k][i];
  return trace > 0;
}

}  // namespace

TEST(OVGrammar, Shape) {
  auto g2 = ov_grammar(2);
  EXPECT_EQ(g2.dimension(), 1);
  EXPECT_EQ(g2.rank(), 1);
  bool basic = false;
  for (const auto& r : g2.rules())
    if (r.is_basic() && format_rule(g2, r) == "A('|12')") basic = true;
  EXPECT_TRUE(basic) << format_grammar(g2);
  auto g4 = ov_grammar(4);
  EXPECT_EQ(g4.dimension(), 2);
  EXPECT_EQ(g4.rank(), 1);
  EXPECT_TRUE(validate(g4, {true, true}).empty());
  EXPECT_THROW(ov_grammar(3), std::invalid_argument);
}

TEST(OVEncode, Sample) {
  EXPECT_EQ(test::join(ov_encode(ov_sample())), "#1 0 1 1 #1 0 1 0 #1 |12 #2 0 1 1 #2 1 0 1");
}

TEST(OVEncode, Single) {
  OVInstance inst{2, 1, 1, {{{0}}, {{0}}}};
  EXPECT_EQ(test::join(ov_encode(inst)), "#1 0 #1 |12 #2 0");
}

TEST(OVEncode, LinearLength) {
  std::mt19937_64 rng(1);
  for (int k : {2, 4, 6})
    for (int m = 1; m <= 4; ++m)
      for (int b = 1; b <= 4; ++b) {
        auto inst = random_ov(k, m, b, rng);
        auto w = ov_encode(inst);
        // b + 1 tokens per vector, one leading #1, one bar per pair of sets.
        EXPECT_EQ(static_cast<int>(w.size()), k * m * (b + 1) + 1 + k / 2);
      }
}

TEST(OVBrute, Examples) {
  EXPECT_TRUE(ov_brute(ov_sample()));
  OVInstance ones{2, 2, 2, {{{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}}};
  EXPECT_FALSE(ov_brute(ones));
  OVInstance zero{4, 1, 2, {{{0, 0}}, {{1, 1}}, {{1, 1}}, {{1, 1}}}};
  EXPECT_TRUE(ov_brute(zero));
}

TEST(OVGadget, SampleMember) {
  auto inst = ov_sample();
  auto g = normalize(ov_grammar(2));
  EXPECT_TRUE(member(g, ov_encode(inst)));
  inst.sets[0][1] = {1, 1, 1};
  EXPECT_FALSE(ov_brute(inst));
  EXPECT_FALSE(member(g, ov_encode(inst)));
}

TEST(OVGadget, RandomAgreement) {
  std::mt19937_64 rng(2024);
  NormalGrammar g2 = normalize(ov_grammar(2)), g4 = normalize(ov_grammar(4));
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int k = trial % 2 ? 4 : 2;
    int m = 1 + static_cast<int>(rng() % (k == 4 ? 3 : 4)), b = 1 + static_cast<int>(rng() % 4);
    auto inst = random_ov(k, m, b, rng);
    bool want = ov_brute(inst);
    positives += want;
    ASSERT_EQ(member(k == 2 ? g2 : g4, ov_encode(inst)), want) << trial;
  }
  EXPECT_GT(positives, 5);
  EXPECT_LT(positives, 55);
}

TEST(OVVectors, Parse) {
  auto inst = parse_ov_vectors("110\n010\n\n011\n101\n", 2);
  EXPECT_EQ(inst.m, 2);
  EXPECT_EQ(inst.b, 3);
  EXPECT_EQ(test::join(ov_encode(inst)), test::join(ov_encode(ov_sample())));
  EXPECT_THROW(parse_ov_vectors("110\n01\n\n011\n101\n", 2), ParseError);
  EXPECT_THROW(parse_ov_vectors("110\n", 2), ParseError);
  EXPECT_THROW(parse_ov_vectors("1a0\n\n011\n", 2), ParseError);
}

TEST(Triangle, GadgetShape) {
  TriangleInstance k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  auto t = triangle_gadget(k3);
  EXPECT_EQ(t.graph.node_count(), 4u * 3 + 2);
  EXPECT_EQ(t.graph.node_name(t.source), "u");
  EXPECT_EQ(t.graph.node_name(t.target), "v");
  // n zeros, n ones, and both directions of each edge at three levels.
  EXPECT_EQ(t.graph.edge_count(), 3u + 3u + 3u * 2 * 3);
  EXPECT_EQ(t.grammar.dimension(), 1);
}

TEST(Triangle, Examples) {
  TriangleInstance k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  EXPECT_TRUE(triangle_brute(k3));
  EXPECT_TRUE(solve_gadget(triangle_gadget(k3)));
  TriangleInstance path{4, {{0, 1}, {1, 2}, {2, 3}}};
  EXPECT_FALSE(triangle_brute(path));
  EXPECT_FALSE(solve_gadget(triangle_gadget(path)));
  TriangleInstance star{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
  EXPECT_FALSE(triangle_brute(star));
  EXPECT_FALSE(solve_gadget(triangle_gadget(star)));
  TriangleInstance c4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  EXPECT_FALSE(solve_gadget(triangle_gadget(c4)));
}

TEST(Triangle, BruteMatchesCube) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(10, 0.3, rng);
    ASSERT_EQ(triangle_brute(g), cube_check(g));
  }
}

TEST(Triangle, RandomAgreement) {
  std::mt19937_64 rng(99);
  int positives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(3 + trial % 8, trial % 2 ? 0.2 : 0.4, rng);
    bool want = triangle_brute(g);
    positives += want;
    ASSERT_EQ(solve_gadget(triangle_gadget(g)), want) << trial;
  }
  EXPECT_GT(positives, 3);
}

TEST(Triangle, ParseUndirected) {
  std::vector<std::string> names;
  auto g = parse_undirected_graph("a b\nb c\n# comment\nc a\n", &names);
  EXPECT_EQ(g.n, 3);
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(names, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(triangle_brute(g));
  auto loop = parse_undirected_graph("a a\n");
  EXPECT_EQ(loop.n, 1);
  EXPECT_TRUE(loop.edges.empty());
  EXPECT_THROW(parse_undirected_graph("a b c\n"), ParseError);
}
