// Serial reference kernels against their OpenMP versions, plus engine fact counts as the graph grows.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "mcfl/closure.hpp"
#include "mcfl/dyck.hpp"
#include "mcfl/engine.hpp"
#include "mcfl/graph.hpp"
#include "mcfl/normal_form.hpp"

namespace {

mcfl::LabeledGraph random_graph(int n, int out_degree, std::uint64_t seed) {
  static const char* labels[] = {"op1", "cp1", "ob1", "cb1", "@eps"};
  std::mt19937_64 rng(seed);
  mcfl::LabeledGraph g;
  for (int v = 0; v < n; ++v) g.add_node(std::to_string(v));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < out_degree; ++i)
      g.add_edge(static_cast<mcfl::NodeId>(v), g.intern_label(labels[rng() % 5]), static_cast<mcfl::NodeId>(rng() % n));
  return g;
}

const mcfl::NormalGrammar& family(int d, mcfl::FamilyVariant v) {
  static const mcfl::NormalGrammar grammars[2][3] = {
      {mcfl::normalize(mcfl::gen_family(1, {}, mcfl::FamilyVariant::circ)),
       mcfl::normalize(mcfl::gen_family(2, {}, mcfl::FamilyVariant::circ)),
       mcfl::normalize(mcfl::gen_family(3, {}, mcfl::FamilyVariant::circ))},
      {mcfl::normalize(mcfl::gen_family(1, {}, mcfl::FamilyVariant::plus)),
       mcfl::normalize(mcfl::gen_family(2, {}, mcfl::FamilyVariant::plus)),
       mcfl::normalize(mcfl::gen_family(3, {}, mcfl::FamilyVariant::plus))}};
  return grammars[v == mcfl::FamilyVariant::plus][d - 1];
}

void BM_ClosureSerial(benchmark::State& state) {
  auto g = random_graph(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mcfl::plain_reachability_serial(g));
  state.SetComplexityN(state.range(0));
}

void BM_ClosureParallel(benchmark::State& state) {
  auto g = random_graph(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mcfl::plain_reachability(g));
  state.SetComplexityN(state.range(0));
}

void BM_CountSerial(benchmark::State& state) {
  const auto& g = family(2, mcfl::FamilyVariant::plus);
  for (auto _ : state) benchmark::DoNotOptimize(mcfl::count_in_language_serial(g, {}, static_cast<int>(state.range(0))));
}

void BM_CountParallel(benchmark::State& state) {
  const auto& g = family(2, mcfl::FamilyVariant::plus);
  for (auto _ : state) benchmark::DoNotOptimize(mcfl::count_in_language(g, {}, static_cast<int>(state.range(0))));
}

// Facts inserted for the d-dimensional plus family on random graphs of n nodes.
void BM_EngineFacts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  auto g = random_graph(n, 2, 7);
  mcfl::EngineConfig cfg;
  cfg.record_justifications = false;
  std::uint64_t facts = 0, pruned = 0;
  for (auto _ : state) {
    auto r = mcfl::solve(family(d, mcfl::FamilyVariant::plus), g, cfg);
    facts = r.stats().inserted;
    pruned = r.stats().pruned;
  }
  state.counters["n"] = n;
  state.counters["facts"] = static_cast<double>(facts);
  state.counters["pruned"] = static_cast<double>(pruned);
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_ClosureSerial)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_ClosureParallel)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_CountSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EngineFacts)
    ->ArgsProduct({{8, 16, 32, 64}, {1}})
    ->ArgsProduct({{8, 12, 16}, {2}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
