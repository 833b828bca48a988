#include <benchmark/benchmark.h>

#include <array>

#include "ktri/analysis.hpp"
#include "ktri/parser.hpp"
#include "ktri/tableau.hpp"
#include "ktri/world_sets.hpp"

using namespace ktri;

namespace {

const char* const kSequents[] = {
    "#p |- #~p",
    "q|~q |- #(q|~q)",
    "#(p|q) & ~#p |- #q | p",
    "###p |- #p",
};

void BM_Prove(benchmark::State& state) {
  const Sequent s = parse_sequent(kSequents[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(prove(s).proved);
  state.SetLabel(kSequents[state.range(0)]);
}
BENCHMARK(BM_Prove)->DenseRange(0, 3);

// One evaluation of a mid-sized formula on every world of an n-world frame.
void BM_SetEvaluator(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::array<Formula, 1> roots{parse_formula("#(#p & ~#(p | #~p)) | ##p")};
  const std::array<std::string, 1> vars{"p"};
  SetEvaluator ev(roots, vars);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i * 7 + 3) % n);
  const auto succ = successor_masks(Frame::indexed(n, edges));
  const std::array<WorldSets, 1> val{WorldSets{0x5555555555555555ULL >> (64 - n), 0x3333333333333333ULL >> (64 - n)}};
  for (auto _ : state) benchmark::DoNotOptimize(ev.evaluate(succ, val)[0]);
}
BENCHMARK(BM_SetEvaluator)->Arg(4)->Arg(16)->Arg(64);

void BM_Definability(benchmark::State& state) {
  const auto& c = standard_frame_classes()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(check_definability(c.property, c.conditions, 3).defines);
  state.SetLabel(c.name);
}
BENCHMARK(BM_Definability)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Countermodel(benchmark::State& state) {
  const Sequent s = parse_sequent("#p & #q |- #(p & q)");
  for (auto _ : state) benchmark::DoNotOptimize(find_countermodel(s, 3).has_value());
}
BENCHMARK(BM_Countermodel)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
