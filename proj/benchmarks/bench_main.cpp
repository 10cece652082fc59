#include <benchmark/benchmark.h>

#include <filesystem>

#include "qrk/certify.hpp"
#include "qrk/hypergraph.hpp"
#include "qrk/hypergraph_io.hpp"
#include "qrk/rng.hpp"

namespace {

void BM_SimulateCoin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qrk::simulate_coin(0.1, state.range(0), 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateCoin)->Arg(1'000'000);

void BM_Extract(benchmark::State& state) {
  const auto raw = qrk::simulate_coin(0.7, state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(qrk::von_neumann_extract(raw));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Extract)->Arg(1'000'000);

void BM_Normality(benchmark::State& state) {
  const auto bits = qrk::simulate_coin(0.7853981633974483, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(qrk::borel_normality(bits));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Normality)->Arg(1'000'000);

void BM_ComposedGadget(benchmark::State& state) {
  const auto h = qrk::load_hypergraph(std::filesystem::path(QRK_DATA_DIR) / "composed.json");
  for (auto _ : state) benchmark::DoNotOptimize(qrk::classify_pair(h, "PSI", "PHI"));
}
BENCHMARK(BM_ComposedGadget)->Unit(benchmark::kMillisecond);

void BM_TifsStates(benchmark::State& state) {
  const auto h = qrk::load_hypergraph(std::filesystem::path(QRK_DATA_DIR) / "tifs.json");
  for (auto _ : state) benchmark::DoNotOptimize(qrk::count_total_states(h));
}
BENCHMARK(BM_TifsStates)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
