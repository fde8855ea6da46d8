// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>

#include "clustervd/cluster_dp.hpp"
#include "clustervd/generators.hpp"
#include "clustervd/oracle.hpp"

namespace cv = clustervd;

namespace {

const cv::BinaryCotree& cotree_of_size(int n) {
  static std::map<int, cv::BinaryCotree> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    cv::Rng rng(static_cast<std::uint64_t>(n));
    it = cache.emplace(n, cv::random_binary_cotree(n, rng, cv::LabelMode::Random)).first;
  }
  return it->second;
}

cv::Graph graph_of_order(int n) {
  cv::Rng rng(static_cast<std::uint64_t>(1000 + n));
  return cv::gnp(n, 0.5, rng);
}

void BM_DpSerial(benchmark::State& state) {
  const auto& t = cotree_of_size(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cv::dp_stats_serial(t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DpParallel(benchmark::State& state) {
  const auto& t = cotree_of_size(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cv::dp_stats(t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_BruteSerial(benchmark::State& state) {
  const cv::Graph g = graph_of_order(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cv::brute_min_serial(g, cv::target_of(cv::Variant::Cvd)));
}

void BM_BruteParallel(benchmark::State& state) {
  const cv::Graph g = graph_of_order(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cv::brute_min(g, cv::Variant::Cvd));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_DpSerial)->RangeMultiplier(10)->Range(10000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DpParallel)->RangeMultiplier(10)->Range(10000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteSerial)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteParallel)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
