#include <benchmark/benchmark.h>

#include "aluthge/builders.hpp"
#include "aluthge/measures.hpp"
#include "aluthge/positivity.hpp"
#include "aluthge/regions.hpp"
#include "aluthge/transforms.hpp"
#include "aluthge/truncation.hpp"

using namespace aluthge;

static void BM_SphericalTransform(benchmark::State& state) {
  const auto w = build_prop2(0.6, 0.4);
  const auto window = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto s = spherical_transform(w, window);
    benchmark::DoNotOptimize(s.alpha(window - 1, window - 1));
  }
}
BENCHMARK(BM_SphericalTransform)->Arg(12)->Arg(24)->Arg(48);

static void BM_ToralTransform(benchmark::State& state) {
  const auto w = build_theta(OneVarWeights::stampfli(1, 2, 3));
  const auto window = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toral_transform(w, window));
}
BENCHMARK(BM_ToralTransform)->Arg(12)->Arg(24)->Arg(48);

static void BM_JointHyponormal(benchmark::State& state) {
  const auto w = build_prop2(0.6, 0.4);
  const auto level = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(joint_hyponormal(w, level, CrossCheck::None).joint);
}
BENCHMARK(BM_JointHyponormal)->Arg(12)->Arg(24)->Arg(48);

static void BM_KHyponormal(benchmark::State& state) {
  const auto w = build_theta(OneVarWeights::stampfli(1, 2, 3));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_hyponormal(w, k, 4 * k + 6).holds);
}
BENCHMARK(BM_KHyponormal)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_OperatorNorm(benchmark::State& state) {
  const auto tp = truncate(build_prop2(0.6, 0.4), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pair_norm(tp));
}
BENCHMARK(BM_OperatorNorm)->Arg(16)->Arg(32)->Arg(64);

static void BM_QuasinormalCompletion(benchmark::State& state) {
  const auto row = OneVarWeights::stampfli(1, 2, 3);
  const auto window = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quasinormal_completion(row, 4.0, window).alpha(1, 1));
}
BENCHMARK(BM_QuasinormalCompletion)->Arg(20)->Arg(40)->Arg(80);

static void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(0.7, 0.5, 12, 1).joint_hypo);
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
