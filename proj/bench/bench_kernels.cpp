#include <benchmark/benchmark.h>

#include "iwahori/intertwine.hpp"
#include "iwahori/oracle.hpp"

using namespace iwahori;

namespace {

struct GridCase {
  CompiledRational f;
  std::vector<std::vector<Complex>> axes;
};

GridCase grid_case(int points) {
  const Composition d({1, 1, 1, 1});
  return {compile(admissible_identity_value(d, 2), 3),
          std::vector<std::vector<Complex>>(3, grid_axis(2, 1.01, GridSpec{points}))};
}

void BM_GridParallel(benchmark::State& st) {
  const auto c = grid_case(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(grid_abs_max(c.f, c.axes, true, KernelMode::parallel));
  st.SetItemsProcessed(st.iterations() * st.range(0) * st.range(0) * st.range(0));
}

void BM_GridSerial(benchmark::State& st) {
  const auto c = grid_case(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(grid_abs_max(c.f, c.axes, true, KernelMode::serial));
  st.SetItemsProcessed(st.iterations() * st.range(0) * st.range(0) * st.range(0));
}

void BM_GridReference(benchmark::State& st) {
  const auto c = grid_case(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(grid_abs_max_reference(c.f, c.axes));
  st.SetItemsProcessed(st.iterations() * st.range(0) * st.range(0) * st.range(0));
}

const TorusCoordinate kC{{2, 2}};
const Composition kLong({1, 1, 1});

void BM_OrbitalParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(brute_orbital_at_depth(kC, kLong, 2, st.range(0), 2, KernelMode::parallel));
}

void BM_OrbitalSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(brute_orbital_at_depth(kC, kLong, 2, st.range(0), 2, KernelMode::serial));
}

void BM_OrbitalReference(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(brute_orbital_reference(kC, kLong, 2, st.range(0), 2));
}

}  // namespace

BENCHMARK(BM_GridParallel)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridReference)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitalParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitalSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitalReference)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
}
