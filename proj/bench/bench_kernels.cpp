// Serial reference against the OpenMP kernels on fixed small instances.

#include <benchmark/benchmark.h>

#include "phasepoint/clifford.hpp"
#include "phasepoint/symmetry.hpp"

using namespace phasepoint;

namespace {

const std::vector<CMatrix>& two_qubit_generators() {
  static const auto gens = clifford_generators(DimContext(2, 2));
  return gens;
}

const std::vector<CliffordElement>& clifford(int p) {
  static const auto three = clifford_group(DimContext(3, 1));
  static const auto five = clifford_group(DimContext(5, 1));
  return p == 3 ? three : five;
}

std::vector<PhaseCanonicalUnitary> pool(int p) {
  std::vector<PhaseCanonicalUnitary> out;
  for (const auto& e : clifford(p)) out.push_back(e.unitary);
  return out;
}

void BM_Closure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(close_group_mod_phase(two_qubit_generators()));
}
void BM_ClosureSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(close_group_mod_phase_serial(two_qubit_generators()));
}

void BM_Filter(benchmark::State& state) {
  const auto candidates = pool(5);
  const FrameMatcher matcher(make_ww_frame(0.0, 1.0, DimContext(5, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(filter_admitting(matcher, candidates));
}
void BM_FilterSerial(benchmark::State& state) {
  const auto candidates = pool(5);
  const FrameMatcher matcher(make_ww_frame(0.0, 1.0, DimContext(5, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(filter_admitting_serial(matcher, candidates));
}

void BM_Complement(benchmark::State& state) {
  const DimContext ctx(3, 1);
  const auto [a, b] = default_complement_generators(clifford(3), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(complement_search(clifford(3), ctx, a, b));
}
void BM_ComplementSerial(benchmark::State& state) {
  const DimContext ctx(3, 1);
  const auto [a, b] = default_complement_generators(clifford(3), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(complement_search_serial(clifford(3), ctx, a, b));
}

void BM_FramePotential(benchmark::State& state) {
  const auto elements = pool(5);
  for (auto _ : state) benchmark::DoNotOptimize(frame_potential(elements, 3));
}
void BM_FramePotentialSerial(benchmark::State& state) {
  const auto elements = pool(5);
  for (auto _ : state) benchmark::DoNotOptimize(frame_potential_serial(elements, 3));
}

}  // namespace

BENCHMARK(BM_Closure)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Filter)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FilterSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Complement)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComplementSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FramePotential)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FramePotentialSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
