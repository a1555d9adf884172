// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "sphspec/harmonic.hpp"
#include "sphspec/hyperboloid.hpp"
#include "sphspec/lie.hpp"

using namespace sphspec;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

// Spin(9) at (9/2, 5/2, 5/2, 5/2) and O(16) at (3, 0, ..., 0).
void BM_Freudenthal(benchmark::State& s) {
  const GroupLabel g = s.range(1) ? O(16) : group(Family::Spin9);
  const std::vector<Rational> hw =
      s.range(1) ? std::vector<Rational>{3, 0, 0, 0, 0, 0, 0, 0} : std::vector<Rational>{Q(9, 2), Q(5, 2), Q(5, 2), Q(5, 2)};
  const RootDatum& rd = root_datum(g);
  const auto v = to_scaled(rd, make_weight(g, hw));
  for (auto _ : s) {
    auto dc = s.range(0) ? kernels::freudenthal_parallel(rd.geometry, v) : kernels::freudenthal_serial(rd.geometry, v);
    benchmark::DoNotOptimize(dc);
  }
  s.SetLabel(std::string(s.range(0) ? "parallel " : "serial ") + to_string(g));
}
BENCHMARK(BM_Freudenthal)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CasimirScalar(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(harmonic::casimir_scalar(7, 4, exec_of(s)));
  label(s);
}
BENCHMARK(BM_CasimirScalar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TorusWeights(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(harmonic::torus_weights(8, 4, exec_of(s)));
  label(s);
}
BENCHMARK(BM_TorusWeights)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Consistency(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(consistency_check(HypKind::Sp, 2, 2, 0, 6, exec_of(s)));
  label(s);
}
BENCHMARK(BM_Consistency)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
