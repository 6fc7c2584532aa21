#include <benchmark/benchmark.h>

#include "ceresa/elliptic/finite.hpp"
#include "ceresa/ffcert/counting.hpp"
#include "ceresa/heights/northcott.hpp"
#include "ceresa/picard/torsion_locus.hpp"

namespace {

using namespace ceresa;

template <bool Parallel>
void BM_CountCurve(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  const PrimeFieldElement a(1, p), b(1, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? count_curve(a, b, 3) : count_curve_serial(a, b, 3));
  }
}
BENCHMARK(BM_CountCurve<false>)->Name("count_curve/serial/F_p^3")->Arg(41)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountCurve<true>)->Name("count_curve/openmp/F_p^3")->Arg(41)->Arg(101)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_GroupOrder(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  const CurveFp e(PrimeFieldElement(7, p));
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? group_order_fp(e) : group_order_fp_serial(e));
}
BENCHMARK(BM_GroupOrder<false>)->Name("group_order_fp/serial")->Arg(100003)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroupOrder<true>)->Name("group_order_fp/openmp")->Arg(100003)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_Northcott(benchmark::State& state) {
  const unsigned B = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? northcott_scan(B) : northcott_scan_serial(B));
}
BENCHMARK(BM_Northcott<false>)->Name("northcott_scan/serial")->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Northcott<true>)->Name("northcott_scan/openmp")->Arg(10)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_TorsionLocus(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? enumerate_torsion_locus(n) : enumerate_torsion_locus_serial(n));
  }
}
BENCHMARK(BM_TorsionLocus<false>)->Name("torsion_locus/serial")->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorsionLocus<true>)->Name("torsion_locus/openmp")->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
