#include <benchmark/benchmark.h>

#include "modcat/catalog.hpp"
#include "modcat/doubles.hpp"
#include "modcat/structure.hpp"
#include "modcat/verify.hpp"

namespace {

using namespace modcat;

void bm_cyc_mul(benchmark::State& state) {
    const long n = state.range(0);
    const CycNum a = CycNum::root_of_unity(n, 1) + CycNum::root_of_unity(n, n / 2);
    const CycNum b = CycNum::root_of_unity(n, n - 1) - CycNum::from_rational(3, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(bm_cyc_mul)->Arg(8)->Arg(16)->Arg(80);

void bm_compute_s(benchmark::State& state) {
    const long order = state.range(0);
    for (auto _ : state) {
        state.PauseTiming();
        PremodularData d = drinfeld_double(AbelianGroup::from_orders({order}));
        d.smat.reset();
        d.finalized = false;
        state.ResumeTiming();
        compute_S(d);
    }
}
BENCHMARK(bm_compute_s)->Arg(3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

void bm_det_double(benchmark::State& state) {
    const PremodularData d = drinfeld_double(AbelianGroup::from_orders({state.range(0)}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_exact(d.smatrix()));
    }
}
BENCHMARK(bm_det_double)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_lattice(benchmark::State& state) {
    const PremodularData d = drinfeld_double(AbelianGroup::from_orders({state.range(0)}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_subcats(d));
    }
}
BENCHMARK(bm_lattice)->Arg(3)->Arg(4)->Arg(9)->Unit(benchmark::kMillisecond);

void bm_lemma_suite(benchmark::State& state) {
    const PremodularData d = catalog_get("ising");
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_lemma_suite(d));
    }
}
BENCHMARK(bm_lemma_suite)->Unit(benchmark::kMillisecond);

void bm_classify(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_modular_subcats_cyclic(3, 1));
    }
}
BENCHMARK(bm_classify)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
