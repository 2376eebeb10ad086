#include <benchmark/benchmark.h>

#include <numbers>

#include "seashell/mesh.hpp"
#include "seashell/special_functions.hpp"
#include "seashell/verification.hpp"

using namespace seashell;

namespace {

Grid fig4_grid(std::size_t n_theta, std::size_t n_psi) {
    const auto dom = psi_domain(2.0);
    return Grid(0.0, 4.0 * std::numbers::pi, dom.lo, dom.hi, n_theta, n_psi, 0.99);
}

void BM_HClosed(benchmark::State& state) {
    const HParams p(0.1, 2.0);
    double psi = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_closed(p, psi));
        psi = psi > 1.0 ? -1.0 : psi + 1e-3;
    }
}
BENCHMARK(BM_HClosed);

void BM_HQuadrature(benchmark::State& state) {
    const HParams p(0.1, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(h_quadrature(p, 0.999 * std::atan(2.0)));
}
BENCHMARK(BM_HQuadrature);

void BM_TessellateFig4(benchmark::State& state) {
    const auto family = SurfaceFamily::equiangular(1.0, 0.1, 2.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Grid grid = fig4_grid(4 * n, n);
    for (auto _ : state) benchmark::DoNotOptimize(tessellate(family, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_TessellateFig4)->Arg(16)->Arg(64)->Arg(128);

void BM_CheckEquiangular(benchmark::State& state) {
    const auto family = SurfaceFamily::equiangular(1.0, 0.1, 2.0);
    const Grid grid = fig4_grid(100, 100);
    for (auto _ : state) benchmark::DoNotOptimize(check_equiangular(family, grid, 1e-7));
}
BENCHMARK(BM_CheckEquiangular);

}  // namespace

BENCHMARK_MAIN();
