#include <benchmark/benchmark.h>

#include "weightlab/xi_grid.hpp"

using namespace weightlab;

namespace {

TensorSpec bench_spec() { return TensorSpec(ModuleSpec(Scalar(-0.5), Scalar(-0.25)), Scalar(-0.2)); }

std::vector<double> principal_xis(const TensorSpec& spec, int count) {
  double top = xi_windows(spec).principal_max;
  std::vector<double> xis;
  for (int i = 0; i < count; ++i) xis.push_back(top - 0.01 - 0.05 * i);
  return xis;
}

template <auto Kernel>
void BM_scan(benchmark::State& state) {
  TensorSpec spec = bench_spec();
  XiGridOptions opts;
  opts.points = state.range(0);
  auto grid = make_xi_grid(spec, opts);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(spec, grid, 512));
  state.SetItemsProcessed(state.iterations() * long(grid.size()));
}

template <auto Kernel>
void BM_principal(benchmark::State& state) {
  TensorSpec spec = bench_spec();
  auto xis = principal_xis(spec, int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(spec, xis, 1024));
  state.SetItemsProcessed(state.iterations() * long(xis.size()));
}

}  // namespace

BENCHMARK(BM_scan<scan_xi_grid_serial>)->Name("scan_xi_grid/serial")->Arg(100)->Arg(400);
BENCHMARK(BM_scan<scan_xi_grid>)->Name("scan_xi_grid/openmp")->Arg(100)->Arg(400);
BENCHMARK(BM_principal<principal_tail_exponents_serial>)->Name("principal_tail_exponents/serial")->Arg(16)->Arg(64);
BENCHMARK(BM_principal<principal_tail_exponents>)->Name("principal_tail_exponents/openmp")->Arg(16)->Arg(64);

BENCHMARK_MAIN();
