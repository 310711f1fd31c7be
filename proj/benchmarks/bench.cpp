#include <benchmark/benchmark.h>

#include "japprox/dynamics.hpp"
#include "japprox/geometry.hpp"
#include "japprox/green.hpp"
#include "japprox/lagrange.hpp"
#include "japprox/metrics.hpp"
#include "japprox/nodes.hpp"

using namespace japprox;

namespace {

const PlanarSet& unit_disk() {
  static PlanarSet s = PlanarSet::disk(Complex(0.0), 1.0);
  return s;
}

const GreenModel& disk_green() {
  static GreenModel g = GreenModel::disk(Complex(0.0), 1.0);
  return g;
}

void BM_PseudoLeja(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(pseudo_leja(unit_disk(), disk_green(), n, 2.0));
  state.SetComplexityN(n);
}
BENCHMARK(BM_PseudoLeja)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void BM_DiscreteFekete(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(discrete_fekete(unit_disk(), n));
}
BENCHMARK(BM_DiscreteFekete)->Arg(8)->Arg(16)->Arg(32);

void BM_Deltas(benchmark::State& state) {
  NodeArray nodes = circle_leja(static_cast<int>(state.range(0)), Complex(1.0));
  for (auto _ : state) benchmark::DoNotOptimize(deltas(nodes));
}
BENCHMARK(BM_Deltas)->Arg(32)->Arg(64)->Arg(128);

void BM_LagrangeEval(benchmark::State& state) {
  LagrangeSystem sys =
      deltas(circle_leja(static_cast<int>(state.range(0)), Complex(1.0)));
  Complex z(0.37, 0.22);
  for (auto _ : state) benchmark::DoNotOptimize(lagrange_eval(sys, 0, z));
}
BENCHMARK(BM_LagrangeEval)->Arg(32)->Arg(128);

void BM_LebesgueConstant(benchmark::State& state) {
  NodeArray nodes =
      pseudo_leja(unit_disk(), disk_green(), static_cast<int>(state.range(0)), 2.0);
  LagrangeSystem sys = deltas(nodes);
  for (auto _ : state) benchmark::DoNotOptimize(norm_Ln(sys, nodes.mesh));
}
BENCHMARK(BM_LebesgueConstant)->Arg(16)->Arg(32);

void BM_JuliaRaster(benchmark::State& state) {
  ScaledPoly basilica{ComplexPoly({Complex(-1.0), Complex(0.0), Complex(1.0)}), 0.0};
  int res = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        filled_julia_raster(basilica, Window{-2.0, 2.0, -2.0, 2.0}, res, 200));
}
BENCHMARK(BM_JuliaRaster)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_DynamicalGreen(benchmark::State& state) {
  ScaledPoly sq{ComplexPoly({Complex(0.0), Complex(0.0), Complex(1.0)}), 0.0};
  GreenModel dyn = GreenModel::dynamical(sq);
  Complex z(1.2, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(dyn.eval(z));
}
BENCHMARK(BM_DynamicalGreen);

void BM_Hausdorff(benchmark::State& state) {
  BoundaryMesh a = boundary_sample(unit_disk(), static_cast<int>(state.range(0)));
  BoundaryMesh b =
      boundary_sample(PlanarSet::disk(Complex(0.1), 1.1), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(a, b));
}
BENCHMARK(BM_Hausdorff)->Arg(512)->Arg(2048);

void BM_BuildRateN(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_rate_n(unit_disk(), disk_green(),
                                          HolderData{1.0, 1.0},
                                          static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildRateN)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
