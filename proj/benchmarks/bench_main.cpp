#include <benchmark/benchmark.h>

#include <memory>

#include "dsc/dispersion.hpp"
#include "dsc/interferogram.hpp"
#include "dsc/materials.hpp"
#include "dsc/oracle.hpp"
#include "dsc/spectrum.hpp"

namespace {

using namespace dsc;

SetupConfig bench_config(std::size_t grid_count) {
  SetupConfig cfg;
  cfg.spectrum = make_gaussian(800e-9, 100e-9);
  static MaterialsDb db =
      MaterialsDb::load(std::string(DSC_SOURCE_DIR) + "/data/materials.json");
  cfg.sample = std::make_shared<SlabPhase>(db.find("znse"), 3.0);
  cfg.tau2_ps = 26.0;
  cfg.grid = FrequencyGrid::make(5.0 * cfg.spectrum.rms_bandwidth_radps(),
                                 grid_count);
  return cfg;
}

void BM_RateQuadrature(benchmark::State& state) {
  const AnalyticEngine eng(bench_config(static_cast<std::size_t>(state.range(0))));
  double tau1 = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eng.rate_at(tau1));
    tau1 += 1e-3;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RateQuadrature)->Arg(8193)->Arg(32769);

void BM_Decompose(benchmark::State& state) {
  const AnalyticEngine eng(bench_config(static_cast<std::size_t>(state.range(0))));
  double tau1 = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eng.decompose_at(tau1));
    tau1 += 1e-3;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Decompose)->Arg(8193)->Arg(32769);

void BM_ScanThreaded(benchmark::State& state) {
  const AnalyticEngine eng(bench_config(8193));
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eng.scan(-30.0, 30.0, 256, threads));
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_ScanThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_OraclePoint(benchmark::State& state) {
  const SetupConfig cfg = bench_config(static_cast<std::size_t>(state.range(0)));
  const TwoPhotonState st{cfg.spectrum};
  double tau1 = 0.0;
  for (auto _ : state) {
    const ModeNetwork net =
        build_paper_network(tau1, cfg.tau2_ps, Placement::MzArm, cfg.sample);
    benchmark::DoNotOptimize(coincidence_oracle(net, st, cfg.grid));
    tau1 += 1e-3;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OraclePoint)->Arg(8193);

void BM_SellmeierFit(benchmark::State& state) {
  static MaterialsDb db =
      MaterialsDb::load(std::string(DSC_SOURCE_DIR) + "/data/materials.json");
  const SlabPhase slab(db.find("znse"), 3.0);
  const double w0 = make_gaussian(800e-9, 100e-9).center_radps();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_taylor(slab, w0, 3, 375.0));
  }
}
BENCHMARK(BM_SellmeierFit);

}  // namespace

BENCHMARK_MAIN();
