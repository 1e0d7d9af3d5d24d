// Sign-matrix fill: serial reference against the OpenMP kernel, plus an
// end-to-end scan.  Run with --benchmark_filter to pick a size.

#include <benchmark/benchmark.h>

#include <sstream>

#include "rtfin/bases.hpp"
#include "rtfin/cli/commands.hpp"
#include "rtfin/sign_kernels.hpp"

namespace {

std::vector<rtfin::GramRatio> theta_ratios(int p) {
  return rtfin::theta_relative_norms(rtfin::LevelContext::make(p));
}

void BM_ThetaFillSerial(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto ratios = theta_ratios(p);
  const auto emb = rtfin::embeddings(p);
  for (auto _ : state) benchmark::DoNotOptimize(rtfin::fill_sign_matrix_serial(ratios, emb));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ratios.size() * emb.size()));
}

void BM_ThetaFillParallel(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto ratios = theta_ratios(p);
  const auto emb = rtfin::embeddings(p);
  for (auto _ : state) benchmark::DoNotOptimize(rtfin::fill_sign_matrix_parallel(ratios, emb));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ratios.size() * emb.size()));
}

void BM_LollipopFill(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto level = rtfin::LevelContext::make(2 * r);
  const auto emb = rtfin::embeddings(level);
  std::vector<rtfin::GramRatio> ratios;
  for (int c = 0; r - 1 - 2 * c >= 1; ++c) {
    const auto n = rtfin::lollipop_relative_norms(level, c);
    ratios.insert(ratios.end(), n.begin(), n.end());
  }
  for (auto _ : state) benchmark::DoNotOptimize(rtfin::fill_sign_matrix_parallel(ratios, emb));
}

void BM_Scan(benchmark::State& state) {
  rtfin::cli::RunConfig cfg;
  cfg.command = "scan";
  cfg.r_max = static_cast<int>(state.range(0));
  cfg.format = rtfin::cli::OutputFormat::Csv;
  for (auto _ : state) {
    std::ostringstream sink;
    benchmark::DoNotOptimize(rtfin::cli::run_scan(cfg, sink));
  }
}

}  // namespace

BENCHMARK(BM_ThetaFillSerial)->Arg(22)->Arg(46)->Arg(58)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaFillParallel)->Arg(22)->Arg(46)->Arg(58)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LollipopFill)->Arg(53)->Arg(97)->Arg(151)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan)->Arg(53)->Arg(97)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
