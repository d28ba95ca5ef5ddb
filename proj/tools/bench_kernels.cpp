// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
//
// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "galmod/cover_io.hpp"
#include "galmod/cyclotomic.hpp"
#include "galmod/epsilon.hpp"
#include "galmod/verify.hpp"

using namespace galmod;

namespace {

void BM_GaussCountsSerial(benchmark::State& st) {
  auto ctx = field_context(3, static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gauss_exponent_counts_serial(*ctx, 1));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(ctx->q()));
}

void BM_GaussCountsParallel(benchmark::State& st) {
  auto ctx = field_context(3, static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gauss_exponent_counts_parallel(*ctx, 1));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(ctx->q()));
}

// E over the Kummer corpus; the Gauss valuation cache is warmed first so
// this times the per-character assembly.
void corpus_E(benchmark::State& st, Exec exec) {
  auto corpus = kummer_corpus();
  EpsilonOptions opt;
  opt.exec = exec;
  for (const auto& e : corpus) E_element(e.cover, opt);
  for (auto _ : st)
    for (const auto& e : corpus) benchmark::DoNotOptimize(E_element(e.cover, opt));
}

void BM_CorpusESerial(benchmark::State& st) { corpus_E(st, Exec::Serial); }
void BM_CorpusEParallel(benchmark::State& st) { corpus_E(st, Exec::Parallel); }

void synthetic_E(benchmark::State& st, Exec exec) {
  std::mt19937_64 rng(1);
  RandomCoverOptions ro;
  ro.max_order = 64;
  std::vector<CoverDatum> covers;
  for (int i = 0; i < 20; ++i) covers.push_back(random_weakly_ramified_cover(rng, ro));
  EpsilonOptions opt;
  opt.exec = exec;
  for (const auto& c : covers) E_element(c, opt);
  for (auto _ : st)
    for (const auto& c : covers) benchmark::DoNotOptimize(E_element(c, opt));
}

void BM_SyntheticESerial(benchmark::State& st) { synthetic_E(st, Exec::Serial); }
void BM_SyntheticEParallel(benchmark::State& st) { synthetic_E(st, Exec::Parallel); }

}  // namespace

BENCHMARK(BM_GaussCountsSerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussCountsParallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CorpusESerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusEParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SyntheticESerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SyntheticEParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
