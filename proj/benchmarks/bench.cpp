#include <benchmark/benchmark.h>

#include "autgrp/acceptor.hpp"
#include "autgrp/families.hpp"
#include "autgrp/pipeline.hpp"

using namespace autgrp;

namespace {

  // Whole pipeline on G_{p,p}, wreath order.
  void BM_PipelineGpp(benchmark::State& state) {
    int  p   = static_cast<int>(state.range(0));
    auto fam = builtin_family({Family::BSpq, p, p});
    for (auto _ : state) {
      auto res = run_pipeline(fam.presentation, fam.order);
      benchmark::DoNotOptimize(res.report.acceptor_states);
    }
  }
  BENCHMARK(BM_PipelineGpp)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

  void BM_PipelineKnot(benchmark::State& state) {
    auto fam = builtin_family({static_cast<Family>(state.range(0)), 1, 1});
    for (auto _ : state) {
      auto res = run_pipeline(fam.presentation, fam.order);
      benchmark::DoNotOptimize(res.report.acceptor_states);
    }
  }
  BENCHMARK(BM_PipelineKnot)
      ->Arg(static_cast<int>(Family::KNOT41W))
      ->Arg(static_cast<int>(Family::KNOT52W))
      ->Unit(benchmark::kMillisecond);

  void BM_KbComplete(benchmark::State& state) {
    auto fam = builtin_family({Family::Hpq, 3, 3});
    for (auto _ : state) {
      auto res = kb_complete(init_system(fam.presentation, fam.order), {});
      benchmark::DoNotOptimize(res.system.size());
    }
  }
  BENCHMARK(BM_KbComplete)->Unit(benchmark::kMicrosecond);

  // Acceptor construction alone, on the final difference machine.
  void BM_Acceptor(benchmark::State& state) {
    auto fam = builtin_family({Family::KNOT52W, 1, 1});
    auto res = run_pipeline(fam.presentation, fam.order);
    auto const& s = *res.structure;
    auto spec     = make_hspec(s.order, s.D);
    for (auto _ : state) {
      auto w = build_acceptor(s.D, s.order, spec);
      benchmark::DoNotOptimize(w.num_states());
    }
  }
  BENCHMARK(BM_Acceptor)->Unit(benchmark::kMillisecond);

  void BM_Reduce(benchmark::State& state) {
    auto fam = builtin_family({Family::KNOT41W, 1, 1});
    auto res = run_pipeline(fam.presentation, fam.order);
    auto const& s = *res.structure;
    Word w;
    for (std::size_t i = 0; i < static_cast<std::size_t>(state.range(0)); ++i) {
      w.push_back(static_cast<Symbol>((i * 5 + i / 3) % s.order.alphabet().size()));
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(normal_form(s, w));
    }
  }
  BENCHMARK(BM_Reduce)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

  void BM_Minimize(benchmark::State& state) {
    auto fam = builtin_family({Family::BSpq, 3, 3});
    auto res = run_pipeline(fam.presentation, fam.order);
    auto m   = compose2(res.structure->multipliers[0], res.structure->multipliers[2]);
    for (auto _ : state) {
      benchmark::DoNotOptimize(minimize(m).num_states());
    }
  }
  BENCHMARK(BM_Minimize)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
