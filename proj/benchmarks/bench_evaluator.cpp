// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <string>

#include "flucid/evaluator.hpp"

namespace {

// Y = X fby Y + next X, demanded at tag n.
void BM_RunningSum(benchmark::State& state) {
  std::string src = "Y @.d " + std::to_string(state.range(0)) +
                    " where X = 0 fby X + 1; Y = X fby Y + next X; end";
  flucid::ExprPtr program = flucid::compile(src);
  for (auto _ : state) {
    flucid::Session session;
    benchmark::DoNotOptimize(session.eval(program));
  }
}
BENCHMARK(BM_RunningSum)->RangeMultiplier(4)->Range(16, 1024);

// Same demand without the cache: the cost grows with the number of paths.
void BM_RunningSumNoMemo(benchmark::State& state) {
  std::string src = "Y @.d " + std::to_string(state.range(0)) +
                    " where X = 0 fby X + 1; Y = X fby Y + next X; end";
  flucid::ExprPtr program = flucid::compile(src);
  flucid::EvalOptions opts;
  opts.memoize = false;
  for (auto _ : state) {
    flucid::Session session(opts);
    benchmark::DoNotOptimize(session.eval(program));
  }
}
BENCHMARK(BM_RunningSumNoMemo)->DenseRange(4, 12, 4);

void BM_UponStream(benchmark::State& state) {
  flucid::ExprPtr program = flucid::compile(
      "X upon Y where X = #.d + 1; Y = #.d % 3 == 0; end");
  for (auto _ : state) {
    flucid::Session session;
    benchmark::DoNotOptimize(
        session.eval_stream(program, {}, "d", 0, state.range(0)));
  }
}
BENCHMARK(BM_UponStream)->Range(16, 1024);

}  // namespace
