// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "flucid/harness.hpp"
#include "flucid/ops_indexed.hpp"
#include "flucid/ops_pipelined.hpp"

namespace {

using flucid::BoundedStream;
using flucid::StreamOp;

struct Inputs {
  BoundedStream x;
  BoundedStream y;
};

Inputs make_inputs(int n) {
  flucid::harness::StreamGen gen(42, n);
  return {gen.ints(n), gen.bools(n)};
}

void BM_Pipelined(benchmark::State& state, StreamOp op) {
  Inputs in = make_inputs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(flucid::pipelined::apply(op, in.x, in.y));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Indexed(benchmark::State& state, StreamOp op) {
  Inputs in = make_inputs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    flucid::IndexedStream r = flucid::op_arity(op) == 1
                                  ? flucid::indexed::apply(op, in.x)
                                  : flucid::indexed::apply(op, in.x, in.y);
    benchmark::DoNotOptimize(flucid::materialize(r));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK_CAPTURE(BM_Pipelined, fby, StreamOp::kFby)->Range(16, 4096);
BENCHMARK_CAPTURE(BM_Indexed, fby, StreamOp::kFby)->Range(16, 4096);
BENCHMARK_CAPTURE(BM_Pipelined, wvr, StreamOp::kWvr)->Range(16, 4096);
BENCHMARK_CAPTURE(BM_Indexed, wvr, StreamOp::kWvr)->Range(16, 4096);
BENCHMARK_CAPTURE(BM_Pipelined, rwvr, StreamOp::kRwvr)->Range(16, 4096);
BENCHMARK_CAPTURE(BM_Indexed, rwvr, StreamOp::kRwvr)->Range(16, 4096);
BENCHMARK_CAPTURE(BM_Pipelined, upon, StreamOp::kUpon)->Range(16, 4096);
BENCHMARK_CAPTURE(BM_Indexed, upon, StreamOp::kUpon)->Range(16, 4096);
BENCHMARK_CAPTURE(BM_Pipelined, nrupon, StreamOp::kNrupon)->Range(16, 4096);
BENCHMARK_CAPTURE(BM_Indexed, nrupon, StreamOp::kNrupon)->Range(16, 4096);

void BM_TableCheck(benchmark::State& state) {
  flucid::harness::Config cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(flucid::harness::check_table1(cfg));
  }
}
BENCHMARK(BM_TableCheck);

}  // namespace
