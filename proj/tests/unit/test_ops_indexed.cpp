// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "flucid/harness.hpp"
#include "flucid/ops_indexed.hpp"
#include "flucid/ops_pipelined.hpp"

using namespace flucid;

namespace {

const BoundedStream X = harness::table_x();
const BoundedStream Y = harness::table_y();

std::vector<Value> ints(std::initializer_list<std::int64_t> v) {
  std::vector<Value> out;
  for (auto i : v) out.emplace_back(i);
  return out;
}

std::vector<Value> prefix(const IndexedStream& s, StreamIndex n) {
  std::vector<Value> out;
  for (StreamIndex i = 0; i < n; ++i) out.push_back(s.at(i));
  return out;
}

}  // namespace

TEST_CASE("hash") {
  CHECK(indexed::hash(0) == Value(0));
  CHECK(indexed::hash(7) == Value(7));
  CHECK(indexed::hash(-2).is_bod());
  for (StreamIndex i = 0; i < 100; ++i)
    CHECK(indexed::hash(i + 1) == Value(indexed::hash(i).as_int() + 1));
}

TEST_CASE("at_op") {
  CHECK(indexed::at_op(X, indexed::constant(Value(2)), 5) == Value(3));
  CHECK(indexed::at_op(X, indexed::hash_stream(), 4) == Value(5));
  CHECK(indexed::at_op(X, indexed::constant(Value(0)), 9) == Value(1));
  CHECK(indexed::at_op(X, indexed::constant(Value(-1)), 0).is_bod());
  CHECK(indexed::at_op(X, BoundedStream{1}, 3).is_eod());
  for (std::int64_t k = 0; k < 5; ++k)
    for (StreamIndex i = 0; i < 10; ++i)
      CHECK(indexed::at_op(X, indexed::add(indexed::hash_stream(), k), i) == X.at(i + k));
}

TEST_CASE("indexed operators on the fixture") {
  CHECK(prefix(indexed::first(X), 3) == ints({1, 1, 1}));
  CHECK(defined_values(indexed::upon(X, Y)) == ints({1, 2, 2, 2, 3, 3, 3, 4, 5, 5}));
  BoundedStream all(std::vector<Value>(10, Value(true)));
  CHECK(defined_values(indexed::wvr(X, all)) == X.elements());
  CHECK(indexed::prev(X).at(0).is_bod());
  CHECK(indexed::next(X).at(9).is_eod());
}

TEST_CASE("internal index streams on the fixture") {
  auto w = indexed::whenever_index(Y, false, false);
  CHECK(prefix(w.t, 5) == ints({0, 3, 6, 7, 9}));
  CHECK(w.t.at(5).is_eod());
  CHECK(prefix(w.u, 10) == ints({0, 3, 3, 3, 6, 6, 6, 7, 9, 9}));
  CHECK(prefix(indexed::upon_index(Y, false, false), 10) ==
        ints({0, 1, 1, 1, 2, 2, 2, 3, 4, 4}));
}

TEST_CASE("memoized streams look each index up once") {
  int calls = 0;
  IndexedStream s([&calls](StreamIndex i) {
    ++calls;
    return Value(i * 2);
  });
  IndexedStream m = s.memoized();
  CHECK(m.at(3) == Value(6));
  CHECK(m.at(3) == Value(6));
  CHECK(calls == 1);
}

TEST_CASE("materialize stops at the horizon") {
  CHECK_THROWS_AS(materialize(indexed::hash_stream(), 100), HorizonExceeded);
  CHECK(extent(X) == 10);
}

TEST_CASE("property: indexed and pipelined agree on every operator") {
  harness::StreamGen gen(99);
  for (int c = 0; c < 200; ++c) {
    int n = gen.length();
    BoundedStream x = gen.ints(n);
    BoundedStream y = gen.condition(n);
    for (StreamOp op : kAllStreamOps) {
      IndexedStream r = op_arity(op) == 1 ? indexed::apply(op, x) : indexed::apply(op, x, y);
      CHECK(defined_values(r) == defined_values(pipelined::apply(op, x, y)));
    }
  }
}
