// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "flucid/error.hpp"
#include "flucid/harness.hpp"
#include "flucid/ops_pipelined.hpp"

using namespace flucid;
using namespace flucid::pipelined;

namespace {

const BoundedStream X = harness::table_x();
const BoundedStream Y = harness::table_y();

std::vector<Value> vals(const BoundedStream& s) { return defined_values(s); }
std::vector<Value> rep(Value v, std::size_t n) { return std::vector<Value>(n, v); }

}  // namespace

TEST_CASE("positional operators") {
  CHECK(vals(first(X)) == rep(1, 10));
  CHECK(vals(last(X)) == rep(10, 10));
  CHECK(vals(next(X)) == std::vector<Value>{2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(vals(prev(X)) == std::vector<Value>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(vals(second(X)) == rep(2, 9));
  CHECK(vals(prelast(X)) == rep(9, 9));
  CHECK(first(BoundedStream{}).empty());
  CHECK(last(BoundedStream{}).empty());
  CHECK(next(BoundedStream{1}).empty());
}

TEST_CASE("followed by and preceded by") {
  CHECK(vals(fby(X, Y)) ==
        std::vector<Value>{1, true, false, false, true, false, false, true, true, false, true});
  CHECK(vals(pby(X, Y)) ==
        std::vector<Value>{true, false, false, true, false, false, true, true, false, true, 1});
  CHECK(vals(fby(BoundedStream{7}, BoundedStream{})) == std::vector<Value>{7});
}

TEST_CASE("whenever family") {
  CHECK(vals(wvr(X, Y)) == std::vector<Value>{1, 4, 7, 8, 10});
  CHECK(vals(rwvr(X, Y)) == std::vector<Value>{10, 8, 7, 4, 1});
  CHECK(vals(nwvr(X, Y)) == std::vector<Value>{2, 3, 5, 6, 9});
  CHECK(vals(nrwvr(X, Y)) == std::vector<Value>{9, 6, 5, 3, 2});
  BoundedStream none(std::vector<Value>(10, Value(false)));
  CHECK(vals(wvr(X, none)).empty());
  BoundedStream all(std::vector<Value>(10, Value(true)));
  CHECK(vals(wvr(X, all)) == vals(X));
}

TEST_CASE("as soon as family") {
  CHECK(vals(asa(X, Y)) == rep(1, 10));
  CHECK(vals(ala(X, Y)) == rep(10, 10));
  CHECK(vals(nasa(X, Y)) == rep(2, 10));
  CHECK(vals(nala(X, Y)) == rep(9, 10));
  BoundedStream none(std::vector<Value>(10, Value(false)));
  CHECK(vals(asa(X, none)).empty());
}

TEST_CASE("upon family") {
  CHECK(vals(upon(X, Y)) == std::vector<Value>{1, 2, 2, 2, 3, 3, 3, 4, 5, 5});
  CHECK(vals(rupon(X, Y)) == std::vector<Value>{10, 9, 9, 8, 7, 7, 7, 6, 6, 6});
  CHECK(vals(nupon(X, Y)) == std::vector<Value>{1, 1, 2, 3, 3, 4, 5, 5, 5, 6, 6});
  CHECK(vals(nrupon(X, Y)) == std::vector<Value>{10, 10, 9, 9, 9, 8, 7, 7, 6, 5, 5});
}

TEST_CASE("pointwise operators") {
  CHECK(vals(neg(X)) == std::vector<Value>{-1, -2, -3, -4, -5, -6, -7, -8, -9, -10});
  CHECK(vals(logical_not(Y)) ==
        std::vector<Value>{false, true, true, false, true, true, false, false, true, false});
  CHECK(vals(logical_and(X, Y)) == std::vector<Value>{1, 0, 0, 1, 0, 0, 1, 1, 0, 1});
  CHECK(vals(logical_or(X, Y)) == rep(1, 10));
  CHECK(vals(logical_xor(X, Y)) == std::vector<Value>{0, 1, 1, 0, 1, 1, 0, 0, 1, 0});
  CHECK_THROWS_AS(neg(Y), TypeError);
}

TEST_CASE("apply dispatches by tag") {
  for (StreamOp op : kAllStreamOps) {
    CHECK(apply(op, X, Y) == (op_arity(op) == 1 ? apply(op, X) : apply(op, X, Y)));
  }
  CHECK(apply(StreamOp::kWvr, X, Y) == wvr(X, Y));
}

TEST_CASE("conditions must be booleans or integers") {
  BoundedStream bad{Value(Context{{"d", 1}})};
  CHECK_THROWS_AS(wvr(BoundedStream{1}, bad), TypeError);
}
