// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "flucid/error.hpp"
#include "flucid/scalar.hpp"

using namespace flucid;
using namespace flucid::scalar;

TEST_CASE("integer arithmetic") {
  CHECK(arith(Arith::kAdd, 2, 3) == Value(5));
  CHECK(arith(Arith::kSub, 2, 3) == Value(-1));
  CHECK(arith(Arith::kMul, -4, 3) == Value(-12));
  CHECK(arith(Arith::kDiv, 7, 2) == Value(3));
  CHECK(arith(Arith::kMod, 7, 2) == Value(1));
  CHECK_THROWS_AS(arith(Arith::kDiv, 1, 0), TypeError);
  CHECK_THROWS_AS(arith(Arith::kMod, 1, 0), TypeError);
  CHECK_THROWS_AS(arith(Arith::kAdd, 1, true), TypeError);
}

TEST_CASE("markers propagate through arithmetic") {
  CHECK(arith(Arith::kAdd, Value::eod(), 1).is_eod());
  CHECK(arith(Arith::kMul, 2, Value::bod()).is_bod());
  CHECK(negate(Value::eod()).is_eod());
  CHECK(logical_and(Value::bod(), true).is_bod());
}

TEST_CASE("comparisons refuse markers") {
  CHECK(compare(Compare::kLt, 1, 2) == Value(true));
  CHECK(compare(Compare::kEq, true, true) == Value(true));
  CHECK(compare(Compare::kNe, 1, true) == Value(true));
  CHECK_THROWS_AS(compare(Compare::kEq, Value::eod(), 1), MarkerComparison);
  CHECK_THROWS_AS(compare(Compare::kLt, true, false), TypeError);
}

TEST_CASE("logical operators keep booleans boolean and coerce integers") {
  CHECK(logical_and(true, false) == Value(false));
  CHECK(logical_or(true, false) == Value(true));
  CHECK(logical_and(4, true) == Value(1));
  CHECK(logical_and(4, false) == Value(0));
  CHECK(logical_or(0, false) == Value(0));
  CHECK(logical_not(true) == Value(false));
  CHECK(logical_not(0) == Value(1));
  CHECK(logical_not(7) == Value(0));
  CHECK(negate(5) == Value(-5));
  CHECK_THROWS_AS(negate(true), TypeError);
}

TEST_CASE("truth coercion") {
  CHECK(truth(Value(true)));
  CHECK(truth(Value(-1)));
  CHECK_FALSE(truth(Value(0)));
  CHECK_FALSE(truth(Value(false)));
}
