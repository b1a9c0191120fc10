// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/scalar.hpp"

#include <string>

#include "flucid/error.hpp"

namespace flucid::scalar {

std::optional<Value> marker_of(const Value& a) {
  if (a.is_marker()) return a;
  return std::nullopt;
}

std::optional<Value> marker_of(const Value& a, const Value& b) {
  if (a.is_marker()) return a;
  if (b.is_marker()) return b;
  return std::nullopt;
}

Value arith(Arith op, const Value& a, const Value& b) {
  if (auto m = marker_of(a, b)) return *m;
  if (!a.is_int() || !b.is_int()) {
    throw TypeError(std::string("arithmetic '") +
                    std::string(arith_symbol(op)) + "' on " + a.kind_name() +
                    " and " + b.kind_name());
  }
  const std::int64_t x = a.as_int();
  const std::int64_t y = b.as_int();
  switch (op) {
    case Arith::kAdd: return Value(x + y);
    case Arith::kSub: return Value(x - y);
    case Arith::kMul: return Value(x * y);
    case Arith::kDiv:
      if (y == 0) throw TypeError("division by zero");
      return Value(x / y);
    case Arith::kMod:
      if (y == 0) throw TypeError("division by zero");
      return Value(x % y);
  }
  return Value::eod();
}

Value compare(Compare op, const Value& a, const Value& b) {
  if (marker_of(a, b)) {
    throw MarkerComparison("comparison with " + to_string(*marker_of(a, b)) +
                           "; use iseod/isbod");
  }
  if (op == Compare::kEq) return Value(a == b);
  if (op == Compare::kNe) return Value(a != b);
  if (!a.is_int() || !b.is_int()) {
    throw TypeError(std::string("ordering '") +
                    std::string(compare_symbol(op)) + "' on " + a.kind_name() +
                    " and " + b.kind_name());
  }
  const std::int64_t x = a.as_int();
  const std::int64_t y = b.as_int();
  switch (op) {
    case Compare::kLt: return Value(x < y);
    case Compare::kLe: return Value(x <= y);
    case Compare::kGt: return Value(x > y);
    case Compare::kGe: return Value(x >= y);
    default: break;
  }
  return Value(false);
}

Value negate(const Value& a) {
  if (a.is_marker()) return a;
  if (!a.is_int()) throw TypeError(std::string("neg of a ") + a.kind_name());
  return Value(-a.as_int());
}

Value logical_not(const Value& a) {
  if (a.is_marker()) return a;
  if (a.is_bool()) return Value(!a.as_bool());
  if (a.is_int()) return Value(std::int64_t{a.as_int() == 0 ? 1 : 0});
  throw TypeError(std::string("not of a ") + a.kind_name());
}

namespace {

Value typed_truth(const Value& a, const Value& b, bool result) {
  if (a.is_bool() && b.is_bool()) return Value(result);
  return Value(std::int64_t{result ? 1 : 0});
}

}  // namespace

Value logical_and(const Value& a, const Value& b) {
  if (auto m = marker_of(a, b)) return *m;
  return typed_truth(a, b, truth(a) && truth(b));
}

Value logical_or(const Value& a, const Value& b) {
  if (auto m = marker_of(a, b)) return *m;
  return typed_truth(a, b, truth(a) || truth(b));
}

std::string_view arith_symbol(Arith op) {
  switch (op) {
    case Arith::kAdd: return "+";
    case Arith::kSub: return "-";
    case Arith::kMul: return "*";
    case Arith::kDiv: return "/";
    case Arith::kMod: return "%";
  }
  return "?";
}

std::string_view compare_symbol(Compare op) {
  switch (op) {
    case Compare::kEq: return "==";
    case Compare::kNe: return "!=";
    case Compare::kLt: return "<";
    case Compare::kLe: return "<=";
    case Compare::kGt: return ">";
    case Compare::kGe: return ">=";
  }
  return "?";
}

}  // namespace flucid::scalar
