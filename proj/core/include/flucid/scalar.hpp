// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_SCALAR_HPP_
#define FLUCID_SCALAR_HPP_

#include <optional>
#include <stdexcept>
#include <string_view>

#include "flucid/value.hpp"

// Pointwise operations on single values. Arithmetic and logic propagate
// bod/eod (left operand first); comparisons reject them. Other kind
// mismatches raise TypeError.
namespace flucid::scalar {

enum class Arith { kAdd, kSub, kMul, kDiv, kMod };
enum class Compare { kEq, kNe, kLt, kLe, kGt, kGe };

/// Raised when a comparison sees a marker.
class MarkerComparison : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Value arith(Arith op, const Value& a, const Value& b);
Value compare(Compare op, const Value& a, const Value& b);

Value negate(const Value& a);
/// Bool -> Bool, Int -> Int 0/1.
Value logical_not(const Value& a);
/// Bool when both operands are Bool, Int 0/1 otherwise.
Value logical_and(const Value& a, const Value& b);
Value logical_or(const Value& a, const Value& b);

/// The first marker among the operands, if any.
std::optional<Value> marker_of(const Value& a);
std::optional<Value> marker_of(const Value& a, const Value& b);

std::string_view arith_symbol(Arith op);
std::string_view compare_symbol(Compare op);

}  // namespace flucid::scalar

#endif  // FLUCID_SCALAR_HPP_
