// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_OPERATORS_HPP_
#define FLUCID_OPERATORS_HPP_

#include <array>
#include <optional>
#include <string_view>

namespace flucid {

/// The stream operators both operator modules implement.
enum class StreamOp {
  kFirst,
  kLast,
  kNext,
  kPrev,
  kFby,
  kPby,
  kWvr,
  kRwvr,
  kNwvr,
  kNrwvr,
  kAsa,
  kAla,
  kNasa,
  kNala,
  kUpon,
  kRupon,
  kNupon,
  kNrupon,
  kNeg,
  kNot,
  kAnd,
  kOr,
  kXor,
};

inline constexpr std::array<StreamOp, 23> kAllStreamOps = {
    StreamOp::kFirst, StreamOp::kLast,  StreamOp::kNext,  StreamOp::kPrev,
    StreamOp::kFby,   StreamOp::kPby,   StreamOp::kWvr,   StreamOp::kRwvr,
    StreamOp::kNwvr,  StreamOp::kNrwvr, StreamOp::kAsa,   StreamOp::kAla,
    StreamOp::kNasa,  StreamOp::kNala,  StreamOp::kUpon,  StreamOp::kRupon,
    StreamOp::kNupon, StreamOp::kNrupon, StreamOp::kNeg,  StreamOp::kNot,
    StreamOp::kAnd,   StreamOp::kOr,    StreamOp::kXor,
};

std::string_view op_name(StreamOp op);
std::optional<StreamOp> op_from_name(std::string_view name);
/// 1 for first/last/next/prev/neg/not, 2 otherwise.
int op_arity(StreamOp op);
/// Operators whose right operand is a condition stream (wvr/asa/upon families).
bool op_takes_condition(StreamOp op);

}  // namespace flucid

#endif  // FLUCID_OPERATORS_HPP_
