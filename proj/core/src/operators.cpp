// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/operators.hpp"

namespace flucid {

namespace {

struct OpInfo {
  StreamOp op;
  std::string_view name;
  int arity;
};

constexpr std::array<OpInfo, 23> kOpTable = {{
    {StreamOp::kFirst, "first", 1},   {StreamOp::kLast, "last", 1},
    {StreamOp::kNext, "next", 1},     {StreamOp::kPrev, "prev", 1},
    {StreamOp::kFby, "fby", 2},       {StreamOp::kPby, "pby", 2},
    {StreamOp::kWvr, "wvr", 2},       {StreamOp::kRwvr, "rwvr", 2},
    {StreamOp::kNwvr, "nwvr", 2},     {StreamOp::kNrwvr, "nrwvr", 2},
    {StreamOp::kAsa, "asa", 2},       {StreamOp::kAla, "ala", 2},
    {StreamOp::kNasa, "nasa", 2},     {StreamOp::kNala, "nala", 2},
    {StreamOp::kUpon, "upon", 2},     {StreamOp::kRupon, "rupon", 2},
    {StreamOp::kNupon, "nupon", 2},   {StreamOp::kNrupon, "nrupon", 2},
    {StreamOp::kNeg, "neg", 1},       {StreamOp::kNot, "not", 1},
    {StreamOp::kAnd, "and", 2},       {StreamOp::kOr, "or", 2},
    {StreamOp::kXor, "xor", 2},
}};

}  // namespace

std::string_view op_name(StreamOp op) {
  return kOpTable[static_cast<std::size_t>(op)].name;
}

std::optional<StreamOp> op_from_name(std::string_view name) {
  for (const OpInfo& info : kOpTable) {
    if (info.name == name) return info.op;
  }
  return std::nullopt;
}

int op_arity(StreamOp op) { return kOpTable[static_cast<std::size_t>(op)].arity; }

bool op_takes_condition(StreamOp op) {
  switch (op) {
    case StreamOp::kWvr:
    case StreamOp::kRwvr:
    case StreamOp::kNwvr:
    case StreamOp::kNrwvr:
    case StreamOp::kAsa:
    case StreamOp::kAla:
    case StreamOp::kNasa:
    case StreamOp::kNala:
    case StreamOp::kUpon:
    case StreamOp::kRupon:
    case StreamOp::kNupon:
    case StreamOp::kNrupon:
      return true;
    default:
      return false;
  }
}

}  // namespace flucid
