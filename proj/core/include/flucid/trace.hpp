// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_TRACE_HPP_
#define FLUCID_TRACE_HPP_

#include <string>
#include <vector>

#include "flucid/context.hpp"

namespace flucid {

/// One established rule conclusion. Records are appended when a rule
/// finishes, so children precede their parent (post-order) and `depth`
/// recovers the derivation tree.
struct TraceRecord {
  std::string rule;
  std::string expr;
  Context context;
  std::string value;
  int depth = 0;
  bool cache_hit = false;
};

class Trace {
 public:
  void add(TraceRecord r) { records_.push_back(std::move(r)); }
  void clear() { records_.clear(); }
  [[nodiscard]] const std::vector<TraceRecord>& records() const {
    return records_;
  }
  [[nodiscard]] bool empty() const { return records_.empty(); }

  /// `rule | expr | context | value`, one record per line, indented by depth.
  [[nodiscard]] std::string to_text() const;
  /// The derivation as a JSON forest: {rule, expr, context, value, cached,
  /// premises: [...]}.
  [[nodiscard]] std::string to_json(int indent = 2) const;

 private:
  std::vector<TraceRecord> records_;
};

}  // namespace flucid

#endif  // FLUCID_TRACE_HPP_
