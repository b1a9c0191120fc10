// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/forensic.hpp"

#include <optional>
#include <string>

#include "flucid/error.hpp"

namespace flucid::forensic {

Value extend_run(const Value& run, const Value& e) {
  if (!run.is_seq()) {
    throw TypeError(std::string("combine expects a run, got ") +
                    run.kind_name());
  }
  if (e.is_marker()) throw TypeError("cannot append a marker to a run");
  Seq out = run.as_seq();
  if (e.is_seq()) {
    const auto& tail = e.as_seq().items;
    out.items.insert(out.items.end(), tail.begin(), tail.end());
  } else {
    out.items.push_back(e);
  }
  return Value(std::move(out));
}

BoundedStream combine(const BoundedStream& s, const Value& e) {
  std::vector<Value> out;
  out.reserve(s.size());
  for (const Value& run : s.elements()) out.push_back(extend_run(run, e));
  return BoundedStream(std::move(out));
}

BoundedStream product(const BoundedStream& s1, const BoundedStream& s2) {
  std::vector<Value> out;
  out.reserve(s1.size() * s2.size());
  for (const Value& e : s2.elements()) {
    for (const Value& run : s1.elements()) out.push_back(extend_run(run, e));
  }
  return BoundedStream(std::move(out));
}

IndexedStream combine(const IndexedStream& s, const Value& e) {
  return IndexedStream([s, e](StreamIndex i) {
    Value run = s.at(i);
    if (run.is_marker()) return run;
    return extend_run(run, e);
  });
}

IndexedStream product(const IndexedStream& s1, const IndexedStream& s2) {
  auto n1 = std::make_shared<std::optional<StreamIndex>>();
  return IndexedStream([s1, s2, n1](StreamIndex i) {
    if (i < 0) return Value::bod();
    if (!*n1) *n1 = extent(s1);
    const StreamIndex n = **n1;
    if (n == 0) return Value::eod();
    Value e = s2.at(i / n);
    if (e.is_marker()) return Value::eod();
    return extend_run(s1.at(i % n), e);
  });
}

}  // namespace flucid::forensic
