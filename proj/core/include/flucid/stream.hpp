// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_STREAM_HPP_
#define FLUCID_STREAM_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "flucid/value.hpp"

namespace flucid {

/// Position along a dimension. Unitless, may be negative.
using StreamIndex = std::int64_t;

/// A finite stream: bod below index 0, eod from length() onwards.
///
/// Elements are never markers; the constructor rejects them.
class BoundedStream {
 public:
  BoundedStream() = default;
  explicit BoundedStream(std::vector<Value> elements);
  BoundedStream(std::initializer_list<Value> elements);

  [[nodiscard]] Value at(StreamIndex i) const;
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] bool empty() const { return elements_.empty(); }
  [[nodiscard]] const std::vector<Value>& elements() const { return elements_; }

  friend bool operator==(const BoundedStream&, const BoundedStream&) = default;

 private:
  std::vector<Value> elements_;
};

Value at(const BoundedStream& s, StreamIndex i);
BoundedStream reverse(const BoundedStream& s);
/// The non-marker values in index order. For a BoundedStream that is just
/// the element list.
std::vector<Value> defined_values(const BoundedStream& s);

/// `[1 2 3]`, `[T F]`, `[]`.
std::string to_string(const BoundedStream& s);
/// Inverse of to_string. Accepts integers, T/F, true/false, `(...)` runs.
/// Throws std::invalid_argument on malformed input or on bod/eod inside.
BoundedStream parse_stream_literal(std::string_view text);

/// Convenience for `[first, first+1, ..., last]`.
BoundedStream iota_stream(std::int64_t first, std::int64_t last);

}  // namespace flucid

#endif  // FLUCID_STREAM_HPP_
