// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_OPS_INDEXED_HPP_
#define FLUCID_OPS_INDEXED_HPP_

#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "flucid/operators.hpp"
#include "flucid/stream.hpp"

namespace flucid {

/// Raised when a scan for the end of a stream runs past its horizon.
class HorizonExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr StreamIndex kDefaultHorizon = StreamIndex{1} << 20;

/// A stream observed only through random access: index -> value.
///
/// Copies share the accessor. The accessor must be deterministic; streams
/// built by the operators below memoize internally where they iterate.
class IndexedStream {
 public:
  using Accessor = std::function<Value(StreamIndex)>;

  explicit IndexedStream(Accessor fn);
  /// Random access view of a bounded stream: bod below 0, eod past the end.
  IndexedStream(const BoundedStream& source);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] Value at(StreamIndex i) const { return (*fn_)(i); }
  [[nodiscard]] Value operator[](StreamIndex i) const { return at(i); }

  /// Same stream, caching every looked-up index.
  [[nodiscard]] IndexedStream memoized() const;

 private:
  std::shared_ptr<const Accessor> fn_;
};

/// Non-marker values from index 0 up to the first eod. Leading bod slots
/// (prev) and reverse-operator bod terminators are skipped.
std::vector<Value> defined_values(const IndexedStream& s,
                                  StreamIndex horizon = kDefaultHorizon);
/// First index >= 0 holding eod.
StreamIndex extent(const IndexedStream& s, StreamIndex horizon = kDefaultHorizon);
BoundedStream materialize(const IndexedStream& s,
                          StreamIndex horizon = kDefaultHorizon);

// The operators rewritten over `@` (random access) and `#` (the current
// index). Each returns a lazily evaluated stream.
namespace indexed {

/// The `#` stream: i for i >= 0, bod below.
Value hash(StreamIndex i);
IndexedStream hash_stream();
IndexedStream constant(const Value& v);
/// X + c, pointwise; markers pass through.
IndexedStream add(const IndexedStream& x, std::int64_t c);
/// if C then X else Y, pointwise.
IndexedStream if_then_else(const IndexedStream& c, const IndexedStream& x,
                           const IndexedStream& y);

/// [X @ Y]_i = [X]_{[Y]_i}. A marker in Y propagates; a negative index is bod.
Value at_op(const IndexedStream& x, const IndexedStream& y, StreamIndex i);
IndexedStream at(const IndexedStream& x, const IndexedStream& y);

IndexedStream first(const IndexedStream& x);
IndexedStream last(const IndexedStream& x);
IndexedStream next(const IndexedStream& x);
IndexedStream prev(const IndexedStream& x);
IndexedStream fby(const IndexedStream& x, const IndexedStream& y);
IndexedStream pby(const IndexedStream& x, const IndexedStream& y);
IndexedStream wvr(const IndexedStream& x, const IndexedStream& y);
IndexedStream rwvr(const IndexedStream& x, const IndexedStream& y);
IndexedStream nwvr(const IndexedStream& x, const IndexedStream& y);
IndexedStream nrwvr(const IndexedStream& x, const IndexedStream& y);
IndexedStream asa(const IndexedStream& x, const IndexedStream& y);
IndexedStream ala(const IndexedStream& x, const IndexedStream& y);
IndexedStream nasa(const IndexedStream& x, const IndexedStream& y);
IndexedStream nala(const IndexedStream& x, const IndexedStream& y);
IndexedStream upon(const IndexedStream& x, const IndexedStream& y);
IndexedStream rupon(const IndexedStream& x, const IndexedStream& y);
IndexedStream nupon(const IndexedStream& x, const IndexedStream& y);
IndexedStream nrupon(const IndexedStream& x, const IndexedStream& y);
IndexedStream neg(const IndexedStream& x);
IndexedStream logical_not(const IndexedStream& x);
IndexedStream logical_and(const IndexedStream& x, const IndexedStream& y);
IndexedStream logical_or(const IndexedStream& x, const IndexedStream& y);
/// not ((X and Y) or not (X or Y))
IndexedStream logical_xor(const IndexedStream& x, const IndexedStream& y);

IndexedStream apply(StreamOp op, const IndexedStream& x,
                    const IndexedStream& y);
IndexedStream apply(StreamOp op, const IndexedStream& x);

/// The auxiliary streams of the wvr family, exposed for inspection.
///   forward: U = if Y then # else next U,  T = U fby U @ (T + 1)
///   reverse: U = if Y then # else prev U,  T = U pby U @ (T - 1)
/// `negated` tests `Y == 0` instead of `Y`.
struct WheneverIndex {
  IndexedStream u;
  IndexedStream t;
};
WheneverIndex whenever_index(const IndexedStream& y, bool negated,
                             bool reverse);

/// W of the upon family: W = 0 fby (if Y then W + 1 else W), or for the
/// reverse forms W counts down from the last index.
IndexedStream upon_index(const IndexedStream& y, bool negated, bool reverse);

}  // namespace indexed
}  // namespace flucid

#endif  // FLUCID_OPS_INDEXED_HPP_
