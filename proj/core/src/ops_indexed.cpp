// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/ops_indexed.hpp"

#include <optional>
#include <string>
#include <unordered_map>

#include "flucid/error.hpp"
#include "flucid/scalar.hpp"

namespace flucid {

IndexedStream::IndexedStream(Accessor fn)
    : fn_(std::make_shared<const Accessor>(std::move(fn))) {}

IndexedStream::IndexedStream(const BoundedStream& source)
    : IndexedStream([s = source](StreamIndex i) { return s.at(i); }) {}

IndexedStream IndexedStream::memoized() const {
  auto cache = std::make_shared<std::unordered_map<StreamIndex, Value>>();
  return IndexedStream([fn = fn_, cache](StreamIndex i) {
    if (auto it = cache->find(i); it != cache->end()) return it->second;
    Value v = (*fn)(i);
    cache->emplace(i, v);
    return v;
  });
}

std::vector<Value> defined_values(const IndexedStream& s, StreamIndex horizon) {
  std::vector<Value> out;
  for (StreamIndex i = 0; i < horizon; ++i) {
    Value v = s.at(i);
    if (v.is_eod()) return out;
    if (!v.is_marker()) out.push_back(std::move(v));
  }
  throw HorizonExceeded("no eod within " + std::to_string(horizon) +
                        " elements");
}

StreamIndex extent(const IndexedStream& s, StreamIndex horizon) {
  for (StreamIndex i = 0; i < horizon; ++i) {
    if (s.at(i).is_eod()) return i;
  }
  throw HorizonExceeded("no eod within " + std::to_string(horizon) +
                        " elements");
}

BoundedStream materialize(const IndexedStream& s, StreamIndex horizon) {
  return BoundedStream(defined_values(s, horizon));
}

namespace indexed {

namespace {

bool condition(const Value& v, bool negated) {
  if (!truth_coercible(v)) {
    throw TypeError(std::string("condition stream holds a ") + v.kind_name());
  }
  return truth(v) != negated;
}

// Lazily computed extent shared by the closures of one operator instance.
class LazyExtent {
 public:
  explicit LazyExtent(IndexedStream s) : s_(std::move(s)) {}
  StreamIndex get() {
    if (!n_) n_ = extent(s_);
    return *n_;
  }

 private:
  IndexedStream s_;
  std::optional<StreamIndex> n_;
};

// A stream defined by a first-order recurrence s(k+1) = step(s(k), k),
// cached as it is unrolled. Once a marker appears it repeats.
class Recurrence {
 public:
  using Step = std::function<Value(const Value&, StreamIndex)>;
  Recurrence(std::function<Value()> start, Step step)
      : start_(std::move(start)), step_(std::move(step)) {}

  Value at(StreamIndex i) {
    if (i < 0) return Value::bod();
    if (values_.empty()) values_.push_back(start_());
    while (static_cast<StreamIndex>(values_.size()) <= i) {
      const Value& last = values_.back();
      if (last.is_marker()) return last;
      values_.push_back(step_(last, static_cast<StreamIndex>(values_.size()) - 1));
    }
    return values_[static_cast<std::size_t>(i)];
  }

 private:
  std::function<Value()> start_;
  Step step_;
  std::vector<Value> values_;
};

IndexedStream from_recurrence(std::shared_ptr<Recurrence> r) {
  return IndexedStream([r](StreamIndex i) { return r->at(i); });
}

// Reverse-direction results end with one bod slot, then eod.
IndexedStream terminate_reverse(IndexedStream slots) {
  return IndexedStream([slots](StreamIndex i) {
    if (i < 0) return Value::bod();
    Value v = slots.at(i);
    if (!v.is_marker()) return v;
    if (i > 0 && slots.at(i - 1).is_marker()) return Value::eod();
    return Value::bod();
  });
}

template <typename Fn>
IndexedStream pointwise(const IndexedStream& x, Fn fn) {
  return IndexedStream([x, fn](StreamIndex i) { return fn(x.at(i)); });
}

template <typename Fn>
IndexedStream pointwise(const IndexedStream& x, const IndexedStream& y, Fn fn) {
  return IndexedStream(
      [x, y, fn](StreamIndex i) { return fn(x.at(i), y.at(i)); });
}

// "first of R" restricted to the extent of X.
IndexedStream first_of_within(const IndexedStream& r, const IndexedStream& x) {
  return IndexedStream([r, x](StreamIndex i) {
    if (i < 0) return Value::bod();
    if (x.at(i).is_eod()) return Value::eod();
    return r.at(0);
  });
}

// "last of R" restricted to the extent of X.
IndexedStream last_of_within(const IndexedStream& r, const IndexedStream& x) {
  auto n = std::make_shared<LazyExtent>(r);
  return IndexedStream([r, x, n](StreamIndex i) {
    if (i < 0) return Value::bod();
    if (x.at(i).is_eod()) return Value::eod();
    const StreamIndex len = n->get();
    if (len == 0) return Value::eod();
    return r.at(len - 1);
  });
}

IndexedStream whenever(const IndexedStream& x, const IndexedStream& y,
                       bool negated, bool reverse) {
  WheneverIndex aux = whenever_index(y, negated, reverse);
  IndexedStream selected = at(x, aux.t);
  if (!reverse) {
    return IndexedStream([selected](StreamIndex i) {
      if (i < 0) return Value::bod();
      return selected.at(i);
    });
  }
  return terminate_reverse(selected);
}

IndexedStream advance(const IndexedStream& x, const IndexedStream& y,
                      bool negated, bool reverse) {
  IndexedStream w = upon_index(y, negated, reverse);
  if (!reverse) {
    return IndexedStream([x, y, w](StreamIndex i) {
      if (i < 0) return Value::bod();
      Value wi = w.at(i);
      if (wi.is_marker()) return Value::eod();
      // Slot |Y| exists only when the last condition did not advance.
      if (i > 0 && y.at(i).is_eod() && !y.at(i - 1).is_marker() &&
          wi != w.at(i - 1)) {
        return Value::eod();
      }
      return at_op(x, w, i);
    });
  }
  auto n = std::make_shared<LazyExtent>(y);
  IndexedStream slots([x, w, n](StreamIndex i) {
    if (i < 0) return Value::bod();
    Value wi = w.at(i);
    if (wi.is_marker()) return wi;
    if (i > 0 && i == n->get() && wi != w.at(i - 1)) return Value::bod();
    return at_op(x, w, i);
  });
  return terminate_reverse(slots);
}

}  // namespace

Value hash(StreamIndex i) {
  if (i < 0) return Value::bod();
  return Value(i);
}

IndexedStream hash_stream() { return IndexedStream(&hash); }

IndexedStream constant(const Value& v) {
  return IndexedStream([v](StreamIndex) { return v; });
}

IndexedStream add(const IndexedStream& x, std::int64_t c) {
  return pointwise(x, [c](const Value& v) {
    return scalar::arith(scalar::Arith::kAdd, v, Value(c));
  });
}

IndexedStream if_then_else(const IndexedStream& c, const IndexedStream& x,
                           const IndexedStream& y) {
  return IndexedStream([c, x, y](StreamIndex i) {
    Value cond = c.at(i);
    if (cond.is_marker()) return cond;
    return truth(cond) ? x.at(i) : y.at(i);
  });
}

Value at_op(const IndexedStream& x, const IndexedStream& y, StreamIndex i) {
  Value target = y.at(i);
  if (target.is_marker()) return target;
  if (!target.is_int()) {
    throw TypeError(std::string("@ index is a ") + target.kind_name());
  }
  if (target.as_int() < 0) return Value::bod();
  return x.at(target.as_int());
}

IndexedStream at(const IndexedStream& x, const IndexedStream& y) {
  return IndexedStream([x, y](StreamIndex i) { return at_op(x, y, i); });
}

// first X = X @ 0, over the extent of X.
IndexedStream first(const IndexedStream& x) {
  return first_of_within(at(x, constant(Value(0))), x);
}

// The element just before eod, over the extent of X.
IndexedStream last(const IndexedStream& x) { return last_of_within(x, x); }

// next X = X @ (# + 1)
IndexedStream next(const IndexedStream& x) {
  return at(x, add(hash_stream(), 1));
}

// prev X = X @ (# - 1), over the extent of X.
IndexedStream prev(const IndexedStream& x) {
  IndexedStream shifted = at(x, add(hash_stream(), -1));
  return IndexedStream([x, shifted](StreamIndex i) {
    if (x.at(i).is_eod()) return Value::eod();
    return shifted.at(i);
  });
}

// X fby Y = if # <= 0 then X else Y @ (# - 1)
IndexedStream fby(const IndexedStream& x, const IndexedStream& y) {
  IndexedStream shifted = at(y, add(hash_stream(), -1));
  return IndexedStream([x, shifted](StreamIndex i) {
    return i <= 0 ? x.at(i) : shifted.at(i);
  });
}

// X pby Y = if iseod Y then (if iseod prev Y then eod else first X) else Y
IndexedStream pby(const IndexedStream& x, const IndexedStream& y) {
  return IndexedStream([x, y](StreamIndex i) {
    if (i < 0) return Value::bod();
    Value here = y.at(i);
    if (!here.is_eod()) return here;
    Value before = i > 0 ? y.at(i - 1) : Value::bod();
    if (before.is_eod()) return Value::eod();
    return x.at(0);
  });
}

IndexedStream wvr(const IndexedStream& x, const IndexedStream& y) {
  return whenever(x, y, false, false);
}
IndexedStream rwvr(const IndexedStream& x, const IndexedStream& y) {
  return whenever(x, y, false, true);
}
IndexedStream nwvr(const IndexedStream& x, const IndexedStream& y) {
  return whenever(x, y, true, false);
}
IndexedStream nrwvr(const IndexedStream& x, const IndexedStream& y) {
  return whenever(x, y, true, true);
}

// X asa Y = first (X wvr Y)
IndexedStream asa(const IndexedStream& x, const IndexedStream& y) {
  return first_of_within(wvr(x, y).memoized(), x);
}
// X ala Y = last (X wvr Y)
IndexedStream ala(const IndexedStream& x, const IndexedStream& y) {
  return last_of_within(wvr(x, y).memoized(), x);
}
IndexedStream nasa(const IndexedStream& x, const IndexedStream& y) {
  return first_of_within(nwvr(x, y).memoized(), x);
}
IndexedStream nala(const IndexedStream& x, const IndexedStream& y) {
  return last_of_within(nwvr(x, y).memoized(), x);
}

IndexedStream upon(const IndexedStream& x, const IndexedStream& y) {
  return advance(x, y, false, false);
}
IndexedStream rupon(const IndexedStream& x, const IndexedStream& y) {
  return advance(x, y, false, true);
}
IndexedStream nupon(const IndexedStream& x, const IndexedStream& y) {
  return advance(x, y, true, false);
}
IndexedStream nrupon(const IndexedStream& x, const IndexedStream& y) {
  return advance(x, y, true, true);
}

IndexedStream neg(const IndexedStream& x) {
  return pointwise(x, [](const Value& v) { return scalar::negate(v); });
}

IndexedStream logical_not(const IndexedStream& x) {
  return pointwise(x, [](const Value& v) { return scalar::logical_not(v); });
}

IndexedStream logical_and(const IndexedStream& x, const IndexedStream& y) {
  return pointwise(x, y, [](const Value& a, const Value& b) {
    return scalar::logical_and(a, b);
  });
}

IndexedStream logical_or(const IndexedStream& x, const IndexedStream& y) {
  return pointwise(x, y, [](const Value& a, const Value& b) {
    return scalar::logical_or(a, b);
  });
}

IndexedStream logical_xor(const IndexedStream& x, const IndexedStream& y) {
  return logical_not(
      logical_or(logical_and(x, y), logical_not(logical_or(x, y))));
}

IndexedStream apply(StreamOp op, const IndexedStream& x) {
  switch (op) {
    case StreamOp::kFirst: return first(x);
    case StreamOp::kLast: return last(x);
    case StreamOp::kNext: return next(x);
    case StreamOp::kPrev: return prev(x);
    case StreamOp::kNeg: return neg(x);
    case StreamOp::kNot: return logical_not(x);
    default: break;
  }
  throw std::invalid_argument(std::string(op_name(op)) +
                              " takes two operands");
}

IndexedStream apply(StreamOp op, const IndexedStream& x,
                    const IndexedStream& y) {
  switch (op) {
    case StreamOp::kFby: return fby(x, y);
    case StreamOp::kPby: return pby(x, y);
    case StreamOp::kWvr: return wvr(x, y);
    case StreamOp::kRwvr: return rwvr(x, y);
    case StreamOp::kNwvr: return nwvr(x, y);
    case StreamOp::kNrwvr: return nrwvr(x, y);
    case StreamOp::kAsa: return asa(x, y);
    case StreamOp::kAla: return ala(x, y);
    case StreamOp::kNasa: return nasa(x, y);
    case StreamOp::kNala: return nala(x, y);
    case StreamOp::kUpon: return upon(x, y);
    case StreamOp::kRupon: return rupon(x, y);
    case StreamOp::kNupon: return nupon(x, y);
    case StreamOp::kNrupon: return nrupon(x, y);
    case StreamOp::kAnd: return logical_and(x, y);
    case StreamOp::kOr: return logical_or(x, y);
    case StreamOp::kXor: return logical_xor(x, y);
    default: return apply(op, x);
  }
}

WheneverIndex whenever_index(const IndexedStream& y, bool negated,
                             bool reverse) {
  if (!reverse) {
    // U = if Y then # else next U: scan forward to the next qualifying index.
    IndexedStream u([y, negated](StreamIndex j) {
      for (StreamIndex k = j;; ++k) {
        if (k - j > kDefaultHorizon) {
          throw HorizonExceeded("wvr: condition never holds");
        }
        Value c = y.at(k);
        if (c.is_marker()) return c;
        if (condition(c, negated)) return hash(k);
      }
    });
    u = u.memoized();
    // T = U fby U @ (T + 1)
    auto t = std::make_shared<Recurrence>(
        [u] { return u.at(0); },
        [u](const Value& prev, StreamIndex) {
          return u.at(prev.as_int() + 1);
        });
    return {u, from_recurrence(t)};
  }

  // U = if Y then # else prev U: scan backward.
  IndexedStream u([y, negated](StreamIndex j) {
    for (StreamIndex k = j;; --k) {
      if (k < 0) return Value::bod();
      Value c = y.at(k);
      if (c.is_marker()) return c;
      if (condition(c, negated)) return hash(k);
    }
  });
  u = u.memoized();
  auto n = std::make_shared<LazyExtent>(y);
  // T = U pby U @ (T - 1): starts from the last index and walks back.
  auto t = std::make_shared<Recurrence>(
      [u, n] { return u.at(n->get() - 1); },
      [u](const Value& prev, StreamIndex) { return u.at(prev.as_int() - 1); });
  return {u, from_recurrence(t)};
}

IndexedStream upon_index(const IndexedStream& y, bool negated, bool reverse) {
  if (!reverse) {
    // W = 0 fby (if Y then W + 1 else W)
    auto w = std::make_shared<Recurrence>(
        [] { return Value(0); },
        [y, negated](const Value& prev, StreamIndex k) {
          Value c = y.at(k);
          if (c.is_marker()) return c;
          return condition(c, negated) ? Value(prev.as_int() + 1) : prev;
        });
    return from_recurrence(w);
  }
  // W = 0 pby (if Y then W - 1 else W), read from the end of Y.
  auto n = std::make_shared<LazyExtent>(y);
  auto w = std::make_shared<Recurrence>(
      [n] { return Value(n->get() - 1); },
      [y, negated, n](const Value& prev, StreamIndex k) {
        Value c = y.at(n->get() - 1 - k);
        if (c.is_marker()) return c;
        return condition(c, negated) ? Value(prev.as_int() - 1) : prev;
      });
  return from_recurrence(w);
}

}  // namespace indexed
}  // namespace flucid
