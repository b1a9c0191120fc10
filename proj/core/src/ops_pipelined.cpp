// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/ops_pipelined.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "flucid/error.hpp"

namespace flucid::pipelined {

namespace {

using Values = std::vector<Value>;

BoundedStream constant(const Value& v, std::size_t n) {
  return BoundedStream(Values(n, v));
}

bool condition(const Value& v, bool negated) {
  if (!truth_coercible(v)) {
    throw TypeError(std::string("condition stream holds a ") + v.kind_name());
  }
  bool t = v.is_bool() ? v.as_bool() : v.as_int() != 0;
  return negated ? !t : t;
}

// X wvr Y = if first Y then X fby (next X wvr next Y)
//           else (next X wvr next Y)
// unrolled over the finite prefix.
BoundedStream whenever(const BoundedStream& x, const BoundedStream& y,
                       bool negated) {
  Values out;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (condition(y.elements()[k], negated)) out.push_back(x.elements()[k]);
  }
  return BoundedStream(std::move(out));
}

// X rwvr Y = if last Y then X pby (prev X rwvr prev Y)
//            else (prev X rwvr prev Y)
// i.e. the same selection consumed from the end.
BoundedStream retreat_whenever(const BoundedStream& x, const BoundedStream& y,
                               bool negated) {
  Values out;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t k = n; k-- > 0;) {
    if (condition(y.elements()[k], negated)) out.push_back(x.elements()[k]);
  }
  return BoundedStream(std::move(out));
}

// X upon Y = X fby (if first Y then (next X upon next Y)
//                   else (X upon next Y))
BoundedStream advance_upon(const BoundedStream& x, const BoundedStream& y,
                           bool negated) {
  Values out;
  std::size_t pos = 0;
  for (std::size_t k = 0;; ++k) {
    if (pos >= x.size()) break;
    out.push_back(x.elements()[pos]);
    if (k == y.size()) break;
    bool advance = condition(y.elements()[k], negated);
    if (advance && k + 1 == y.size()) break;  // final slot would be past Y
    if (advance) ++pos;
  }
  return BoundedStream(std::move(out));
}

Value logical(const Value& a, const Value& b, bool result) {
  if (!truth_coercible(a) || !truth_coercible(b)) {
    throw TypeError("logical operator on non-truth value");
  }
  if (a.is_bool() && b.is_bool()) return Value(result);
  return Value(std::int64_t{result ? 1 : 0});
}

template <typename Fn>
BoundedStream zip(const BoundedStream& x, const BoundedStream& y, Fn fn) {
  Values out;
  const std::size_t n = std::min(x.size(), y.size());
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(fn(x.elements()[k], y.elements()[k]));
  }
  return BoundedStream(std::move(out));
}

}  // namespace

BoundedStream first(const BoundedStream& x) {
  if (x.empty()) return {};
  return constant(x.elements().front(), x.size());
}

BoundedStream second(const BoundedStream& x) { return first(next(x)); }

BoundedStream last(const BoundedStream& x) {
  if (x.empty()) return {};
  return constant(x.elements().back(), x.size());
}

BoundedStream prelast(const BoundedStream& x) { return last(prev(x)); }

BoundedStream next(const BoundedStream& x) {
  if (x.empty()) return {};
  return BoundedStream(Values(x.elements().begin() + 1, x.elements().end()));
}

BoundedStream prev(const BoundedStream& x) {
  if (x.empty()) return {};
  return BoundedStream(Values(x.elements().begin(), x.elements().end() - 1));
}

BoundedStream fby(const BoundedStream& x, const BoundedStream& y) {
  if (x.empty()) return {};
  Values out;
  out.reserve(y.size() + 1);
  out.push_back(x.elements().front());
  out.insert(out.end(), y.elements().begin(), y.elements().end());
  return BoundedStream(std::move(out));
}

BoundedStream pby(const BoundedStream& x, const BoundedStream& y) {
  Values out(y.elements());
  if (!x.empty()) out.push_back(x.elements().front());
  return BoundedStream(std::move(out));
}

BoundedStream wvr(const BoundedStream& x, const BoundedStream& y) {
  return whenever(x, y, false);
}
BoundedStream rwvr(const BoundedStream& x, const BoundedStream& y) {
  return retreat_whenever(x, y, false);
}
BoundedStream nwvr(const BoundedStream& x, const BoundedStream& y) {
  return whenever(x, y, true);
}
BoundedStream nrwvr(const BoundedStream& x, const BoundedStream& y) {
  return retreat_whenever(x, y, true);
}

BoundedStream asa(const BoundedStream& x, const BoundedStream& y) {
  BoundedStream w = wvr(x, y);
  if (w.empty()) return {};
  return constant(w.elements().front(), x.size());
}

BoundedStream ala(const BoundedStream& x, const BoundedStream& y) {
  BoundedStream w = wvr(x, y);
  if (w.empty()) return {};
  return constant(w.elements().back(), x.size());
}

BoundedStream nasa(const BoundedStream& x, const BoundedStream& y) {
  BoundedStream w = nwvr(x, y);
  if (w.empty()) return {};
  return constant(w.elements().front(), x.size());
}

BoundedStream nala(const BoundedStream& x, const BoundedStream& y) {
  BoundedStream w = nwvr(x, y);
  if (w.empty()) return {};
  return constant(w.elements().back(), x.size());
}

BoundedStream upon(const BoundedStream& x, const BoundedStream& y) {
  return advance_upon(x, y, false);
}
BoundedStream rupon(const BoundedStream& x, const BoundedStream& y) {
  return advance_upon(reverse(x), reverse(y), false);
}
BoundedStream nupon(const BoundedStream& x, const BoundedStream& y) {
  return advance_upon(x, y, true);
}
BoundedStream nrupon(const BoundedStream& x, const BoundedStream& y) {
  return advance_upon(reverse(x), reverse(y), true);
}

BoundedStream neg(const BoundedStream& x) {
  Values out;
  out.reserve(x.size());
  for (const Value& v : x.elements()) {
    if (!v.is_int()) {
      throw TypeError(std::string("neg of a ") + v.kind_name());
    }
    out.emplace_back(-v.as_int());
  }
  return BoundedStream(std::move(out));
}

BoundedStream logical_not(const BoundedStream& x) {
  Values out;
  out.reserve(x.size());
  for (const Value& v : x.elements()) {
    if (v.is_bool()) {
      out.emplace_back(!v.as_bool());
    } else if (v.is_int()) {
      out.emplace_back(std::int64_t{v.as_int() == 0 ? 1 : 0});
    } else {
      throw TypeError(std::string("not of a ") + v.kind_name());
    }
  }
  return BoundedStream(std::move(out));
}

BoundedStream logical_and(const BoundedStream& x, const BoundedStream& y) {
  return zip(x, y, [](const Value& a, const Value& b) {
    return logical(a, b, condition(a, false) && condition(b, false));
  });
}

BoundedStream logical_or(const BoundedStream& x, const BoundedStream& y) {
  return zip(x, y, [](const Value& a, const Value& b) {
    return logical(a, b, condition(a, false) || condition(b, false));
  });
}

// Elementwise exclusive or. Agrees with not((X and Y) or not(X or Y)),
// including its result kind: integer as soon as either side is numeric.
BoundedStream logical_xor(const BoundedStream& x, const BoundedStream& y) {
  return zip(x, y, [](const Value& a, const Value& b) {
    return logical(a, b, condition(a, false) != condition(b, false));
  });
}

BoundedStream apply(StreamOp op, const BoundedStream& x,
                    const BoundedStream& y) {
  switch (op) {
    case StreamOp::kFirst: return first(x);
    case StreamOp::kLast: return last(x);
    case StreamOp::kNext: return next(x);
    case StreamOp::kPrev: return prev(x);
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
    case StreamOp::kNeg: return neg(x);
    case StreamOp::kNot: return logical_not(x);
    case StreamOp::kAnd: return logical_and(x, y);
    case StreamOp::kOr: return logical_or(x, y);
    case StreamOp::kXor: return logical_xor(x, y);
  }
  throw std::logic_error("unknown stream operator");
}

}  // namespace flucid::pipelined
