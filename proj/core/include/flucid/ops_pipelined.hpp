// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_OPS_PIPELINED_HPP_
#define FLUCID_OPS_PIPELINED_HPP_

#include "flucid/operators.hpp"
#include "flucid/stream.hpp"

// Stream operators defined extensionally, element by element, the way the
// original pipelined Lucid presents them. These are the reference side of
// the equivalence checks against flucid::indexed.
//
// Every operator is total over finite streams. Operators whose result is
// conceptually a constant infinite stream (first, last, asa, ...) return a
// stream as long as their left operand. Condition streams must hold
// booleans or integers; anything else raises TypeError.
namespace flucid::pipelined {

BoundedStream first(const BoundedStream& x);
BoundedStream second(const BoundedStream& x);
BoundedStream last(const BoundedStream& x);
BoundedStream prelast(const BoundedStream& x);
BoundedStream next(const BoundedStream& x);
/// Defined values of `prev X`: x0 .. x(n-2). Index 0 of `prev X` is bod,
/// which a BoundedStream cannot hold, so it is not represented.
BoundedStream prev(const BoundedStream& x);

BoundedStream fby(const BoundedStream& x, const BoundedStream& y);
/// y0 .. y(n-1) followed by x0.
BoundedStream pby(const BoundedStream& x, const BoundedStream& y);

BoundedStream wvr(const BoundedStream& x, const BoundedStream& y);
BoundedStream rwvr(const BoundedStream& x, const BoundedStream& y);
BoundedStream nwvr(const BoundedStream& x, const BoundedStream& y);
BoundedStream nrwvr(const BoundedStream& x, const BoundedStream& y);

BoundedStream asa(const BoundedStream& x, const BoundedStream& y);
BoundedStream ala(const BoundedStream& x, const BoundedStream& y);
BoundedStream nasa(const BoundedStream& x, const BoundedStream& y);
BoundedStream nala(const BoundedStream& x, const BoundedStream& y);

/// Result slot k holds x[W(k)], W(0) = 0, W(k+1) = W(k) + [y(k) true].
/// One slot per condition element, plus a final slot at k = |y| that exists
/// only if the last condition did not advance.
BoundedStream upon(const BoundedStream& x, const BoundedStream& y);
BoundedStream rupon(const BoundedStream& x, const BoundedStream& y);
BoundedStream nupon(const BoundedStream& x, const BoundedStream& y);
BoundedStream nrupon(const BoundedStream& x, const BoundedStream& y);

BoundedStream neg(const BoundedStream& x);
BoundedStream logical_not(const BoundedStream& x);
BoundedStream logical_and(const BoundedStream& x, const BoundedStream& y);
BoundedStream logical_or(const BoundedStream& x, const BoundedStream& y);
BoundedStream logical_xor(const BoundedStream& x, const BoundedStream& y);

/// Dispatch by tag. Unary operators ignore `y`.
BoundedStream apply(StreamOp op, const BoundedStream& x,
                    const BoundedStream& y = {});

}  // namespace flucid::pipelined

#endif  // FLUCID_OPS_PIPELINED_HPP_
