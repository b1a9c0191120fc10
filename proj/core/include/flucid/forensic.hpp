// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_FORENSIC_HPP_
#define FLUCID_FORENSIC_HPP_

#include "flucid/ops_indexed.hpp"
#include "flucid/stream.hpp"

namespace flucid::forensic {

/// `run` extended by `e`. A Seq `e` contributes its events in order; any
/// other value is appended as one event. Throws TypeError if `run` is not a
/// Seq or `e` is a marker.
Value extend_run(const Value& run, const Value& e);

/// Appends `e` to every run of `s`.
BoundedStream combine(const BoundedStream& s, const Value& e);
/// Every run of `s1` extended by every run of `s2`, `s2`-major:
/// combine(s1, s2[0]) ++ combine(s1, s2[1]) ++ ...
BoundedStream product(const BoundedStream& s1, const BoundedStream& s2);

// Lazy forms used by the evaluator.
IndexedStream combine(const IndexedStream& s, const Value& e);
IndexedStream product(const IndexedStream& s1, const IndexedStream& s2);

}  // namespace flucid::forensic

#endif  // FLUCID_FORENSIC_HPP_
