// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_DESUGAR_HPP_
#define FLUCID_DESUGAR_HPP_

#include <string>

#include "flucid/ast.hpp"

namespace flucid {

/// Name of the dimension assumed when a program declares none.
inline constexpr const char* kDefaultDimension = "d";

/// Rewrites a parsed program into the core form the evaluator expects:
///  - `second X` becomes `first next X`, `prelast X` becomes `last prev X`;
///  - dimensional operators without a `.d` suffix get the dimension of the
///    nearest enclosing `where` that declares one (an error if that scope
///    declares several), or the default dimension;
///  - `combine(s, e)` / `product(a, b)` get the same default as a third
///    argument;
///  - variables, functions and formals are renamed apart so every binder in
///    the program has a unique name (the first binder of a name keeps it).
/// Throws SyntaxError on duplicate definitions within one `where`.
/// Idempotent.
ExprPtr desugar(const ExprPtr& program);

}  // namespace flucid

#endif  // FLUCID_DESUGAR_HPP_
