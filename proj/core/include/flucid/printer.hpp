// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_PRINTER_HPP_
#define FLUCID_PRINTER_HPP_

#include <string>

#include "flucid/ast.hpp"

namespace flucid {

/// Source text that parses back to a structurally equal tree. Operands are
/// parenthesized only where precedence requires it; `where` blocks are
/// printed one definition per line.
std::string print_expr(const Expr& e);
std::string print_expr(const ExprPtr& e);
std::string print_def(const QDef& def);

/// Single-line rendering for traces and diagnostics; long text is elided.
std::string print_brief(const Expr& e, std::size_t max_len = 60);

}  // namespace flucid

#endif  // FLUCID_PRINTER_HPP_
