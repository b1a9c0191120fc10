// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_PARSER_HPP_
#define FLUCID_PARSER_HPP_

#include <string_view>
#include <vector>

#include "flucid/ast.hpp"
#include "flucid/lexer.hpp"

namespace flucid {

/// Parses a whole program (one expression, usually `E where ... end`).
/// Throws SyntaxError with the position and the tokens that were expected.
ExprPtr parse(std::string_view source);
ExprPtr parse(const std::vector<Token>& tokens);

/// A REPL line is either a run of definitions or an expression.
struct ReplInput {
  std::vector<QDefPtr> defs;
  ExprPtr expr;
};
ReplInput parse_repl_input(std::string_view source);

}  // namespace flucid

#endif  // FLUCID_PARSER_HPP_
