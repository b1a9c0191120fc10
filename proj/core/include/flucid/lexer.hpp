// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_LEXER_HPP_
#define FLUCID_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "flucid/error.hpp"

namespace flucid {

enum class TokenKind { kIdent, kInt, kKeyword, kSymbol, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourcePos pos;

  [[nodiscard]] bool is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
  [[nodiscard]] bool is_symbol(std::string_view t) const {
    return is(TokenKind::kSymbol, t);
  }
  [[nodiscard]] bool is_keyword(std::string_view t) const {
    return is(TokenKind::kKeyword, t);
  }
};

bool is_keyword(std::string_view word);
bool is_identifier(std::string_view word);

/// Splits program text into tokens, ending with a kEnd token. Skips
/// whitespace, `// ...` and `/* ... */` comments. Throws SyntaxError.
std::vector<Token> tokenize(std::string_view source);

}  // namespace flucid

#endif  // FLUCID_LEXER_HPP_
