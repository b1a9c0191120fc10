// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include "flucid/operators.hpp"

namespace flucid {

std::string to_string(SourcePos pos) {
  if (!pos.known()) return "?";
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

SyntaxError::SyntaxError(SourcePos pos, const std::string& message)
    : std::runtime_error(pos.known() ? to_string(pos) + ": " + message
                                     : message),
      pos_(pos),
      detail_(message) {}

namespace {

constexpr std::array<std::string_view, 19> kReserved = {
    "where",   "end",  "dimension", "if",      "then",  "else",  "fi",
    "true",    "false", "bod",      "eod",     "second", "prelast",
    "combine", "product", "iseod",  "isbod",   "neg",   "not",
};

// Longest first so that `==` wins over `=`.
constexpr std::array<std::string_view, 24> kSymbols = {
    "==", "!=", "<=", ">=", "(", ")", "[", "]", "{", "}", ",", ";",
    ":",  ".",  "#",  "@",  "=", "<", ">", "+", "-", "*", "/", "%",
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto k : kReserved) {
    if (k == word) return true;
  }
  return op_from_name(word).has_value();
}

bool is_identifier(std::string_view word) {
  if (word.empty() || !ident_start(word.front())) return false;
  for (char c : word) {
    if (!ident_char(c)) return false;
  }
  return !is_keyword(word);
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < src.size()) {
    const char c = src[i];
    const SourcePos pos{line, col};
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "//") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (src.substr(i, 2) == "/*") {
      const auto close = src.find("*/", i + 2);
      if (close == std::string_view::npos) {
        throw SyntaxError(pos, "unterminated comment");
      }
      advance(close + 2 - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])) != 0) ++j;
      if (j < src.size() && ident_start(src[j])) {
        throw SyntaxError(pos, "malformed number");
      }
      std::int64_t value = 0;
      auto [p, ec] = std::from_chars(src.data() + i, src.data() + j, value);
      if (ec != std::errc()) throw SyntaxError(pos, "integer literal out of range");
      out.push_back({TokenKind::kInt, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      const auto kind = is_keyword(word) ? TokenKind::kKeyword : TokenKind::kIdent;
      out.push_back({kind, std::move(word), pos});
      advance(j - i);
      continue;
    }
    if (src.substr(i, 2) == "@{") {
      throw SyntaxError(pos, "'@{' is not a token; separate '@' and '{'");
    }
    bool matched = false;
    for (auto sym : kSymbols) {
      if (src.substr(i, sym.size()) == sym) {
        out.push_back({TokenKind::kSymbol, std::string(sym), pos});
        advance(sym.size());
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({TokenKind::kEnd, "", SourcePos{line, col}});
  return out;
}

}  // namespace flucid
