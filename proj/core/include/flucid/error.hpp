// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_ERROR_HPP_
#define FLUCID_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flucid {

/// Line/column of a token in program text. Line 0 means "no position".
struct SourcePos {
  int line = 0;
  int column = 0;

  [[nodiscard]] bool known() const { return line > 0; }
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

std::string to_string(SourcePos pos);

/// Raised by the lexer, parser and desugarer.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourcePos pos, const std::string& message);

  [[nodiscard]] SourcePos pos() const { return pos_; }
  [[nodiscard]] const std::string& detail() const { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

/// Raised by stream operators on ill-typed elements (e.g. `neg` of a boolean).
class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flucid

#endif  // FLUCID_ERROR_HPP_
