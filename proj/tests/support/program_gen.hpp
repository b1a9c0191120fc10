// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

// Random well-scoped program text over the dimension `d`, plus a token-level
// substitution used as an independent model of function application.

#ifndef FLUCID_TESTS_PROGRAM_GEN_HPP_
#define FLUCID_TESTS_PROGRAM_GEN_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flucid/evaluator.hpp"
#include "flucid/lexer.hpp"

namespace flucid::testing {

class ProgramGen {
 public:
  explicit ProgramGen(std::uint64_t seed) : rng_(seed) {}

  // An expression whose free identifiers are drawn from `leaves`.
  std::string expr(int depth, const std::vector<std::string>& leaves) {
    if (depth <= 0 || chance(0.25)) return leaf(leaves);
    auto sub = [&] { return expr(depth - 1, leaves); };
    switch (pick(10)) {
      case 0: return "(" + sub() + " + " + sub() + ")";
      case 1: return "(" + sub() + " * " + sub() + ")";
      case 2: return "(" + sub() + " - " + sub() + ")";
      case 3: return "first " + sub();
      case 4: return "next " + sub();
      case 5: return "prev " + sub();
      case 6: return "(" + sub() + " fby " + sub() + ")";
      case 7: return "(" + sub() + " @.d " + std::to_string(pick(5)) + ")";
      case 8:
        return "if " + sub() + " > " + sub() + " then " + sub() + " else " +
               sub() + " fi";
      default: return "(" + sub() + " @ [d: " + std::to_string(pick(5)) + "])";
    }
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

 private:
  std::string leaf(const std::vector<std::string>& leaves) {
    switch (pick(4)) {
      case 0: return std::to_string(pick(10));
      case 1: return "#.d";
      default: return leaves.empty() ? "1" : leaves[static_cast<std::size_t>(pick(static_cast<int>(leaves.size())))];
    }
  }

  std::mt19937_64 rng_;
};

// Replaces each identifier token named in `actuals` by its parenthesized
// text. Works on tokens, never on the syntax tree.
inline std::string substitute_text(const std::string& body,
                                   const std::map<std::string, std::string>& actuals) {
  std::string out;
  for (const Token& t : tokenize(body)) {
    if (t.kind == TokenKind::kEnd) break;
    auto it = t.kind == TokenKind::kIdent ? actuals.find(t.text) : actuals.end();
    out += it != actuals.end() ? "(" + it->second + ")" : t.text;
    out += ' ';
  }
  return out;
}

// Either a value or the kind of evaluation error.
struct Outcome {
  std::optional<Value> value;
  std::optional<ErrorKind> error;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

inline Outcome evaluate(const std::string& src, const Context& ambient = {},
                        EvalOptions opts = {}) {
  Session session(opts);
  try {
    return {session.eval(compile(src), ambient), std::nullopt};
  } catch (const EvalError& e) {
    return {std::nullopt, e.kind()};
  }
}

inline std::string describe(const Outcome& o) {
  if (o.value) return to_string(*o.value);
  return "error " + std::string(error_kind_name(*o.error));
}

}  // namespace flucid::testing

#endif  // FLUCID_TESTS_PROGRAM_GEN_HPP_
