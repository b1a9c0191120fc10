// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

// Random syntax trees for round-trip and desugaring properties.

#ifndef FLUCID_TESTS_AST_GEN_HPP_
#define FLUCID_TESTS_AST_GEN_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flucid/ast.hpp"

namespace flucid::testing {

class AstGen {
 public:
  explicit AstGen(std::uint64_t seed) : rng_(seed) {}

  ExprPtr expr(int depth) {
    if (depth <= 0 || chance(0.2)) return leaf();
    switch (pick(9)) {
      case 0: {
        std::vector<ExprPtr> args;
        for (int i = 0, n = 1 + pick(3); i < n; ++i) args.push_back(expr(depth - 1));
        return make_expr(ast::Apply{make_id(name()), std::move(args)});
      }
      case 1:
        return make_expr(
            ast::If{expr(depth - 1), expr(depth - 1), expr(depth - 1)});
      case 2:
        return make_expr(ast::AtDim{expr(depth - 1), dim(), expr(depth - 1)});
      case 3: {
        ExprPtr ctx = chance(0.5)   ? ctx_lit(depth - 1)
                      : chance(0.5) ? ctx_set(depth - 1)
                                    : make_id(name());
        return make_expr(ast::AtCtx{expr(depth - 1), ctx});
      }
      case 4:
        return chance(0.5) ? ctx_lit(depth - 1) : ctx_set(depth - 1);
      case 5: {
        std::vector<QDefPtr> defs;
        for (int i = 0, n = 1 + pick(3); i < n; ++i) defs.push_back(def(depth - 1));
        return make_expr(ast::Where{expr(depth - 1), std::move(defs)});
      }
      case 6: {
        auto op = static_cast<UnaryOp>(pick(10));
        ExprPtr d = is_dimensional(op) && chance(0.5) ? dim() : nullptr;
        return make_expr(ast::UnOp{op, expr(depth - 1), d});
      }
      default: {
        auto op = static_cast<BinaryOp>(pick(28));
        ExprPtr d = is_dimensional(op) && chance(0.5) ? dim() : nullptr;
        return make_expr(ast::BinOp{op, expr(depth - 1), expr(depth - 1), d});
      }
    }
  }

  QDefPtr def(int depth) {
    switch (pick(3)) {
      case 0:
        return make_def(ast::DimDecl{name()});
      case 1:
        return make_def(ast::VarDef{name(), expr(depth)});
      default: {
        std::vector<std::string> formals;
        for (int i = 0, n = 1 + pick(3); i < n; ++i) formals.push_back(name());
        return make_def(ast::FuncDef{name(), std::move(formals), expr(depth)});
      }
    }
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::string name() {
    static const char* const kNames[] = {"a", "b", "x", "y", "foo", "bar2",
                                         "X", "Y", "T", "acc_1"};
    return kNames[pick(10)];
  }

  ExprPtr dim() {
    static const char* const kDims[] = {"d", "t", "city", "day"};
    ExprPtr d = make_id(kDims[pick(4)]);
    if (chance(0.2)) d = make_expr(ast::Dot{d, kDims[pick(4)]});
    if (chance(0.1)) d = make_expr(ast::Dot{d, "time"});
    return d;
  }

  ExprPtr leaf() {
    switch (pick(5)) {
      case 0:
        return make_id(name());
      case 1:
        return make_int(
            std::uniform_int_distribution<std::int64_t>(-1000, 100000)(rng_));
      case 2:
        return make_bool(chance(0.5));
      case 3:
        return make_expr(ast::HashQuery{chance(0.3) ? nullptr : dim()});
      default:
        return make_int(pick(10));
    }
  }

  ExprPtr ctx_lit(int depth) {
    std::vector<std::pair<ExprPtr, ExprPtr>> bindings;
    for (int i = 0, n = 1 + pick(3); i < n; ++i)
      bindings.emplace_back(dim(), expr(depth));
    return make_expr(ast::CtxLit{std::move(bindings)});
  }

  ExprPtr ctx_set(int depth) {
    std::vector<ExprPtr> items;
    for (int i = 0, n = 1 + pick(3); i < n; ++i) items.push_back(ctx_lit(depth));
    return make_expr(ast::CtxSetLit{std::move(items)});
  }

  std::mt19937_64 rng_;
};

}  // namespace flucid::testing

#endif  // FLUCID_TESTS_AST_GEN_HPP_
