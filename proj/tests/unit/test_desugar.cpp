// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <functional>
#include <set>

#include "flucid/desugar.hpp"
#include "flucid/error.hpp"
#include "flucid/parser.hpp"
#include "flucid/printer.hpp"
#include "support/ast_gen.hpp"

using namespace flucid;

namespace {

ExprPtr ds(const char* src) { return desugar(parse(src)); }

// Identifier names mentioned anywhere under `e`.
void collect_ids(const ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Id>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<T, ast::Apply>) {
          collect_ids(n.callee, out);
          for (const auto& a : n.args) collect_ids(a, out);
        } else if constexpr (std::is_same_v<T, ast::If>) {
          collect_ids(n.cond, out);
          collect_ids(n.then_branch, out);
          collect_ids(n.else_branch, out);
        } else if constexpr (std::is_same_v<T, ast::AtDim>) {
          collect_ids(n.body, out);
          collect_ids(n.tag, out);
        } else if constexpr (std::is_same_v<T, ast::AtCtx>) {
          collect_ids(n.body, out);
          collect_ids(n.ctx, out);
        } else if constexpr (std::is_same_v<T, ast::CtxLit>) {
          for (const auto& [d, v] : n.bindings) collect_ids(v, out);
        } else if constexpr (std::is_same_v<T, ast::CtxSetLit>) {
          for (const auto& i : n.items) collect_ids(i, out);
        } else if constexpr (std::is_same_v<T, ast::Where>) {
          collect_ids(n.body, out);
          for (const auto& d : n.defs) {
            if (const auto* v = d->template as<ast::VarDef>()) collect_ids(v->expr, out);
            if (const auto* f = d->template as<ast::FuncDef>()) collect_ids(f->body, out);
          }
        } else if constexpr (std::is_same_v<T, ast::UnOp>) {
          collect_ids(n.operand, out);
        } else if constexpr (std::is_same_v<T, ast::BinOp>) {
          collect_ids(n.lhs, out);
          collect_ids(n.rhs, out);
        }
      },
      e->node);
}

// Number of function definitions whose body mentions the function's name.
int self_referential(const ExprPtr& e) {
  int count = 0;
  std::function<void(const ExprPtr&)> walk = [&](const ExprPtr& x) {
    if (!x) return;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ast::Where>) {
            walk(n.body);
            for (const auto& d : n.defs) {
              if (const auto* f = d->template as<ast::FuncDef>()) {
                std::set<std::string> ids;
                collect_ids(f->body, ids);
                count += ids.contains(f->name) ? 1 : 0;
                walk(f->body);
              }
              if (const auto* v = d->template as<ast::VarDef>()) walk(v->expr);
            }
          } else if constexpr (std::is_same_v<T, ast::BinOp>) {
            walk(n.lhs);
            walk(n.rhs);
          } else if constexpr (std::is_same_v<T, ast::UnOp>) {
            walk(n.operand);
          } else if constexpr (std::is_same_v<T, ast::If>) {
            walk(n.cond);
            walk(n.then_branch);
            walk(n.else_branch);
          } else if constexpr (std::is_same_v<T, ast::Apply>) {
            for (const auto& a : n.args) walk(a);
          } else if constexpr (std::is_same_v<T, ast::AtDim>) {
            walk(n.body);
            walk(n.tag);
          } else if constexpr (std::is_same_v<T, ast::AtCtx>) {
            walk(n.body);
            walk(n.ctx);
          }
        },
        x->node);
  };
  walk(e);
  return count;
}

}  // namespace

TEST_CASE("second and prelast expand") {
  CHECK(equal(ds("second X"), parse("first.d next.d X")));
  CHECK(equal(ds("prelast X"), parse("last.d prev.d X")));
  CHECK(equal(ds("second.t X"), parse("first.t next.t X")));
}

TEST_CASE("dimension suffixes come from the nearest single-dimension scope") {
  CHECK(equal(ds("first X"), parse("first.d X")));
  CHECK(equal(ds("X fby Y where dimension t; X = 1; Y = 2; end"),
              parse("X fby.t Y where dimension t; X = 1; Y = 2; end")));
  CHECK(equal(ds("X and Y"), parse("X and Y")));
  CHECK_THROWS_AS(ds("first X where dimension a, b; X = 1; end"), SyntaxError);
  CHECK(equal(ds("first.a X where dimension a, b; X = 1; end"),
              parse("first.a X where dimension a, b; X = 1; end")));
}

TEST_CASE("forensic builtins get a default dimension") {
  CHECK(equal(ds("combine(s, e)"), parse("combine(s, e, d)")));
  CHECK(equal(ds("product(a, b)"), parse("product(a, b, d)")));
  CHECK(equal(ds("product(a, b, t)"), parse("product(a, b, t)")));
}

TEST_CASE("shadowed names are renamed apart") {
  ExprPtr e = ds("n where n = 1; m = n where n = 2; end; end");
  const auto* outer = e->as<ast::Where>();
  REQUIRE(outer != nullptr);
  CHECK(outer->defs[0]->name() == "n");
  const auto* inner = outer->defs[1]->as<ast::VarDef>()->expr->as<ast::Where>();
  REQUIRE(inner != nullptr);
  std::string renamed = inner->defs[0]->name();
  CHECK(renamed != "n");
  CHECK(inner->body->as<ast::Id>()->name == renamed);
  CHECK(outer->body->as<ast::Id>()->name == "n");

  ExprPtr f = ds("f(1) + x where x = 5; f(x) = x + 1; end");
  const auto* fw = f->as<ast::Where>();
  const auto* fd = fw->defs[1]->as<ast::FuncDef>();
  REQUIRE(fd != nullptr);
  CHECK(fd->formals[0] != "x");
}

TEST_CASE("duplicates are rejected") {
  CHECK_THROWS_AS(ds("x where a = 1; a = 2; end"), SyntaxError);
  CHECK_THROWS_AS(ds("x where f(a, a) = a; end"), SyntaxError);
  CHECK_THROWS_AS(ds("x where dimension t; t = 1; end"), SyntaxError);
}

TEST_CASE("property: desugaring is idempotent and adds no self reference") {
  testing::AstGen gen(77);
  int accepted = 0;
  for (int i = 0; i < 1500; ++i) {
    ExprPtr e = gen.expr(4);
    ExprPtr once;
    try {
      once = desugar(e);
    } catch (const SyntaxError&) {
      continue;
    }
    ++accepted;
    INFO(print_expr(e));
    CHECK(equal(desugar(once), once));
    CHECK(self_referential(once) <= self_referential(e));
  }
  CHECK(accepted >= 300);
}
