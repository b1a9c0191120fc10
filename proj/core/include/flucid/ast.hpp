// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_AST_HPP_
#define FLUCID_AST_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "flucid/error.hpp"
#include "flucid/operators.hpp"

namespace flucid {

struct Expr;
struct QDef;
using ExprPtr = std::shared_ptr<const Expr>;
using QDefPtr = std::shared_ptr<const QDef>;

enum class UnaryOp {
  kFirst,
  kLast,
  kNext,
  kPrev,
  kSecond,
  kPrelast,
  kNeg,
  kNot,
  kIsEod,
  kIsBod,
};

enum class BinaryOp {
  kFby,
  kPby,
  kWvr,
  kRwvr,
  kNwvr,
  kNrwvr,
  kAsa,
  kAla,
  kNasa,
  kNala,
  kUpon,
  kRupon,
  kNupon,
  kNrupon,
  kAnd,
  kOr,
  kXor,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
};

std::string_view op_name(UnaryOp op);
std::string_view op_name(BinaryOp op);
/// The stream operator behind a syntactic operator, if any.
std::optional<StreamOp> stream_op(UnaryOp op);
std::optional<StreamOp> stream_op(BinaryOp op);
/// True for operators that look along a dimension (first, fby, wvr, ...),
/// false for the pointwise ones (not, and, +, ==, ...).
bool is_dimensional(UnaryOp op);
bool is_dimensional(BinaryOp op);

namespace ast {

struct Id {
  std::string name;
};
struct IntLit {
  std::int64_t value = 0;
};
struct BoolLit {
  bool value = false;
};
struct Apply {
  ExprPtr callee;
  std::vector<ExprPtr> args;
};
struct If {
  ExprPtr cond, then_branch, else_branch;
};
/// `#` (dim null) or `#.d`.
struct HashQuery {
  ExprPtr dim;
};
/// `body @.dim tag`
struct AtDim {
  ExprPtr body, dim, tag;
};
/// `body @ ctx`, ctx a context or a context set.
struct AtCtx {
  ExprPtr body, ctx;
};
/// `[d1: e1, d2: e2]`
struct CtxLit {
  std::vector<std::pair<ExprPtr, ExprPtr>> bindings;
};
/// `{[...], [...]}`; every item is a CtxLit.
struct CtxSetLit {
  std::vector<ExprPtr> items;
};
struct Where {
  ExprPtr body;
  std::vector<QDefPtr> defs;
};
/// `dim` is the `.d` suffix, or null.
struct UnOp {
  UnaryOp op;
  ExprPtr operand;
  ExprPtr dim;
};
struct BinOp {
  BinaryOp op;
  ExprPtr lhs, rhs;
  ExprPtr dim;
};
/// Compound dimension name `base.member`.
struct Dot {
  ExprPtr base;
  std::string member;
};

struct DimDecl {
  std::string name;
};
struct VarDef {
  std::string name;
  ExprPtr expr;
};
struct FuncDef {
  std::string name;
  std::vector<std::string> formals;
  ExprPtr body;
};

}  // namespace ast

struct Expr {
  using Node = std::variant<ast::Id, ast::IntLit, ast::BoolLit, ast::Apply,
                            ast::If, ast::HashQuery, ast::AtDim, ast::AtCtx,
                            ast::CtxLit, ast::CtxSetLit, ast::Where,
                            ast::UnOp, ast::BinOp, ast::Dot>;
  Node node;
  SourcePos pos;

  template <typename T>
  [[nodiscard]] const T* as() const {
    return std::get_if<T>(&node);
  }
};

struct QDef {
  using Node = std::variant<ast::DimDecl, ast::VarDef, ast::FuncDef>;
  Node node;
  SourcePos pos;

  [[nodiscard]] const std::string& name() const;
  template <typename T>
  [[nodiscard]] const T* as() const {
    return std::get_if<T>(&node);
  }
};

template <typename T>
ExprPtr make_expr(T node, SourcePos pos = {}) {
  return std::make_shared<const Expr>(Expr{std::move(node), pos});
}
template <typename T>
QDefPtr make_def(T node, SourcePos pos = {}) {
  return std::make_shared<const QDef>(QDef{std::move(node), pos});
}

ExprPtr make_id(std::string name, SourcePos pos = {});
ExprPtr make_int(std::int64_t value, SourcePos pos = {});
ExprPtr make_bool(bool value, SourcePos pos = {});

/// The flat name of a dimension expression (`d`, `a.b`), or nullopt when the
/// expression is not an Id/Dot chain.
std::optional<std::string> dimension_path(const Expr& e);

/// Structural equality; source positions are ignored.
bool equal(const Expr& a, const Expr& b);
bool equal(const QDef& a, const QDef& b);
bool equal(const ExprPtr& a, const ExprPtr& b);

/// One node per line, children indented by two spaces.
std::string dump_ast(const Expr& e);

}  // namespace flucid

#endif  // FLUCID_AST_HPP_
