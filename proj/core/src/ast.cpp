// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/ast.hpp"

#include <sstream>

namespace flucid {

std::string_view op_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::kFirst: return "first";
    case UnaryOp::kLast: return "last";
    case UnaryOp::kNext: return "next";
    case UnaryOp::kPrev: return "prev";
    case UnaryOp::kSecond: return "second";
    case UnaryOp::kPrelast: return "prelast";
    case UnaryOp::kNeg: return "neg";
    case UnaryOp::kNot: return "not";
    case UnaryOp::kIsEod: return "iseod";
    case UnaryOp::kIsBod: return "isbod";
  }
  return "?";
}

std::string_view op_name(BinaryOp op) {
  if (auto s = stream_op(op)) return flucid::op_name(*s);
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    default: return "?";
  }
}

std::optional<StreamOp> stream_op(UnaryOp op) {
  switch (op) {
    case UnaryOp::kFirst: return StreamOp::kFirst;
    case UnaryOp::kLast: return StreamOp::kLast;
    case UnaryOp::kNext: return StreamOp::kNext;
    case UnaryOp::kPrev: return StreamOp::kPrev;
    case UnaryOp::kNeg: return StreamOp::kNeg;
    case UnaryOp::kNot: return StreamOp::kNot;
    default: return std::nullopt;
  }
}

std::optional<StreamOp> stream_op(BinaryOp op) {
  switch (op) {
    case BinaryOp::kFby: return StreamOp::kFby;
    case BinaryOp::kPby: return StreamOp::kPby;
    case BinaryOp::kWvr: return StreamOp::kWvr;
    case BinaryOp::kRwvr: return StreamOp::kRwvr;
    case BinaryOp::kNwvr: return StreamOp::kNwvr;
    case BinaryOp::kNrwvr: return StreamOp::kNrwvr;
    case BinaryOp::kAsa: return StreamOp::kAsa;
    case BinaryOp::kAla: return StreamOp::kAla;
    case BinaryOp::kNasa: return StreamOp::kNasa;
    case BinaryOp::kNala: return StreamOp::kNala;
    case BinaryOp::kUpon: return StreamOp::kUpon;
    case BinaryOp::kRupon: return StreamOp::kRupon;
    case BinaryOp::kNupon: return StreamOp::kNupon;
    case BinaryOp::kNrupon: return StreamOp::kNrupon;
    case BinaryOp::kAnd: return StreamOp::kAnd;
    case BinaryOp::kOr: return StreamOp::kOr;
    case BinaryOp::kXor: return StreamOp::kXor;
    default: return std::nullopt;
  }
}

bool is_dimensional(UnaryOp op) {
  switch (op) {
    case UnaryOp::kNeg:
    case UnaryOp::kNot:
    case UnaryOp::kIsEod:
    case UnaryOp::kIsBod:
      return false;
    default:
      return true;
  }
}

bool is_dimensional(BinaryOp op) {
  auto s = stream_op(op);
  return s && *s != StreamOp::kAnd && *s != StreamOp::kOr &&
         *s != StreamOp::kXor;
}

const std::string& QDef::name() const {
  return std::visit([](const auto& d) -> const std::string& { return d.name; },
                    node);
}

ExprPtr make_id(std::string name, SourcePos pos) {
  return make_expr(ast::Id{std::move(name)}, pos);
}
ExprPtr make_int(std::int64_t value, SourcePos pos) {
  return make_expr(ast::IntLit{value}, pos);
}
ExprPtr make_bool(bool value, SourcePos pos) {
  return make_expr(ast::BoolLit{value}, pos);
}

std::optional<std::string> dimension_path(const Expr& e) {
  if (const auto* id = e.as<ast::Id>()) return id->name;
  if (const auto* dot = e.as<ast::Dot>()) {
    auto base = dimension_path(*dot->base);
    if (!base) return std::nullopt;
    return *base + "." + dot->member;
  }
  return std::nullopt;
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return equal(*a, *b);
}

namespace {

bool equal_all(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

struct EqualVisitor {
  const Expr::Node& other;

  template <typename T>
  const T& rhs() const {
    return std::get<T>(other);
  }

  bool operator()(const ast::Id& a) const { return a.name == rhs<ast::Id>().name; }
  bool operator()(const ast::IntLit& a) const {
    return a.value == rhs<ast::IntLit>().value;
  }
  bool operator()(const ast::BoolLit& a) const {
    return a.value == rhs<ast::BoolLit>().value;
  }
  bool operator()(const ast::Apply& a) const {
    const auto& b = rhs<ast::Apply>();
    return equal(a.callee, b.callee) && equal_all(a.args, b.args);
  }
  bool operator()(const ast::If& a) const {
    const auto& b = rhs<ast::If>();
    return equal(a.cond, b.cond) && equal(a.then_branch, b.then_branch) &&
           equal(a.else_branch, b.else_branch);
  }
  bool operator()(const ast::HashQuery& a) const {
    return equal(a.dim, rhs<ast::HashQuery>().dim);
  }
  bool operator()(const ast::AtDim& a) const {
    const auto& b = rhs<ast::AtDim>();
    return equal(a.body, b.body) && equal(a.dim, b.dim) && equal(a.tag, b.tag);
  }
  bool operator()(const ast::AtCtx& a) const {
    const auto& b = rhs<ast::AtCtx>();
    return equal(a.body, b.body) && equal(a.ctx, b.ctx);
  }
  bool operator()(const ast::CtxLit& a) const {
    const auto& b = rhs<ast::CtxLit>();
    if (a.bindings.size() != b.bindings.size()) return false;
    for (std::size_t i = 0; i < a.bindings.size(); ++i) {
      if (!equal(a.bindings[i].first, b.bindings[i].first) ||
          !equal(a.bindings[i].second, b.bindings[i].second)) {
        return false;
      }
    }
    return true;
  }
  bool operator()(const ast::CtxSetLit& a) const {
    return equal_all(a.items, rhs<ast::CtxSetLit>().items);
  }
  bool operator()(const ast::Where& a) const {
    const auto& b = rhs<ast::Where>();
    if (!equal(a.body, b.body) || a.defs.size() != b.defs.size()) return false;
    for (std::size_t i = 0; i < a.defs.size(); ++i) {
      if (!equal(*a.defs[i], *b.defs[i])) return false;
    }
    return true;
  }
  bool operator()(const ast::UnOp& a) const {
    const auto& b = rhs<ast::UnOp>();
    return a.op == b.op && equal(a.operand, b.operand) && equal(a.dim, b.dim);
  }
  bool operator()(const ast::BinOp& a) const {
    const auto& b = rhs<ast::BinOp>();
    return a.op == b.op && equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs) &&
           equal(a.dim, b.dim);
  }
  bool operator()(const ast::Dot& a) const {
    const auto& b = rhs<ast::Dot>();
    return a.member == b.member && equal(a.base, b.base);
  }
};

}  // namespace

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(EqualVisitor{b.node}, a.node);
}

bool equal(const QDef& a, const QDef& b) {
  if (a.node.index() != b.node.index()) return false;
  if (a.name() != b.name()) return false;
  if (const auto* v = a.as<ast::VarDef>()) {
    return equal(v->expr, b.as<ast::VarDef>()->expr);
  }
  if (const auto* f = a.as<ast::FuncDef>()) {
    const auto* g = b.as<ast::FuncDef>();
    return f->formals == g->formals && equal(f->body, g->body);
  }
  return true;
}

namespace {

class Dumper {
 public:
  std::string str() const { return out_.str(); }

  void expr(const Expr& e, int depth, std::string_view label = {}) {
    line(depth, label);
    std::visit([&](const auto& n) { node(n, depth); }, e.node);
  }

 private:
  void line(int depth, std::string_view label) {
    out_ << std::string(static_cast<std::size_t>(depth) * 2, ' ');
    if (!label.empty()) out_ << label << ": ";
  }
  void child(const ExprPtr& e, int depth, std::string_view label) {
    if (e) expr(*e, depth, label);
  }

  void node(const ast::Id& n, int) { out_ << "Id " << n.name << "\n"; }
  void node(const ast::IntLit& n, int) { out_ << "Int " << n.value << "\n"; }
  void node(const ast::BoolLit& n, int) {
    out_ << "Bool " << (n.value ? "true" : "false") << "\n";
  }
  void node(const ast::Apply& n, int d) {
    out_ << "Apply\n";
    child(n.callee, d + 1, "callee");
    for (const auto& a : n.args) child(a, d + 1, "arg");
  }
  void node(const ast::If& n, int d) {
    out_ << "If\n";
    child(n.cond, d + 1, "cond");
    child(n.then_branch, d + 1, "then");
    child(n.else_branch, d + 1, "else");
  }
  void node(const ast::HashQuery& n, int d) {
    out_ << "Hash\n";
    child(n.dim, d + 1, "dim");
  }
  void node(const ast::AtDim& n, int d) {
    out_ << "AtDim\n";
    child(n.body, d + 1, "body");
    child(n.dim, d + 1, "dim");
    child(n.tag, d + 1, "tag");
  }
  void node(const ast::AtCtx& n, int d) {
    out_ << "AtCtx\n";
    child(n.body, d + 1, "body");
    child(n.ctx, d + 1, "ctx");
  }
  void node(const ast::CtxLit& n, int d) {
    out_ << "Context\n";
    for (const auto& [dim, tag] : n.bindings) {
      child(dim, d + 1, "dim");
      child(tag, d + 1, "tag");
    }
  }
  void node(const ast::CtxSetLit& n, int d) {
    out_ << "ContextSet\n";
    for (const auto& c : n.items) child(c, d + 1, "item");
  }
  void node(const ast::Where& n, int d) {
    out_ << "Where\n";
    child(n.body, d + 1, "body");
    for (const auto& def : n.defs) {
      line(d + 1, "def");
      if (const auto* v = def->as<ast::VarDef>()) {
        out_ << "Var " << v->name << "\n";
        child(v->expr, d + 2, "");
      } else if (const auto* f = def->as<ast::FuncDef>()) {
        out_ << "Func " << f->name << "(";
        for (std::size_t i = 0; i < f->formals.size(); ++i) {
          out_ << (i ? ", " : "") << f->formals[i];
        }
        out_ << ")\n";
        child(f->body, d + 2, "");
      } else {
        out_ << "Dimension " << def->name() << "\n";
      }
    }
  }
  void node(const ast::UnOp& n, int d) {
    out_ << "UnOp " << op_name(n.op) << "\n";
    child(n.dim, d + 1, "dim");
    child(n.operand, d + 1, "operand");
  }
  void node(const ast::BinOp& n, int d) {
    out_ << "BinOp " << op_name(n.op) << "\n";
    child(n.dim, d + 1, "dim");
    child(n.lhs, d + 1, "lhs");
    child(n.rhs, d + 1, "rhs");
  }
  void node(const ast::Dot& n, int d) {
    out_ << "Dot " << n.member << "\n";
    child(n.base, d + 1, "base");
  }

  std::ostringstream out_;
};

}  // namespace

std::string dump_ast(const Expr& e) {
  Dumper d;
  d.expr(e, 0);
  return d.str();
}

}  // namespace flucid
