// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/printer.hpp"

#include <sstream>

namespace flucid {
namespace {

// Binding strength, loosest first. Must mirror the parser.
enum Level : int {
  kWhere = 0,
  kAt,
  kFby,
  kWvr,
  kOr,
  kAnd,
  kNot,
  kCmp,
  kAdd,
  kMul,
  kPrefix,
  kPrimary,
};

int level_of(BinaryOp op) {
  switch (op) {
    case BinaryOp::kFby:
    case BinaryOp::kPby:
      return kFby;
    case BinaryOp::kOr:
    case BinaryOp::kXor:
      return kOr;
    case BinaryOp::kAnd:
      return kAnd;
    case BinaryOp::kAdd:
    case BinaryOp::kSub:
      return kAdd;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod:
      return kMul;
    case BinaryOp::kEq:
    case BinaryOp::kNe:
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
      return kCmp;
    default:
      return kWvr;
  }
}

int level_of(const Expr& e) {
  if (e.as<ast::Where>()) return kWhere;
  if (e.as<ast::AtDim>() || e.as<ast::AtCtx>()) return kAt;
  if (const auto* b = e.as<ast::BinOp>()) return level_of(b->op);
  if (const auto* u = e.as<ast::UnOp>()) {
    return u->op == UnaryOp::kNeg || u->op == UnaryOp::kNot ? kNot : kPrefix;
  }
  if (const auto* i = e.as<ast::IntLit>()) return i->value < 0 ? kPrefix : kPrimary;
  return kPrimary;
}

class Printer {
 public:
  explicit Printer(bool multiline) : multiline_(multiline) {}

  std::string str() const { return out_.str(); }

  void expr(const Expr& e, int min_level, int indent) {
    const bool parens = level_of(e) < min_level;
    if (parens) out_ << "(";
    std::visit([&](const auto& n) { node(n, indent); }, e.node);
    if (parens) out_ << ")";
  }

  void def(const QDef& d, int indent) {
    if (const auto* v = d.as<ast::VarDef>()) {
      out_ << v->name << " = ";
      expr(*v->expr, kWhere, indent);
    } else if (const auto* f = d.as<ast::FuncDef>()) {
      out_ << f->name << "(";
      for (std::size_t i = 0; i < f->formals.size(); ++i) {
        out_ << (i ? ", " : "") << f->formals[i];
      }
      out_ << ") = ";
      expr(*f->body, kWhere, indent);
    } else {
      out_ << "dimension " << d.name();
    }
  }

 private:
  void dim(const ExprPtr& d) {
    if (!d) return;
    out_ << ".";
    dim_path(*d);
  }
  void dim_path(const Expr& d) {
    if (const auto* id = d.as<ast::Id>()) {
      out_ << id->name;
    } else if (const auto* dot = d.as<ast::Dot>()) {
      dim_path(*dot->base);
      out_ << "." << dot->member;
    } else {
      // Not a dimension path; print it parenthesized so the error surfaces
      // when the text is parsed again.
      out_ << "(";
      expr(d, kWhere, 0);
      out_ << ")";
    }
  }

  void node(const ast::Id& n, int) { out_ << n.name; }
  void node(const ast::IntLit& n, int) { out_ << n.value; }
  void node(const ast::BoolLit& n, int) { out_ << (n.value ? "true" : "false"); }
  void node(const ast::Apply& n, int indent) {
    expr(*n.callee, kPrimary, indent);
    out_ << "(";
    for (std::size_t i = 0; i < n.args.size(); ++i) {
      if (i) out_ << ", ";
      expr(*n.args[i], kWhere, indent);
    }
    out_ << ")";
  }
  void node(const ast::If& n, int indent) {
    out_ << "if ";
    expr(*n.cond, kWhere, indent);
    out_ << " then ";
    expr(*n.then_branch, kWhere, indent);
    out_ << " else ";
    expr(*n.else_branch, kWhere, indent);
    out_ << " fi";
  }
  void node(const ast::HashQuery& n, int) {
    out_ << "#";
    dim(n.dim);
  }
  void node(const ast::AtDim& n, int indent) {
    expr(*n.body, kAt, indent);
    out_ << " @";
    dim(n.dim);
    out_ << " ";
    expr(*n.tag, kFby, indent);
  }
  void node(const ast::AtCtx& n, int indent) {
    expr(*n.body, kAt, indent);
    out_ << " @ ";
    expr(*n.ctx, kFby, indent);
  }
  void node(const ast::CtxLit& n, int indent) {
    out_ << "[";
    for (std::size_t i = 0; i < n.bindings.size(); ++i) {
      if (i) out_ << ", ";
      dim_path(*n.bindings[i].first);
      out_ << ": ";
      expr(*n.bindings[i].second, kWhere, indent);
    }
    out_ << "]";
  }
  void node(const ast::CtxSetLit& n, int indent) {
    out_ << "{";
    for (std::size_t i = 0; i < n.items.size(); ++i) {
      if (i) out_ << ", ";
      expr(*n.items[i], kPrimary, indent);
    }
    out_ << "}";
  }
  void node(const ast::Where& n, int indent) {
    expr(*n.body, kAt, indent);
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    out_ << (multiline_ ? "\n" + pad + "where" : " where");
    for (const auto& d : n.defs) {
      out_ << (multiline_ ? "\n" + pad + "  " : " ");
      def(*d, indent + 2);
      out_ << ";";
    }
    out_ << (multiline_ ? "\n" + pad + "end" : " end");
  }
  void node(const ast::UnOp& n, int indent) {
    out_ << op_name(n.op);
    dim(n.dim);
    out_ << " ";
    const bool pointwise = n.op == UnaryOp::kNeg || n.op == UnaryOp::kNot;
    expr(*n.operand, pointwise ? kNot : kPrefix, indent);
  }
  void node(const ast::BinOp& n, int indent) {
    const int level = level_of(n.op);
    int lhs_min = level;
    int rhs_min = level + 1;
    if (level == kFby) {
      lhs_min = level + 1;
      rhs_min = level;
    } else if (level == kCmp) {
      lhs_min = rhs_min = kAdd;
    }
    expr(*n.lhs, lhs_min, indent);
    out_ << " " << op_name(n.op);
    dim(n.dim);
    out_ << " ";
    expr(*n.rhs, rhs_min, indent);
  }
  void node(const ast::Dot& n, int) {
    dim_path(*n.base);
    out_ << "." << n.member;
  }

  bool multiline_;
  std::ostringstream out_;
};

}  // namespace

std::string print_expr(const Expr& e) {
  Printer p(true);
  p.expr(e, kWhere, 0);
  return p.str();
}

std::string print_expr(const ExprPtr& e) { return e ? print_expr(*e) : ""; }

std::string print_def(const QDef& def) {
  Printer p(true);
  p.def(def, 0);
  return p.str();
}

std::string print_brief(const Expr& e, std::size_t max_len) {
  Printer p(false);
  p.expr(e, kWhere, 0);
  std::string s = p.str();
  if (s.size() > max_len) s = s.substr(0, max_len - 3) + "...";
  return s;
}

}  // namespace flucid
