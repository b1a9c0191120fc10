// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/desugar.hpp"

#include <map>
#include <set>

namespace flucid {
namespace {

void collect_names(const Expr& e, std::set<std::string>& out);

void collect_names(const ExprPtr& e, std::set<std::string>& out) {
  if (e) collect_names(*e, out);
}

void collect_names(const Expr& e, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Id>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<T, ast::Apply>) {
          collect_names(n.callee, out);
          for (const auto& a : n.args) collect_names(a, out);
        } else if constexpr (std::is_same_v<T, ast::If>) {
          collect_names(n.cond, out);
          collect_names(n.then_branch, out);
          collect_names(n.else_branch, out);
        } else if constexpr (std::is_same_v<T, ast::HashQuery>) {
          collect_names(n.dim, out);
        } else if constexpr (std::is_same_v<T, ast::AtDim>) {
          collect_names(n.body, out);
          collect_names(n.dim, out);
          collect_names(n.tag, out);
        } else if constexpr (std::is_same_v<T, ast::AtCtx>) {
          collect_names(n.body, out);
          collect_names(n.ctx, out);
        } else if constexpr (std::is_same_v<T, ast::CtxLit>) {
          for (const auto& [d, t] : n.bindings) {
            collect_names(d, out);
            collect_names(t, out);
          }
        } else if constexpr (std::is_same_v<T, ast::CtxSetLit>) {
          for (const auto& c : n.items) collect_names(c, out);
        } else if constexpr (std::is_same_v<T, ast::Where>) {
          collect_names(n.body, out);
          for (const auto& d : n.defs) {
            out.insert(d->name());
            if (const auto* v = d->template as<ast::VarDef>()) {
              collect_names(v->expr, out);
            } else if (const auto* f = d->template as<ast::FuncDef>()) {
              out.insert(f->formals.begin(), f->formals.end());
              collect_names(f->body, out);
            }
          }
        } else if constexpr (std::is_same_v<T, ast::UnOp>) {
          collect_names(n.operand, out);
          collect_names(n.dim, out);
        } else if constexpr (std::is_same_v<T, ast::BinOp>) {
          collect_names(n.lhs, out);
          collect_names(n.rhs, out);
          collect_names(n.dim, out);
        } else if constexpr (std::is_same_v<T, ast::Dot>) {
          collect_names(n.base, out);
        }
      },
      e.node);
}

struct Scope {
  std::vector<std::string> dims;
  std::map<std::string, std::string> values;   // vars and functions
  std::map<std::string, std::string> formals;
};

class Desugarer {
 public:
  explicit Desugarer(std::set<std::string> used) : used_(std::move(used)) {}

  ExprPtr expr(const ExprPtr& e) {
    return std::visit([&](const auto& n) { return node(n, e); }, e->node);
  }

 private:
  std::string bind(const std::string& name) {
    if (bound_.insert(name).second) return name;
    for (int k = 1;; ++k) {
      std::string fresh = name + "__" + std::to_string(k);
      if (!used_.contains(fresh) && !bound_.contains(fresh)) {
        bound_.insert(fresh);
        used_.insert(fresh);
        return fresh;
      }
    }
  }

  std::string value_name(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto f = it->formals.find(name); f != it->formals.end()) return f->second;
      if (auto v = it->values.find(name); v != it->values.end()) return v->second;
    }
    return name;
  }

  std::string dim_name(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      for (const auto& d : it->dims) {
        if (d == name) return name;
      }
      if (auto f = it->formals.find(name); f != it->formals.end()) return f->second;
    }
    return name;
  }

  ExprPtr dim(const ExprPtr& d) {
    if (!d) return nullptr;
    if (const auto* id = d->as<ast::Id>()) {
      return make_id(dim_name(id->name), d->pos);
    }
    if (const auto* dot = d->as<ast::Dot>()) {
      return make_expr(ast::Dot{dim(dot->base), dot->member}, d->pos);
    }
    return expr(d);
  }

  ExprPtr implicit_dim(SourcePos pos) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (it->dims.empty()) continue;
      if (it->dims.size() == 1) return make_id(it->dims.front(), pos);
      std::string names;
      for (const auto& d : it->dims) names += (names.empty() ? "" : ", ") + d;
      throw SyntaxError(pos, "operator needs an explicit dimension suffix; "
                             "the enclosing scope declares " + names);
    }
    return make_id(kDefaultDimension, pos);
  }

  ExprPtr operator_dim(const ExprPtr& d, SourcePos pos) {
    return d ? dim(d) : implicit_dim(pos);
  }

  ExprPtr node(const ast::Id& n, const ExprPtr& e) {
    return make_id(value_name(n.name), e->pos);
  }
  ExprPtr node(const ast::IntLit&, const ExprPtr& e) { return e; }
  ExprPtr node(const ast::BoolLit&, const ExprPtr& e) { return e; }
  ExprPtr node(const ast::Apply& n, const ExprPtr& e) {
    ast::Apply out{expr(n.callee), {}};
    for (const auto& a : n.args) out.args.push_back(expr(a));
    if (const auto* id = n.callee->as<ast::Id>();
        id && (id->name == "combine" || id->name == "product") &&
        out.args.size() == 2) {
      out.args.push_back(implicit_dim(e->pos));
    } else if (id && (id->name == "combine" || id->name == "product") &&
               out.args.size() == 3) {
      out.args[2] = dim(n.args[2]);
    }
    return make_expr(std::move(out), e->pos);
  }
  ExprPtr node(const ast::If& n, const ExprPtr& e) {
    return make_expr(
        ast::If{expr(n.cond), expr(n.then_branch), expr(n.else_branch)},
        e->pos);
  }
  ExprPtr node(const ast::HashQuery& n, const ExprPtr& e) {
    return make_expr(ast::HashQuery{dim(n.dim)}, e->pos);
  }
  ExprPtr node(const ast::AtDim& n, const ExprPtr& e) {
    return make_expr(ast::AtDim{expr(n.body), dim(n.dim), expr(n.tag)}, e->pos);
  }
  ExprPtr node(const ast::AtCtx& n, const ExprPtr& e) {
    return make_expr(ast::AtCtx{expr(n.body), expr(n.ctx)}, e->pos);
  }
  ExprPtr node(const ast::CtxLit& n, const ExprPtr& e) {
    ast::CtxLit out;
    for (const auto& [d, t] : n.bindings) out.bindings.emplace_back(dim(d), expr(t));
    return make_expr(std::move(out), e->pos);
  }
  ExprPtr node(const ast::CtxSetLit& n, const ExprPtr& e) {
    ast::CtxSetLit out;
    for (const auto& c : n.items) out.items.push_back(expr(c));
    return make_expr(std::move(out), e->pos);
  }
  ExprPtr node(const ast::Where& n, const ExprPtr& e) {
    Scope scope;
    std::set<std::string> seen;
    for (const auto& d : n.defs) {
      if (!seen.insert(d->name()).second) {
        throw SyntaxError(d->pos, "duplicate definition of '" + d->name() +
                                      "' in one where clause");
      }
      if (d->as<ast::DimDecl>()) {
        scope.dims.push_back(d->name());
      } else {
        scope.values[d->name()] = bind(d->name());
      }
    }
    scopes_.push_back(scope);
    ast::Where out{expr(n.body), {}};
    for (const auto& d : n.defs) out.defs.push_back(def(*d));
    scopes_.pop_back();
    return make_expr(std::move(out), e->pos);
  }
  ExprPtr node(const ast::UnOp& n, const ExprPtr& e) {
    ExprPtr operand = expr(n.operand);
    if (!is_dimensional(n.op)) {
      return make_expr(ast::UnOp{n.op, operand, dim(n.dim)}, e->pos);
    }
    ExprPtr d = operator_dim(n.dim, e->pos);
    auto unop = [&](UnaryOp op, ExprPtr x) {
      return make_expr(ast::UnOp{op, std::move(x), d}, e->pos);
    };
    if (n.op == UnaryOp::kSecond) {
      return unop(UnaryOp::kFirst, unop(UnaryOp::kNext, operand));
    }
    if (n.op == UnaryOp::kPrelast) {
      return unop(UnaryOp::kLast, unop(UnaryOp::kPrev, operand));
    }
    return unop(n.op, operand);
  }
  ExprPtr node(const ast::BinOp& n, const ExprPtr& e) {
    ExprPtr d = is_dimensional(n.op) ? operator_dim(n.dim, e->pos) : dim(n.dim);
    return make_expr(ast::BinOp{n.op, expr(n.lhs), expr(n.rhs), d}, e->pos);
  }
  ExprPtr node(const ast::Dot& n, const ExprPtr& e) {
    return make_expr(ast::Dot{dim(n.base), n.member}, e->pos);
  }

  QDefPtr def(const QDef& d) {
    const std::string name = scopes_.back().values.contains(d.name())
                                  ? scopes_.back().values.at(d.name())
                                  : d.name();
    if (const auto* v = d.as<ast::VarDef>()) {
      return make_def(ast::VarDef{name, expr(v->expr)}, d.pos);
    }
    if (const auto* f = d.as<ast::FuncDef>()) {
      Scope params;
      std::vector<std::string> formals;
      for (const auto& x : f->formals) {
        if (params.formals.contains(x)) {
          throw SyntaxError(d.pos, "duplicate parameter '" + x + "' of '" +
                                       f->name + "'");
        }
        params.formals[x] = bind(x);
        formals.push_back(params.formals[x]);
      }
      scopes_.push_back(std::move(params));
      ExprPtr body = expr(f->body);
      scopes_.pop_back();
      return make_def(ast::FuncDef{name, std::move(formals), std::move(body)},
                      d.pos);
    }
    return make_def(ast::DimDecl{d.name()}, d.pos);
  }

  std::set<std::string> used_;
  std::set<std::string> bound_;
  std::vector<Scope> scopes_;
};

}  // namespace

ExprPtr desugar(const ExprPtr& program) {
  std::set<std::string> used;
  collect_names(program, used);
  return Desugarer(std::move(used)).expr(program);
}

}  // namespace flucid
