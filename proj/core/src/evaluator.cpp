// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/evaluator.hpp"

#include "flucid/desugar.hpp"
#include "flucid/error.hpp"
#include "flucid/forensic.hpp"
#include "flucid/ops_indexed.hpp"
#include "flucid/parser.hpp"
#include "flucid/printer.hpp"
#include "flucid/scalar.hpp"

namespace flucid {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnboundIdentifier: return "unbound-identifier";
    case ErrorKind::kTypeError: return "type-error";
    case ErrorKind::kArityError: return "arity-error";
    case ErrorKind::kUnboundDimension: return "unbound-dimension";
    case ErrorKind::kMarkerArithmetic: return "marker-arithmetic";
    case ErrorKind::kRecursionForbidden: return "recursion-forbidden";
    case ErrorKind::kResourceExhausted: return "resource-exhausted";
    case ErrorKind::kDuplicateDefinition: return "duplicate-definition";
  }
  return "?";
}

EvalError::EvalError(ErrorKind kind, const std::string& detail, SourcePos pos,
                     Context context)
    : std::runtime_error(std::string(error_kind_name(kind)) + " at " +
                         to_string(pos) + " in " + context.to_string() +
                         ": " + detail),
      kind_(kind),
      detail_(detail),
      pos_(pos),
      context_(std::move(context)) {}

ExprPtr compile(std::string_view source) { return desugar(parse(source)); }

// ---------------------------------------------------------------------------
// Substitution

namespace {

class Substituter {
 public:
  explicit Substituter(const std::map<std::string, ExprPtr>& actuals)
      : actuals_(actuals) {}

  ExprPtr operator()(const ExprPtr& e) const {
    if (!e) return nullptr;
    return std::visit([&](const auto& n) { return node(n, e); }, e->node);
  }

 private:
  ExprPtr node(const ast::Id& n, const ExprPtr& e) const {
    if (auto it = actuals_.find(n.name); it != actuals_.end()) return it->second;
    return make_id(n.name, e->pos);
  }
  ExprPtr node(const ast::IntLit& n, const ExprPtr& e) const {
    return make_expr(n, e->pos);
  }
  ExprPtr node(const ast::BoolLit& n, const ExprPtr& e) const {
    return make_expr(n, e->pos);
  }
  ExprPtr node(const ast::Apply& n, const ExprPtr& e) const {
    ast::Apply out{(*this)(n.callee), {}};
    for (const auto& a : n.args) out.args.push_back((*this)(a));
    return make_expr(std::move(out), e->pos);
  }
  ExprPtr node(const ast::If& n, const ExprPtr& e) const {
    return make_expr(ast::If{(*this)(n.cond), (*this)(n.then_branch),
                             (*this)(n.else_branch)},
                     e->pos);
  }
  ExprPtr node(const ast::HashQuery& n, const ExprPtr& e) const {
    return make_expr(ast::HashQuery{(*this)(n.dim)}, e->pos);
  }
  ExprPtr node(const ast::AtDim& n, const ExprPtr& e) const {
    return make_expr(
        ast::AtDim{(*this)(n.body), (*this)(n.dim), (*this)(n.tag)}, e->pos);
  }
  ExprPtr node(const ast::AtCtx& n, const ExprPtr& e) const {
    return make_expr(ast::AtCtx{(*this)(n.body), (*this)(n.ctx)}, e->pos);
  }
  ExprPtr node(const ast::CtxLit& n, const ExprPtr& e) const {
    ast::CtxLit out;
    for (const auto& [d, t] : n.bindings) {
      out.bindings.emplace_back((*this)(d), (*this)(t));
    }
    return make_expr(std::move(out), e->pos);
  }
  ExprPtr node(const ast::CtxSetLit& n, const ExprPtr& e) const {
    ast::CtxSetLit out;
    for (const auto& c : n.items) out.items.push_back((*this)(c));
    return make_expr(std::move(out), e->pos);
  }
  ExprPtr node(const ast::Where& n, const ExprPtr& e) const {
    ast::Where out{(*this)(n.body), {}};
    for (const auto& d : n.defs) {
      if (const auto* v = d->as<ast::VarDef>()) {
        out.defs.push_back(make_def(ast::VarDef{v->name, (*this)(v->expr)}, d->pos));
      } else if (const auto* f = d->as<ast::FuncDef>()) {
        out.defs.push_back(make_def(
            ast::FuncDef{f->name, f->formals, (*this)(f->body)}, d->pos));
      } else {
        out.defs.push_back(make_def(*d->as<ast::DimDecl>(), d->pos));
      }
    }
    return make_expr(std::move(out), e->pos);
  }
  ExprPtr node(const ast::UnOp& n, const ExprPtr& e) const {
    return make_expr(ast::UnOp{n.op, (*this)(n.operand), (*this)(n.dim)},
                     e->pos);
  }
  ExprPtr node(const ast::BinOp& n, const ExprPtr& e) const {
    return make_expr(
        ast::BinOp{n.op, (*this)(n.lhs), (*this)(n.rhs), (*this)(n.dim)},
        e->pos);
  }
  ExprPtr node(const ast::Dot& n, const ExprPtr& e) const {
    return make_expr(ast::Dot{(*this)(n.base), n.member}, e->pos);
  }

  const std::map<std::string, ExprPtr>& actuals_;
};

// Names an expression refers to, by value or as a callee.
void referenced_names(const Expr& e, std::vector<std::string>& out,
                      std::vector<const Expr*>& bodies);

void referenced_names(const ExprPtr& e, std::vector<std::string>&,
                      std::vector<const Expr*>& bodies) {
  if (e) bodies.push_back(e.get());
}

void referenced_names(const Expr& e, std::vector<std::string>& out,
                      std::vector<const Expr*>& bodies) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Id>) {
          out.push_back(n.name);
        } else if constexpr (std::is_same_v<T, ast::Apply>) {
          referenced_names(n.callee, out, bodies);
          for (const auto& a : n.args) referenced_names(a, out, bodies);
        } else if constexpr (std::is_same_v<T, ast::If>) {
          referenced_names(n.cond, out, bodies);
          referenced_names(n.then_branch, out, bodies);
          referenced_names(n.else_branch, out, bodies);
        } else if constexpr (std::is_same_v<T, ast::AtDim>) {
          referenced_names(n.body, out, bodies);
          referenced_names(n.tag, out, bodies);
        } else if constexpr (std::is_same_v<T, ast::AtCtx>) {
          referenced_names(n.body, out, bodies);
          referenced_names(n.ctx, out, bodies);
        } else if constexpr (std::is_same_v<T, ast::CtxLit>) {
          for (const auto& b : n.bindings) referenced_names(b.second, out, bodies);
        } else if constexpr (std::is_same_v<T, ast::CtxSetLit>) {
          for (const auto& c : n.items) referenced_names(c, out, bodies);
        } else if constexpr (std::is_same_v<T, ast::Where>) {
          referenced_names(n.body, out, bodies);
          for (const auto& d : n.defs) {
            if (const auto* v = d->template as<ast::VarDef>()) {
              referenced_names(v->expr, out, bodies);
            } else if (const auto* f = d->template as<ast::FuncDef>()) {
              referenced_names(f->body, out, bodies);
            }
          }
        } else if constexpr (std::is_same_v<T, ast::UnOp>) {
          referenced_names(n.operand, out, bodies);
        } else if constexpr (std::is_same_v<T, ast::BinOp>) {
          referenced_names(n.lhs, out, bodies);
          referenced_names(n.rhs, out, bodies);
        }
      },
      e.node);
}

std::optional<scalar::Arith> arith_of(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return scalar::Arith::kAdd;
    case BinaryOp::kSub: return scalar::Arith::kSub;
    case BinaryOp::kMul: return scalar::Arith::kMul;
    case BinaryOp::kDiv: return scalar::Arith::kDiv;
    case BinaryOp::kMod: return scalar::Arith::kMod;
    default: return std::nullopt;
  }
}

std::optional<scalar::Compare> compare_of(BinaryOp op) {
  switch (op) {
    case BinaryOp::kEq: return scalar::Compare::kEq;
    case BinaryOp::kNe: return scalar::Compare::kNe;
    case BinaryOp::kLt: return scalar::Compare::kLt;
    case BinaryOp::kLe: return scalar::Compare::kLe;
    case BinaryOp::kGt: return scalar::Compare::kGt;
    case BinaryOp::kGe: return scalar::Compare::kGe;
    default: return std::nullopt;
  }
}

Value scalar_xor(const Value& a, const Value& b) {
  // not ((a and b) or not (a or b)), pointwise.
  return scalar::logical_not(scalar::logical_or(
      scalar::logical_and(a, b),
      scalar::logical_not(scalar::logical_or(a, b))));
}

std::vector<Context> as_contexts(const Value& v) {
  if (v.is_context()) return {v.as_context()};
  if (v.is_seq()) {
    std::vector<Context> out;
    for (const Value& item : v.as_seq().items) {
      if (!item.is_context()) {
        throw TypeError(std::string("context set holds a ") + item.kind_name());
      }
      out.push_back(item.as_context());
    }
    return out;
  }
  throw TypeError(std::string("expected a context or context set, got a ") +
                  v.kind_name());
}

Value from_contexts(const ContextSet& set) {
  Seq s;
  for (const Context& c : set.contexts()) s.items.emplace_back(c);
  return Value(std::move(s));
}

bool has_negative_tag(const Context& c) {
  for (const auto& [dim, tag] : c.bindings()) {
    if (tag < 0) return true;
  }
  return false;
}

}  // namespace

ExprPtr substitute(const ExprPtr& body,
                   const std::map<std::string, ExprPtr>& actuals) {
  return Substituter(actuals)(body);
}

// ---------------------------------------------------------------------------
// Session

class Session::Nesting {
 public:
  Nesting(Session& s, const Expr& e, const Context& P) : s_(s) {
    if (++s_.rules_ > s_.options_.rule_budget) {
      throw EvalError(ErrorKind::kResourceExhausted,
                      "rule budget of " +
                          std::to_string(s_.options_.rule_budget) +
                          " applications exhausted",
                      e.pos, P);
    }
    if (++s_.nesting_ > s_.options_.max_nesting) {
      --s_.nesting_;
      throw EvalError(ErrorKind::kResourceExhausted,
                      "demand nesting deeper than " +
                          std::to_string(s_.options_.max_nesting),
                      e.pos, P);
    }
    ++s_.depth_;
  }
  ~Nesting() {
    --s_.nesting_;
    --s_.depth_;
  }
  Nesting(const Nesting&) = delete;
  Nesting& operator=(const Nesting&) = delete;

 private:
  Session& s_;
};

Session::Session(EvalOptions options)
    : options_(options), base_env_(DefEnv::base()) {}

Context Session::initial_context() { return Context{{kDefaultDimension, 0}}; }

void Session::clear_cache() {
  cache_.clear();
  substituted_.clear();
  recursive_.clear();
}

void Session::start_request() {
  rules_ = 0;
  nesting_ = 0;
  depth_ = 0;
  in_progress_.clear();
}

void Session::record(const char* rule, const Expr& e, const Context& P,
                     const std::string& value, int depth, bool cache_hit) {
  if (!options_.trace) return;
  trace_.add({rule, print_brief(e), P, value, depth, cache_hit});
}

Value Session::eval_at(const Context& P, const ExprPtr& e) {
  start_request();
  return eval(P, e, base_env_);
}

Value Session::eval(const Context& P, const ExprPtr& e, const DefEnv& env) {
  const int depth = depth_;
  Nesting guard(*this, *e, P);
  Step step;
  Value v;
  try {
    v = dispatch(*e, P, env, step);
  } catch (const EvalError& x) {
    if (x.pos().known()) throw;
    throw EvalError(x.kind(), x.detail(), e->pos, x.context());
  } catch (const TypeError& x) {
    throw EvalError(ErrorKind::kTypeError, x.what(), e->pos, P);
  } catch (const UnboundDimension& x) {
    throw EvalError(ErrorKind::kUnboundDimension,
                    "dimension '" + x.dimension() + "' is not bound", e->pos, P);
  } catch (const scalar::MarkerComparison& x) {
    throw EvalError(ErrorKind::kMarkerArithmetic, x.what(), e->pos, P);
  } catch (const HorizonExceeded& x) {
    throw EvalError(ErrorKind::kResourceExhausted, x.what(), e->pos, P);
  }
  record(step.rule, *e, P, to_string(v), depth, step.cache_hit);
  return v;
}

Value Session::dispatch(const Expr& e, const Context& P, const DefEnv& env,
                        Step& step) {
  if (const auto* n = e.as<ast::IntLit>()) {
    step.rule = "E_cid";
    return Value(n->value);
  }
  if (const auto* n = e.as<ast::BoolLit>()) {
    step.rule = "E_cid";
    return Value(n->value);
  }
  if (const auto* n = e.as<ast::Id>()) return eval_id(*n, P, env, step);
  if (const auto* n = e.as<ast::Apply>()) return eval_apply(*n, e, P, env, step);
  if (const auto* n = e.as<ast::If>()) {
    const Value c = eval(P, n->cond, env);
    if (c.is_marker()) {
      step.rule = "E_c(marker)";
      return c;
    }
    if (!truth_coercible(c)) {
      throw TypeError(std::string("if condition is a ") + c.kind_name());
    }
    if (truth(c)) {
      step.rule = "E_cT";
      return eval(P, n->then_branch, env);
    }
    step.rule = "E_cF";
    return eval(P, n->else_branch, env);
  }
  if (const auto* n = e.as<ast::HashQuery>()) {
    if (!n->dim) {
      step.rule = "E_#(cxt)";
      return Value(P);
    }
    step.rule = "E_tag";
    return Value(P.query(env.resolve_dimension(*n->dim)));
  }
  if (const auto* n = e.as<ast::AtDim>()) {
    step.rule = "E_at";
    const std::string dim = env.resolve_dimension(*n->dim);
    const Value tag = eval(P, n->tag, env);
    if (tag.is_marker()) return tag;
    if (!tag.is_int()) {
      throw TypeError(std::string("@ tag is a ") + tag.kind_name());
    }
    if (tag.as_int() < 0) return Value::bod();
    return eval(P.with(dim, tag.as_int()), n->body, env);
  }
  if (const auto* n = e.as<ast::AtCtx>()) {
    step.rule = "E_at(cxt)";
    const Value target = eval(P, n->ctx, env);
    if (target.is_marker()) return target;
    if (target.is_context()) {
      if (has_negative_tag(target.as_context())) return Value::bod();
      return eval(P.override_with(target.as_context()), n->body, env);
    }
    Seq results;
    for (const Context& c : as_contexts(target)) {
      Value v = has_negative_tag(c) ? Value::bod()
                                    : eval(P.override_with(c), n->body, env);
      if (v.is_marker()) return v;
      results.items.push_back(std::move(v));
    }
    return Value(std::move(results));
  }
  if (const auto* n = e.as<ast::CtxLit>()) {
    step.rule = "E_construction(cxt)";
    return eval_context(*n, P, env);
  }
  if (const auto* n = e.as<ast::CtxSetLit>()) {
    step.rule = "E_construction(cxt)";
    Seq set;
    for (const auto& item : n->items) {
      Value c = eval(P, item, env);
      if (c.is_marker()) return c;
      set.items.push_back(std::move(c));
    }
    return Value(std::move(set));
  }
  if (const auto* n = e.as<ast::Where>()) {
    step.rule = "E_w";
    auto [inner_env, inner_ctx] = process_defs(P, n->defs, env);
    return eval(inner_ctx, n->body, inner_env);
  }
  if (const auto* n = e.as<ast::UnOp>()) {
    step.rule = "E_op";
    return eval_unop(*n, P, env);
  }
  if (const auto* n = e.as<ast::BinOp>()) {
    step.rule = "E_op";
    return eval_binop(*n, P, env);
  }
  if (e.as<ast::Dot>()) {
    step.rule = "E_E.did";
    throw TypeError("dimension '" + print_brief(e) + "' used as a value");
  }
  throw TypeError("unknown expression form");
}

Value Session::eval_id(const ast::Id& n, const Context& P, const DefEnv& env,
                       Step& step) {
  const EnvEntry* entry = env.lookup(n.name);
  if (entry == nullptr) {
    throw EvalError(ErrorKind::kUnboundIdentifier,
                    "'" + n.name + "' is not defined", {}, P);
  }
  switch (entry->kind) {
    case EntryKind::kConst:
      step.rule = "E_cid";
      return entry->constant;
    case EntryKind::kDim:
      step.rule = "E_did";
      throw TypeError("dimension '" + n.name + "' used as a value");
    case EntryKind::kOp:
      step.rule = "E_opid";
      throw EvalError(ErrorKind::kArityError,
                      "builtin '" + n.name + "' needs arguments", {}, P);
    case EntryKind::kFunc:
      step.rule = "E_fid";
      throw EvalError(ErrorKind::kArityError,
                      "function '" + n.name + "' needs arguments", {}, P);
    case EntryKind::kVar:
      break;
  }
  step.rule = "E_vid";
  CacheKey key{entry->def.get(), P};
  if (options_.memoize) {
    if (auto it = cache_.find(key); it != cache_.end()) {
      step.cache_hit = true;
      return it->second;
    }
  }
  if (!in_progress_.insert(key).second) {
    throw EvalError(ErrorKind::kResourceExhausted,
                    "'" + n.name + "' depends on itself at " + P.to_string(),
                    entry->def->pos, P);
  }
  Value v;
  try {
    v = eval(P, entry->def->as<ast::VarDef>()->expr, env);
  } catch (...) {
    in_progress_.erase(key);
    throw;
  }
  in_progress_.erase(key);
  if (options_.memoize) cache_.emplace(std::move(key), v);
  return v;
}

bool Session::reaches(const ast::FuncDef& f, const DefEnv& env) {
  std::set<const Expr*> seen;
  std::vector<const Expr*> work{f.body.get()};
  while (!work.empty()) {
    const Expr* e = work.back();
    work.pop_back();
    if (!seen.insert(e).second) continue;
    std::vector<std::string> names;
    std::vector<const Expr*> children;
    referenced_names(*e, names, children);
    work.insert(work.end(), children.begin(), children.end());
    for (const auto& name : names) {
      if (name == f.name) return true;
      const EnvEntry* entry = env.lookup(name);
      if (entry == nullptr || !entry->def) continue;
      if (const auto* v = entry->def->as<ast::VarDef>()) {
        work.push_back(v->expr.get());
      } else if (const auto* g = entry->def->as<ast::FuncDef>()) {
        work.push_back(g->body.get());
      }
    }
  }
  return false;
}

Value Session::eval_apply(const ast::Apply& n, const Expr& self,
                          const Context& P, const DefEnv& env, Step& step) {
  const auto* callee = n.callee->as<ast::Id>();
  if (callee == nullptr) throw TypeError("only named functions can be applied");
  const EnvEntry* entry = env.lookup(callee->name);
  if (entry == nullptr) {
    throw EvalError(ErrorKind::kUnboundIdentifier,
                    "'" + callee->name + "' is not defined", self.pos, P);
  }
  if (entry->kind == EntryKind::kOp) {
    step.rule = "E_op";
    return eval_builtin(entry->builtin, n, P, env);
  }
  if (entry->kind != EntryKind::kFunc) {
    throw TypeError("'" + callee->name + "' is a " +
                    std::string(entry_kind_name(entry->kind)) +
                    ", not a function");
  }
  step.rule = "E_fct";
  const QDef* def = entry->def.get();
  const auto& f = *def->as<ast::FuncDef>();
  if (f.formals.size() != n.args.size()) {
    throw EvalError(ErrorKind::kArityError,
                    "'" + f.name + "' takes " + std::to_string(f.formals.size()) +
                        " argument(s), got " + std::to_string(n.args.size()),
                    self.pos, P);
  }
  auto rec = recursive_.find(def);
  if (rec == recursive_.end()) rec = recursive_.emplace(def, reaches(f, env)).first;
  if (rec->second) {
    throw EvalError(ErrorKind::kRecursionForbidden,
                    "function '" + f.name + "' refers to itself", self.pos, P);
  }
  auto key = std::make_pair(&self, def);
  auto it = substituted_.find(key);
  if (it == substituted_.end()) {
    std::map<std::string, ExprPtr> actuals;
    for (std::size_t i = 0; i < f.formals.size(); ++i) {
      actuals[f.formals[i]] = n.args[i];
    }
    it = substituted_.emplace(key, substitute(f.body, actuals)).first;
  }
  return eval(P, it->second, env);
}

Value Session::eval_context(const ast::CtxLit& n, const Context& P,
                            const DefEnv& env) {
  std::vector<std::pair<std::string, Tag>> pairs;
  for (const auto& [dim_expr, tag_expr] : n.bindings) {
    const std::string dim = env.resolve_dimension(*dim_expr);
    const Value tag = eval(P, tag_expr, env);
    if (tag.is_marker()) return tag;
    if (!tag.is_int()) {
      throw TypeError("tag of '" + dim + "' is a " + tag.kind_name());
    }
    pairs.emplace_back(dim, tag.as_int());
  }
  return Value(construct_context(pairs));
}

std::string Session::operator_dimension(const ExprPtr& dim,
                                        const DefEnv& env) const {
  if (!dim) return env.resolve_dimension(*make_id(kDefaultDimension));
  return env.resolve_dimension(*dim);
}

namespace {

IndexedStream along(Session& s, const ExprPtr& x, const Context& P,
                    const DefEnv& env, const std::string& dim) {
  return IndexedStream([&s, x, P, env, dim](StreamIndex j) {
           if (j < 0) return Value::bod();
           return s.eval(P.with(dim, j), x, env);
         })
      .memoized();
}

}  // namespace

Value Session::eval_builtin(Builtin b, const ast::Apply& n, const Context& P,
                            const DefEnv& env) {
  auto arity = [&](std::size_t want) {
    if (n.args.size() != want) {
      throw EvalError(ErrorKind::kArityError,
                      std::string(builtin_name(b)) + " takes " +
                          std::to_string(want) + " argument(s), got " +
                          std::to_string(n.args.size()),
                      n.callee->pos, P);
    }
  };
  switch (b) {
    case Builtin::kRun: {
      Seq run;
      for (const auto& a : n.args) {
        Value v = eval(P, a, env);
        if (v.is_marker()) return v;
        run.items.push_back(std::move(v));
      }
      return Value(std::move(run));
    }
    case Builtin::kUnion:
    case Builtin::kIntersection: {
      arity(2);
      const Value a = eval(P, n.args[0], env);
      const Value c = eval(P, n.args[1], env);
      if (auto m = scalar::marker_of(a, c)) return *m;
      const ContextSet x(as_contexts(a));
      const ContextSet y(as_contexts(c));
      return from_contexts(b == Builtin::kUnion ? set_union(x, y)
                                                : set_intersection(x, y));
    }
    case Builtin::kCombine: {
      arity(3);
      const std::string dim = env.resolve_dimension(*n.args[2]);
      const Value e = eval(P, n.args[1], env);
      if (e.is_marker()) return e;
      IndexedStream s = along(*this, n.args[0], P, env, dim);
      return forensic::combine(s, e).at(P.query(dim));
    }
    case Builtin::kProduct: {
      arity(3);
      const std::string dim = env.resolve_dimension(*n.args[2]);
      IndexedStream s1 = along(*this, n.args[0], P, env, dim);
      IndexedStream s2 = along(*this, n.args[1], P, env, dim);
      return forensic::product(s1, s2).at(P.query(dim));
    }
  }
  throw TypeError("unknown builtin");
}

Value Session::eval_unop(const ast::UnOp& n, const Context& P,
                         const DefEnv& env) {
  switch (n.op) {
    case UnaryOp::kNeg: return scalar::negate(eval(P, n.operand, env));
    case UnaryOp::kNot: return scalar::logical_not(eval(P, n.operand, env));
    case UnaryOp::kIsEod: return Value(eval(P, n.operand, env).is_eod());
    case UnaryOp::kIsBod: return Value(eval(P, n.operand, env).is_bod());
    case UnaryOp::kSecond:
    case UnaryOp::kPrelast: {
      // Only reachable for programs that skipped desugaring.
      const UnaryOp outer = n.op == UnaryOp::kSecond ? UnaryOp::kFirst : UnaryOp::kLast;
      const UnaryOp inner = n.op == UnaryOp::kSecond ? UnaryOp::kNext : UnaryOp::kPrev;
      auto rewritten = make_expr(
          ast::UnOp{outer, make_expr(ast::UnOp{inner, n.operand, n.dim}), n.dim});
      return eval_unop(*rewritten->as<ast::UnOp>(), P, env);
    }
    default: break;
  }
  const std::string dim = operator_dimension(n.dim, env);
  const Tag i = P.query(dim);
  IndexedStream x = along(*this, n.operand, P, env, dim);
  return indexed::apply(*stream_op(n.op), x).at(i);
}

Value Session::eval_binop(const ast::BinOp& n, const Context& P,
                          const DefEnv& env) {
  if (auto op = arith_of(n.op)) {
    const Value a = eval(P, n.lhs, env);
    const Value b = eval(P, n.rhs, env);
    return scalar::arith(*op, a, b);
  }
  if (auto op = compare_of(n.op)) {
    const Value a = eval(P, n.lhs, env);
    const Value b = eval(P, n.rhs, env);
    return scalar::compare(*op, a, b);
  }
  if (!is_dimensional(n.op)) {
    const Value a = eval(P, n.lhs, env);
    const Value b = eval(P, n.rhs, env);
    switch (n.op) {
      case BinaryOp::kAnd: return scalar::logical_and(a, b);
      case BinaryOp::kOr: return scalar::logical_or(a, b);
      default: return scalar_xor(a, b);
    }
  }
  const std::string dim = operator_dimension(n.dim, env);
  const Tag i = P.query(dim);
  IndexedStream x = along(*this, n.lhs, P, env, dim);
  IndexedStream y = along(*this, n.rhs, P, env, dim);
  return indexed::apply(*stream_op(n.op), x, y).at(i);
}

std::pair<DefEnv, Context> Session::process_defs(
    const Context& P, const std::vector<QDefPtr>& defs, const DefEnv& env) {
  std::vector<std::pair<std::string, EnvEntry>> entries;
  std::set<std::string> names;
  Context inner = P;
  for (const auto& d : defs) {
    if (!names.insert(d->name()).second) {
      throw EvalError(ErrorKind::kDuplicateDefinition,
                      "'" + d->name() + "' defined twice in one where clause",
                      d->pos, P);
    }
    const char* rule = "Q_id";
    std::string shown;
    if (d->as<ast::DimDecl>()) {
      rule = "Q_dim";
      entries.emplace_back(d->name(), EnvEntry::dim());
      inner = inner.with(d->name(), 0);
      shown = d->name() + ":0";
    } else if (d->as<ast::FuncDef>()) {
      rule = "Q_fid";
      entries.emplace_back(d->name(), EnvEntry::func(d));
      shown = "(func)";
    } else {
      entries.emplace_back(d->name(), EnvEntry::var(d));
      shown = "(var)";
    }
    if (options_.trace) {
      trace_.add({rule, print_brief(*make_expr(ast::Id{d->name()})), inner,
                  shown, depth_, false});
    }
  }
  if (options_.trace && defs.size() > 1) {
    trace_.add({"QQ", std::to_string(defs.size()) + " definitions", inner, "",
                depth_, false});
  }
  return {env.extend(std::move(entries)), inner};
}

Session::Prepared Session::prepare(const ExprPtr& program,
                                   const Context& ambient) {
  Prepared p{base_env_, initial_context(), program, false};
  if (const auto* w = program->as<ast::Where>()) {
    p.is_where = true;
    std::tie(p.env, p.context) = process_defs(p.context, w->defs, base_env_);
    p.body = w->body;
  }
  for (const auto& [dim, tag] : ambient.bindings()) {
    try {
      (void)p.env.resolve_dimension(*make_id(dim));
    } catch (const UnboundDimension&) {
      throw EvalError(ErrorKind::kUnboundDimension,
                      "'" + dim + "' is not a declared dimension", {}, ambient);
    } catch (const TypeError& x) {
      throw EvalError(ErrorKind::kTypeError, x.what(), {}, ambient);
    }
  }
  p.context = p.context.override_with(ambient);
  return p;
}

Value Session::eval(const ExprPtr& program, const Context& ambient) {
  start_request();
  depth_ = 1;
  Prepared p = prepare(program, ambient);
  if (!p.is_where) depth_ = 0;
  Value v = eval(p.context, p.body, p.env);
  depth_ = 0;
  if (p.is_where) record("E_w", *program, p.context, to_string(v), 0);
  return v;
}

std::vector<Value> Session::eval_window(const ExprPtr& program,
                                        const Context& ambient,
                                        const std::string& dim, StreamIndex lo,
                                        StreamIndex hi) {
  if (lo > hi) throw std::invalid_argument("window lower bound exceeds upper");
  start_request();
  Prepared p = prepare(program, ambient.override_with(Context{{dim, 0}}));
  std::vector<Value> out;
  for (StreamIndex i = lo; i < hi; ++i) {
    rules_ = 0;
    out.push_back(i < 0 ? Value::bod() : eval(p.context.with(dim, i), p.body, p.env));
  }
  return out;
}

BoundedStream Session::eval_stream(const ExprPtr& program,
                                   const Context& ambient,
                                   const std::string& dim, StreamIndex lo,
                                   StreamIndex hi) {
  if (lo > hi) throw std::invalid_argument("window lower bound exceeds upper");
  start_request();
  Prepared p = prepare(program, ambient.override_with(Context{{dim, 0}}));
  std::vector<Value> out;
  for (StreamIndex i = std::max<StreamIndex>(lo, 0); i < hi; ++i) {
    rules_ = 0;
    Value v = eval(p.context.with(dim, i), p.body, p.env);
    if (v.is_eod()) break;
    if (!v.is_marker()) out.push_back(std::move(v));
  }
  return BoundedStream(std::move(out));
}

}  // namespace flucid
