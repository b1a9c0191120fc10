// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_EVALUATOR_HPP_
#define FLUCID_EVALUATOR_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flucid/ast.hpp"
#include "flucid/context.hpp"
#include "flucid/environment.hpp"
#include "flucid/stream.hpp"
#include "flucid/trace.hpp"
#include "flucid/value.hpp"

namespace flucid {

enum class ErrorKind {
  kUnboundIdentifier,
  kTypeError,
  kArityError,
  kUnboundDimension,
  kMarkerArithmetic,
  kRecursionForbidden,
  kResourceExhausted,
  kDuplicateDefinition,
};

std::string_view error_kind_name(ErrorKind kind);

/// An evaluation failure, with the expression position and the context it
/// was evaluated at.
class EvalError : public std::runtime_error {
 public:
  EvalError(ErrorKind kind, const std::string& detail, SourcePos pos,
            Context context);

  [[nodiscard]] ErrorKind kind() const { return kind_; }
  [[nodiscard]] const std::string& detail() const { return detail_; }
  [[nodiscard]] SourcePos pos() const { return pos_; }
  [[nodiscard]] const Context& context() const { return context_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  SourcePos pos_;
  Context context_;
};

inline constexpr std::size_t kDefaultRuleBudget = 1'000'000;

struct EvalOptions {
  /// Rule applications allowed per top-level request.
  std::size_t rule_budget = kDefaultRuleBudget;
  /// Maximum nesting of demands before giving up.
  std::size_t max_nesting = 20'000;
  bool memoize = true;
  bool trace = false;
};

/// Parses and desugars program text.
ExprPtr compile(std::string_view source);

/// Demand-driven evaluator. Named variables are cached per (definition,
/// context); everything else is recomputed on demand. Functions are applied
/// by substituting the argument expressions into the body.
///
/// Top-level programs of the form `E where Q end` get their definitions
/// processed first; ambient bindings (the command-line context) are applied
/// afterwards, so they win over the tag-0 default of `dimension` at the top
/// level only. The implicit dimension `d` starts at tag 0.
class Session {
 public:
  explicit Session(EvalOptions options = {});

  /// Value of a whole program at the ambient context.
  Value eval(const ExprPtr& program, const Context& ambient = {});
  /// Value of `e` at `P` under `env` (the rules proper).
  Value eval(const Context& P, const ExprPtr& e, const DefEnv& env);
  /// eval at `P` under the base environment.
  Value eval_at(const Context& P, const ExprPtr& e);

  /// Adds one where-clause's definitions: (dim) entries plus tag 0 in the
  /// context, (var) and (func) entries. Returns the extended pair.
  std::pair<DefEnv, Context> process_defs(const Context& P,
                                          const std::vector<QDefPtr>& defs,
                                          const DefEnv& env);

  /// The program's values at tags lo..hi-1 of `dim`, stopping at the first
  /// eod; bod slots are dropped.
  BoundedStream eval_stream(const ExprPtr& program, const Context& ambient,
                            const std::string& dim, StreamIndex lo,
                            StreamIndex hi);
  /// Every slot lo..hi-1, markers included.
  std::vector<Value> eval_window(const ExprPtr& program,
                                 const Context& ambient,
                                 const std::string& dim, StreamIndex lo,
                                 StreamIndex hi);

  [[nodiscard]] const Trace& explain() const { return trace_; }
  void clear_trace() { trace_.clear(); }
  void set_tracing(bool on) { options_.trace = on; }
  [[nodiscard]] const EvalOptions& options() const { return options_; }

  [[nodiscard]] std::size_t rules_applied() const { return rules_; }
  [[nodiscard]] std::size_t cache_entries() const { return cache_.size(); }
  void clear_cache();

  [[nodiscard]] const DefEnv& base_env() const { return base_env_; }
  /// The context a program starts from before its definitions: `d` at 0.
  [[nodiscard]] static Context initial_context();

 private:
  struct Step {
    const char* rule = "";
    bool cache_hit = false;
  };
  struct Prepared {
    DefEnv env;
    Context context;
    ExprPtr body;
    bool is_where = false;
  };
  class Nesting;
  using CacheKey = std::pair<const QDef*, Context>;

  Prepared prepare(const ExprPtr& program, const Context& ambient);
  void start_request();
  void record(const char* rule, const Expr& e, const Context& P,
              const std::string& value, int depth, bool cache_hit = false);

  Value dispatch(const Expr& e, const Context& P, const DefEnv& env,
                 Step& step);
  Value eval_id(const ast::Id& n, const Context& P, const DefEnv& env,
                Step& step);
  Value eval_apply(const ast::Apply& n, const Expr& self, const Context& P,
                   const DefEnv& env, Step& step);
  Value eval_builtin(Builtin b, const ast::Apply& n, const Context& P,
                     const DefEnv& env);
  Value eval_unop(const ast::UnOp& n, const Context& P, const DefEnv& env);
  Value eval_binop(const ast::BinOp& n, const Context& P, const DefEnv& env);
  Value eval_context(const ast::CtxLit& n, const Context& P,
                     const DefEnv& env);

  std::string operator_dimension(const ExprPtr& dim, const DefEnv& env) const;
  bool reaches(const ast::FuncDef& f, const DefEnv& env);

  EvalOptions options_;
  DefEnv base_env_;
  std::map<CacheKey, Value> cache_;
  std::set<CacheKey> in_progress_;
  std::map<std::pair<const Expr*, const QDef*>, ExprPtr> substituted_;
  std::map<const QDef*, bool> recursive_;
  Trace trace_;
  std::size_t rules_ = 0;
  std::size_t nesting_ = 0;
  int depth_ = 0;
};

/// Copy of `body` with every identifier named in `actuals` replaced by the
/// corresponding expression (also in dimension positions).
ExprPtr substitute(const ExprPtr& body,
                   const std::map<std::string, ExprPtr>& actuals);

}  // namespace flucid

#endif  // FLUCID_EVALUATOR_HPP_
