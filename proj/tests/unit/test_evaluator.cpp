// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "flucid/error.hpp"
#include "flucid/evaluator.hpp"
#include "flucid/parser.hpp"
#include "support/program_gen.hpp"

using namespace flucid;
using flucid::testing::evaluate;

namespace {

Value value_of(const std::string& src, const Context& ambient = {}) {
  Session s;
  return s.eval(compile(src), ambient);
}

ErrorKind error_of(const std::string& src, EvalOptions opts = {}) {
  auto o = evaluate(src, {}, opts);
  REQUIRE_MESSAGE(o.error.has_value(), "expected an error, got " << testing::describe(o));
  return *o.error;
}

Value run_of(std::vector<Value> items) { return Value(Seq{std::move(items)}); }

}  // namespace

TEST_CASE("constants, tags and navigation") {
  CHECK(value_of("42") == Value(42));
  CHECK(value_of("true") == Value(true));
  CHECK(value_of("#.d where dimension d end") == Value(0));
  CHECK(value_of("X @.d 2 where dimension d; X = #.d * 2 end") == Value(4));
  CHECK(value_of("X @ [d:3] where X = #.d; end", Context{{"d", 0}}) == Value(3));
  CHECK(value_of("#.d", Context{{"d", 5}}) == Value(5));
  CHECK(value_of("#") == Value(Context{{"d", 0}}));
  CHECK(value_of("# @ [d:5, e:1] where dimension e; end") ==
        Value(Context{{"d", 5}, {"e", 1}}));
  CHECK(value_of("[d: 1 + 1]") == Value(Context{{"d", 2}}));
}

TEST_CASE("conditionals accept booleans and integers") {
  CHECK(value_of("if true then 1 else 2 fi") == Value(1));
  CHECK(value_of("if 0 then 1 else 2 fi") == Value(2));
  CHECK(value_of("if 3 then 1 else 2 fi") == Value(1));
  CHECK(value_of("if eod then 1 else 2 fi").is_eod());
}

TEST_CASE("markers") {
  CHECK(value_of("eod + 1").is_eod());
  CHECK(value_of("iseod eod") == Value(true));
  CHECK(value_of("isbod (prev #.d)") == Value(true));
  CHECK(value_of("X @.d (0 - 1) where X = 5; end").is_bod());
  CHECK(error_of("eod == 1") == ErrorKind::kMarkerArithmetic);
}

TEST_CASE("functions are applied by name") {
  CHECK(value_of("f(10) where f(x) = x + 1; end") == Value(11));
  CHECK(value_of("g(3, 4) where g(a, b) = a * b; end") == Value(12));
  // The actual is evaluated where the formal is used, so navigation inside
  // the body moves the argument too.
  CHECK(value_of("h(#.d) where h(x) = x @.d 7; end") == Value(7));
  CHECK(value_of("f(f(1)) where f(x) = x + 1; end") == Value(3));
}

TEST_CASE("stream operators along a dimension") {
  CHECK(value_of("second (#.d + 10)") == Value(11));
  CHECK(value_of("(1 fby 2) @.d 1") == Value(2));
  CHECK(value_of("X @.d 4 where X = 0 fby X + 1; end") == Value(4));
  CHECK(value_of("(X wvr X % 2 == 0) @.d 2 where X = #.d; end") == Value(4));
}

TEST_CASE("process_defs") {
  Session s;
  Context P = Session::initial_context();
  auto defs = [](const char* src) {
    return parse(src)->as<ast::Where>()->defs;
  };
  auto [env1, ctx1] = s.process_defs(P, defs("0 where dimension t; end"), s.base_env());
  CHECK(env1.lookup("t")->kind == EntryKind::kDim);
  CHECK(ctx1 == Context{{"d", 0}, {"t", 0}});

  auto [env2, ctx2] = s.process_defs(P, defs("0 where n = 5; end"), s.base_env());
  CHECK(env2.lookup("n")->kind == EntryKind::kVar);
  CHECK(ctx2 == P);

  auto [env3, ctx3] = s.process_defs(P, defs("0 where f(x) = x + 1; end"), s.base_env());
  CHECK(env3.lookup("f")->kind == EntryKind::kFunc);
  CHECK(env3.lookup("x") == nullptr);

  try {
    s.process_defs(P, defs("0 where n = 1; n = 2; end"), s.base_env());
    FAIL("expected duplicate-definition");
  } catch (const EvalError& e) {
    CHECK(e.kind() == ErrorKind::kDuplicateDefinition);
  }
}

TEST_CASE("eval_stream") {
  Session s;
  CHECK(s.eval_stream(compile("#.d"), {}, "d", 0, 5) == BoundedStream{0, 1, 2, 3, 4});
  CHECK(s.eval_stream(compile("if #.d < 3 then #.d else eod fi"), {}, "d", 0, 10) ==
        BoundedStream{0, 1, 2});
  const char* fby_program =
      "X fby Y where "
      "X = if #.d >= 10 then eod else #.d + 1 fi; "
      "bits = 713 fby bits / 2; "
      "Y = if iseod X then eod else bits % 2 == 1 fi; end";
  CHECK(s.eval_stream(compile(fby_program), {}, "d", 0, 20) ==
        BoundedStream{1, true, false, false, true, false, false, true, true, false, true});
  std::vector<Value> window = s.eval_window(compile("prev #.d"), {}, "d", 0, 3);
  CHECK(window[0].is_bod());
  CHECK(window[2] == Value(1));
}

TEST_CASE("running sum") {
  Session s;
  BoundedStream sums = s.eval_stream(
      compile("Y where X = 0 fby X + 1; Y = X fby Y + next X; end"), {}, "d", 0, 20);
  REQUIRE(sums.size() == 20);
  for (std::int64_t i = 0; i < 20; ++i) CHECK(sums.at(i) == Value(i * (i + 1) / 2));
}

TEST_CASE("error kinds") {
  CHECK(error_of("x") == ErrorKind::kUnboundIdentifier);
  CHECK(error_of("1 + true") == ErrorKind::kTypeError);
  CHECK(error_of("f(1, 2) where f(x) = x; end") == ErrorKind::kArityError);
  CHECK(error_of("#.zz") == ErrorKind::kUnboundDimension);
  CHECK(error_of("f(1) where f(x) = f(x); end") == ErrorKind::kRecursionForbidden);
  CHECK(error_of("f(1) where f(x) = g(x); g(x) = f(x); end") ==
        ErrorKind::kRecursionForbidden);
  CHECK(error_of("a where a = a + 1; end") == ErrorKind::kResourceExhausted);
  CHECK(error_of("d + 1") == ErrorKind::kTypeError);
  EvalOptions tight;
  tight.rule_budget = 100;
  CHECK(error_of("X @.d 1000 where X = 0 fby X + 1; end", tight) ==
        ErrorKind::kResourceExhausted);
}

TEST_CASE("errors carry a position and the context") {
  Session s;
  try {
    s.eval(compile("1 +\n  y @ [d:4]"));
    FAIL("expected an error");
  } catch (const EvalError& e) {
    CHECK(e.kind() == ErrorKind::kUnboundIdentifier);
    CHECK(e.pos().line == 2);
    CHECK(e.pos().column == 3);
    CHECK(e.context() == Context{{"d", 4}});
  }
}

TEST_CASE("where scopes are local") {
  CHECK(error_of("(x where x = 1; end) + x") == ErrorKind::kUnboundIdentifier);
  CHECK(value_of("(x where x = 1; end) + (x where x = 2; end)") == Value(3));
  CHECK(error_of("(#.t where dimension t; end) + #.t") == ErrorKind::kUnboundDimension);
  CHECK(value_of("n where n = 1; m = n where n = 2; end; end") == Value(1));
}

TEST_CASE("compound dimensions") {
  CHECK(value_of("#.e.time @.e.time 4 where dimension e.time; end") == Value(4));
  CHECK(error_of("#.a.b") == ErrorKind::kUnboundDimension);
}

TEST_CASE("context sets and forensic builtins") {
  CHECK(value_of("X @ {[d:1], [d:2]} where X = #.d * 10; end") ==
        Value(Seq{{Value(10), Value(20)}}));
  CHECK(value_of("union({[d:1]}, {[d:2]})") ==
        Value(Seq{{Value(Context{{"d", 1}}), Value(Context{{"d", 2}})}}));
  CHECK(value_of("intersection({[d:1], [d:2]}, {[d:2]})") ==
        Value(Seq{{Value(Context{{"d", 2}})}}));
  const char* s = "S = if #.d == 0 then run(1) else if #.d == 1 then run(2) else eod fi fi;";
  CHECK(value_of(std::string("combine(S, 3) @.d 1 where ") + s + " end") ==
        run_of({2, 3}));
  CHECK(value_of(std::string("product(S, T) @.d 2 where ") + s +
                 " T = if #.d < 2 then run(#.d + 10) else eod fi; end") ==
        run_of({1, 11}));
  CHECK(value_of(std::string("product(S, T) @.d 4 where ") + s +
                 " T = if #.d < 2 then run(#.d + 10) else eod fi; end")
            .is_eod());
  CHECK(error_of("combine(1, 2, d)") == ErrorKind::kTypeError);
  CHECK(error_of("combine(1, 2, 3, d)") == ErrorKind::kArityError);
}

TEST_CASE("ambient bindings override top-level declarations") {
  CHECK(value_of("#.t where dimension t; end", Context{{"t", 6}}) == Value(6));
  CHECK(value_of("X where X = #.d + 1; end", Context{{"d", 2}}) == Value(3));
}

TEST_CASE("memoization") {
  Session s;
  ExprPtr p = compile("X @.d 30 where X = 0 fby X + 1; end");
  CHECK(s.eval(p) == Value(30));
  CHECK(s.cache_entries() > 0);
  std::size_t first_rules = s.rules_applied();
  CHECK(s.eval(p) == Value(30));
  CHECK(s.rules_applied() < first_rules);
}

TEST_CASE("property: same outcome with and without the cache") {
  testing::ProgramGen gen(3);
  EvalOptions nomemo;
  nomemo.memoize = false;
  for (int i = 0; i < 150; ++i) {
    std::string src = gen.expr(4, {"V", "W"}) +
                      " where V = 0 fby V + 1; W = #.d * #.d; end";
    INFO(src);
    Context at{{"d", gen.pick(4)}};
    CHECK(evaluate(src, at) == evaluate(src, at));
    CHECK(evaluate(src, at) == evaluate(src, at, nomemo));
  }
}

TEST_CASE("property: application equals textual substitution") {
  testing::ProgramGen gen(8);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    std::string body = gen.expr(3, {"x", "y", "V"});
    std::string a1 = gen.expr(2, {"V"});
    std::string a2 = gen.expr(2, {"V"});
    std::string defs = " where dimension d; V = 0 fby V + 1; ";
    std::string call = "f(" + a1 + ", " + a2 + ")" + defs + "f(x, y) = " + body + "; end";
    std::string model = testing::substitute_text(body, {{"x", a1}, {"y", a2}}) + defs + "end";
    INFO(call);
    for (Tag k = 0; k < 3; ++k) {
      CHECK(evaluate(call, Context{{"d", k}}) == evaluate(model, Context{{"d", k}}));
      ++compared;
    }
  }
  CHECK(compared == 900);
}

TEST_CASE("property: E @ [d:k] equals E @.d k") {
  testing::ProgramGen gen(21);
  for (int i = 0; i < 150; ++i) {
    std::string e = gen.expr(4, {"V", "W"});
    std::string k = std::to_string(gen.pick(6));
    std::string defs = " where V = 0 fby V + 1; W = #.d * 3; end";
    INFO(e);
    CHECK(evaluate("(" + e + ") @ [d: " + k + "]" + defs) ==
          evaluate("(" + e + ") @.d " + k + defs));
  }
}
