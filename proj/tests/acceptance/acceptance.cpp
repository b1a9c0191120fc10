// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flucid/evaluator.hpp"
#include "flucid/forensic.hpp"
#include "flucid/harness.hpp"
#include "flucid/parser.hpp"
#include "flucid/printer.hpp"
#include "support/ast_gen.hpp"
#include "support/program_gen.hpp"

using namespace flucid;

namespace {

// Pinned limits.
constexpr double kTableSeconds = 1.0;
constexpr double kPropositionSeconds = 10.0;
constexpr int kCases = 500;
constexpr int kMaxLen = 24;
constexpr int kGeneratedPrograms = 150;
constexpr int kGeneratedAsts = 600;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

harness::Config config() {
  harness::Config cfg;
  cfg.cases = kCases;
  cfg.max_len = kMaxLen;
  return cfg;
}

void require_report(Outcome& o, const harness::Report& r, std::size_t min_cases) {
  for (const auto& p : r.results) {
    o.require(p.failures == 0, p.suite + "/" + p.name + " " + p.counterexample);
    o.require(p.cases >= min_cases,
              p.suite + "/" + p.name + " ran " + std::to_string(p.cases) + " cases");
  }
  o.require(!r.results.empty(), "empty report");
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome table1() {
  Outcome o;
  auto t0 = Clock::now();
  harness::Report r = harness::check_table1(config());
  double secs = seconds_since(t0);
  require_report(o, r, 1);
  o.require(r.results.size() == harness::golden_rows().size(), "row count");
  o.require(secs < kTableSeconds, "took " + std::to_string(secs) + " s");
  for (const auto& p : r.results)
    if (!p.note.empty()) o.detail += (o.detail.empty() ? "" : "; ") + p.name + ": " + p.note;
  return o;
}

Outcome propositions() {
  Outcome o;
  auto t0 = Clock::now();
  harness::Report r = harness::check_propositions(config());
  double secs = seconds_since(t0);
  require_report(o, r, kCases);
  o.require(r.results.size() >= 6 + kAllStreamOps.size(), "missing properties");
  o.require(secs < kPropositionSeconds, "took " + std::to_string(secs) + " s");
  return o;
}

Outcome suite(harness::Report (*fn)(const harness::Config&), std::size_t min_cases) {
  Outcome o;
  require_report(o, fn(config()), min_cases);
  return o;
}

Outcome running_sum() {
  Outcome o;
  Session s;
  ExprPtr prog = compile(read(std::filesystem::path(FLUCID_PROGRAMS_DIR) / "running_sum.fl"));
  std::vector<Value> got = s.eval_window(prog, {}, "d", 0, 20);
  o.require(got.size() == 20, "window size");
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(got.size()); ++i)
    o.require(got[i] == Value(i * (i + 1) / 2), "slot " + std::to_string(i));
  return o;
}

Outcome semantics() {
  Outcome o;
  {
    Session s;
    o.require(s.eval(compile("#.d where dimension d; end")) == Value(0), "#.d tag");
  }
  try {
    Session s;
    s.eval(compile("(x where x = 1; end) + x"));
    o.require(false, "x visible outside its where");
  } catch (const EvalError& e) {
    o.require(e.kind() == ErrorKind::kUnboundIdentifier, e.what());
  }
  testing::ProgramGen gen(77);
  const std::string defs = " where V = 0 fby V + 1; W = #.d * 3; end";
  for (int i = 0; i < kGeneratedPrograms; ++i) {
    std::string e = gen.expr(4, {"V", "W"});
    std::string k = std::to_string(gen.pick(6));
    auto a = testing::evaluate("(" + e + ") @ [d: " + k + "]" + defs);
    auto b = testing::evaluate("(" + e + ") @.d " + k + defs);
    o.require(a == b, e + " @ " + k + ": " + testing::describe(a) + " vs " +
                          testing::describe(b));
  }
  return o;
}

Outcome temporal() {
  Outcome o;
  const std::vector<std::string> want = {
      "F F T T T F F F T",  // Montreal
      "F F F F T T T F F",  // Quebec
      "F T T T T T F F F",  // Ottawa
  };
  ExprPtr prog = compile(read(std::filesystem::path(FLUCID_PROGRAMS_DIR) / "temporal.fl"));
  for (std::int64_t city = 0; city < 3; ++city) {
    Session s;
    std::vector<Value> row = s.eval_window(prog, Context{{"city", city}}, "day", 0, 9);
    std::string got;
    for (const auto& v : row) got += (got.empty() ? "" : " ") + to_string(v);
    o.require(got == want[city], "city " + std::to_string(city) + ": " + got);
  }
  return o;
}

Value run_of(std::vector<Value> events) { return Value(Seq{std::move(events)}); }

Outcome forensic_ops() {
  Outcome o;
  const Value A = run_of({1}), B = run_of({2}), c = run_of({3}), d = run_of({4});
  o.require(forensic::combine(BoundedStream{A, B}, Value(3)) ==
                BoundedStream{run_of({1, 3}), run_of({2, 3})},
            "combine example");
  o.require(forensic::product(BoundedStream{A, B}, BoundedStream{c, d}) ==
                BoundedStream{run_of({1, 3}), run_of({2, 3}), run_of({1, 4}), run_of({2, 4})},
            "product example");

  std::mt19937_64 rng(9);
  std::int64_t label = 0;
  auto random_stream = [&](int n) {
    std::vector<Value> out;
    for (int i = 0; i < n; ++i) {
      std::vector<Value> events;
      for (int k = 0, len = static_cast<int>(rng() % 4); k < len; ++k) events.emplace_back(++label);
      out.push_back(run_of(std::move(events)));
    }
    return BoundedStream(std::move(out));
  };
  for (int trial = 0; trial < 10; ++trial) {
    for (int n1 = 0; n1 <= 5; ++n1) {
      for (int n2 = 0; n2 <= 5; ++n2) {
        BoundedStream s1 = random_stream(n1), s2 = random_stream(n2);
        std::vector<Value> want;
        for (const auto& e : s2.elements()) {
          for (const auto& r : s1.elements()) {
            std::vector<Value> items = r.as_seq().items;
            for (const auto& x : e.as_seq().items) items.push_back(x);
            want.push_back(run_of(std::move(items)));
          }
        }
        BoundedStream got = forensic::product(s1, s2);
        std::string at = std::to_string(n1) + "x" + std::to_string(n2);
        o.require(got.size() == s1.size() * s2.size(), "cardinality " + at);
        o.require(got.elements() == want, "cross product " + at);
        o.require(materialize(forensic::product(IndexedStream(s1), IndexedStream(s2))) == got,
                  "lazy product " + at);
      }
    }
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  testing::AstGen gen(31337);
  for (int i = 0; i < kGeneratedAsts; ++i) {
    ExprPtr e = gen.expr(4);
    std::string text = print_expr(e);
    try {
      o.require(equal(parse(text), e), text);
    } catch (const std::exception& ex) {
      o.require(false, text + ": " + ex.what());
    }
  }
  int fixtures = 0;
  for (const auto& entry : std::filesystem::directory_iterator(FLUCID_PROGRAMS_DIR)) {
    if (entry.path().extension() != ".fl") continue;
    ++fixtures;
    ExprPtr e = parse(read(entry.path()));
    o.require(equal(parse(print_expr(e)), e), entry.path().filename().string());
  }
  o.require(fixtures >= 3, "fixtures missing");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"table golden rows", table1},
      {"pipelined/indexed agreement", propositions},
      {"hash and at_op", [] { return suite(harness::check_prophash, kCases); }},
      {"rank lemmas", [] { return suite(harness::check_lemmas, kCases); }},
      {"dualities", [] { return suite(harness::check_dualities, 1); }},
      {"running sum", running_sum},
      {"semantics conformance", semantics},
      {"temporal grid", temporal},
      {"forensic operators", forensic_ops},
      {"parser round-trip", round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name;
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    std::cout << '\n';
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
