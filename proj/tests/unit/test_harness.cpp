// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "flucid/harness.hpp"

using namespace flucid;
using namespace flucid::harness;

TEST_CASE("rank") {
  BoundedStream y = table_y();
  CHECK(rank(-1, y) == -1);
  CHECK(rank(-1, BoundedStream{}) == -1);
  CHECK(rank(0, y) == 0);
  CHECK(rank(1, y) == 3);
  CHECK(rank(4, y) == 9);
  CHECK_FALSE(rank(5, y).has_value());
  CHECK(ranks(y) == std::vector<StreamIndex>{0, 3, 6, 7, 9});
  CHECK(table_x().at(*rank(1, y)) == Value(4));
}

TEST_CASE("property: rank is strictly increasing and follows its recurrence") {
  StreamGen gen(4);
  for (int c = 0; c < 300; ++c) {
    BoundedStream y = gen.condition(gen.length());
    std::vector<StreamIndex> rs = ranks(y);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      StreamIndex prev = i == 0 ? -1 : rs[i - 1];
      CHECK(rs[i] > prev);
      CHECK(truth(y.at(rs[i])));
      for (StreamIndex k = prev + 1; k < rs[i]; ++k) CHECK_FALSE(truth(y.at(k)));
    }
  }
}

TEST_CASE("suffix") {
  CHECK(suffix(BoundedStream{1, 2, 3}, 0) == BoundedStream{1, 2, 3});
  CHECK(suffix(BoundedStream{1, 2, 3}, 2) == BoundedStream{3});
  CHECK(suffix(BoundedStream{1, 2, 3}, 5) == BoundedStream{});
}

TEST_CASE("generation is deterministic and mixes conditions") {
  StreamGen a(42), b(42);
  for (int i = 0; i < 50; ++i) {
    int n = a.length();
    CHECK(n == b.length());
    CHECK(n <= 24);
    CHECK(a.ints(n) == b.ints(n));
    CHECK(a.condition(n) == b.condition(n));
  }
  StreamGen g(1);
  int all_true = 0, all_false = 0;
  for (int i = 0; i < 1000; ++i) {
    BoundedStream y = g.condition(8);
    bool t = true, f = true;
    for (const auto& v : y.elements()) {
      t = t && v.as_bool();
      f = f && !v.as_bool();
    }
    all_true += t;
    all_false += f;
  }
  CHECK(all_true > 150);
  CHECK(all_false > 150);
  for (const auto& v : g.ints(200).elements()) {
    CHECK(v.as_int() >= -100);
    CHECK(v.as_int() <= 100);
  }
}

TEST_CASE("reference implementations pass every suite") {
  Config cfg;
  cfg.cases = 120;
  Report r = run(cfg);
  INFO(r.to_text());
  CHECK(r.passed());
  CHECK(r.results.size() > 60);
}

TEST_CASE("same seed, same report") {
  Config cfg;
  cfg.cases = 40;
  CHECK(run(cfg).to_text() == run(cfg).to_text());
}

TEST_CASE("an injected fault is caught with a shrunk counterexample") {
  Config cfg;
  cfg.cases = 100;
  cfg.impl = Implementations::with_fault(StreamOp::kUpon);
  Report r = run(cfg, "propositions");
  CHECK_FALSE(r.passed());
  bool found = false;
  for (const auto& p : r.results) {
    if (p.name == "upon agrees") {
      found = true;
      CHECK(p.failures > 0);
      // Index 1 is the first corrupted slot, so two elements are enough.
      CHECK(p.counterexample.rfind("X=[", 0) == 0);
      CHECK(p.counterexample.find("Y=[") != std::string::npos);
    }
  }
  CHECK(found);
  CHECK(r.to_text().find("FAIL propositions/upon agrees") != std::string::npos);

  cfg.impl = Implementations::with_fault(StreamOp::kFirst);
  CHECK_FALSE(run(cfg, "table1").passed());
}

TEST_CASE("table rows and suite selection") {
  Config cfg;
  Report t = check_table1(cfg);
  CHECK(t.passed());
  CHECK(t.results.size() == golden_rows().size());
  int notes = 0;
  for (const auto& p : t.results) notes += p.note.empty() ? 0 : 1;
  CHECK(notes == 2);
  CHECK_THROWS_AS(run(cfg, "nope"), std::invalid_argument);
}
