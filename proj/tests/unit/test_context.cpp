// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <map>
#include <random>

#include "flucid/context.hpp"

using namespace flucid;

TEST_CASE("override is right biased") {
  CHECK(override(Context{{"d", 1}}, Context{{"d", 5}}) == Context{{"d", 5}});
  CHECK(override(Context{}, Context{{"e", 2}}) == Context{{"e", 2}});
  CHECK(override(Context{{"d", 1}, {"e", 2}}, Context{{"e", 9}}) ==
        Context{{"d", 1}, {"e", 9}});
}

TEST_CASE("query") {
  CHECK(query(Context{{"d", 0}}, "d") == 0);
  CHECK(query(Context{{"d", 3}, {"e", 7}}, "e") == 7);
  CHECK_THROWS_AS(query(Context{{"d", 3}}, "e"), UnboundDimension);
  try {
    query(Context{{"d", 3}}, "e");
  } catch (const UnboundDimension& e) {
    CHECK(e.dimension() == "e");
  }
}

TEST_CASE("construct_context folds override over singletons") {
  CHECK(construct_context({{"d", 2}}) == Context{{"d", 2}});
  CHECK(construct_context({{"d", 1}, {"e", 2}}) == Context{{"d", 1}, {"e", 2}});
  CHECK(construct_context({{"d", 1}, {"d", 2}}) == Context{{"d", 2}});
  CHECK(construct_context({}).empty());
}

TEST_CASE("context sets") {
  Context d1{{"d", 1}}, d2{{"d", 2}}, d3{{"d", 3}};
  CHECK(desugar_context_set({{{"d", 1}}, {{"d", 2}}}) == ContextSet({d1, d2}));
  CHECK(desugar_context_set({{{"d", 1}}}) == ContextSet({d1}));
  CHECK_THROWS_AS(desugar_context_set({}), std::invalid_argument);

  ContextSet a({d1, d2}), b({d2, d3});
  CHECK(set_union(a, b) == ContextSet({d1, d2, d3}));
  CHECK(set_intersection(a, b) == ContextSet({d2}));
  CHECK(set_union(a, a) == a);
  CHECK(a.contains(d2));
  CHECK_FALSE(a.contains(d3));
}

TEST_CASE("compound dimensions are flat names") {
  CHECK(dot_dimension("evidence", "time") == "evidence.time");
  Context c{{"evidence.time", 4}};
  CHECK(query(c, dot_dimension("evidence", "time")) == 4);
}

TEST_CASE("to_string uses the literal syntax") {
  CHECK(Context{{"d", 1}, {"e", 2}}.to_string() == "[d:1, e:2]");
  CHECK(Context{}.to_string() == "[]");
}

namespace {

Context random_context(std::mt19937_64& rng) {
  static const char* const kDims[] = {"a", "b", "c", "d"};
  Context c;
  for (int i = 0, n = static_cast<int>(rng() % 4); i < n; ++i)
    c = c.with(kDims[rng() % 4], static_cast<Tag>(rng() % 7));
  return c;
}

}  // namespace

TEST_CASE("property: override against a map-union oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Context p = random_context(rng), q = random_context(rng), r = random_context(rng);
    std::map<std::string, Tag> want = q.bindings();
    want.insert(p.bindings().begin(), p.bindings().end());  // keeps q on conflicts
    CHECK(override(p, q).bindings() == want);
    CHECK(override(override(p, q), r) == override(p, override(q, r)));
    CHECK(override(p, p) == p);
    for (const auto& [dim, tag] : q.bindings()) {
      CHECK(query(construct_context({{dim, tag}}), dim) == tag);
    }
  }
}
