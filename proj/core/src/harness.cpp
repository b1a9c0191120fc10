// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/harness.hpp"

#include <exception>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "flucid/ops_pipelined.hpp"

namespace flucid::harness {

int StreamGen::length() {
  return std::uniform_int_distribution<int>(0, max_len_)(rng_);
}

std::int64_t StreamGen::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

BoundedStream StreamGen::ints(int len) {
  std::vector<Value> v;
  for (int i = 0; i < len; ++i) v.emplace_back(integer());
  return BoundedStream(std::move(v));
}

BoundedStream StreamGen::bools(int len) {
  std::bernoulli_distribution coin(bool_bias_);
  std::vector<Value> v;
  for (int i = 0; i < len; ++i) v.emplace_back(coin(rng_));
  return BoundedStream(std::move(v));
}

BoundedStream StreamGen::condition(int len) {
  double mode = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
  if (mode < 0.4) {
    std::vector<Value> v(static_cast<std::size_t>(len), Value(mode < 0.2));
    return BoundedStream(std::move(v));
  }
  return bools(len);
}

BoundedStream StreamGen::indices(int len, std::int64_t bound) {
  std::vector<Value> v;
  for (int i = 0; i < len; ++i) v.emplace_back(integer(0, bound - 1));
  return BoundedStream(std::move(v));
}

std::optional<StreamIndex> rank(StreamIndex i, const BoundedStream& y) {
  if (i < -1) return std::nullopt;
  StreamIndex r = -1;
  for (StreamIndex step = 0; step <= i; ++step) {
    StreamIndex k = r + 1;
    while (k < static_cast<StreamIndex>(y.size()) && !truth(y.at(k))) ++k;
    if (k >= static_cast<StreamIndex>(y.size())) return std::nullopt;
    r = k;
  }
  return r;
}

std::vector<StreamIndex> ranks(const BoundedStream& y) {
  std::vector<StreamIndex> out;
  for (StreamIndex i = 0;; ++i) {
    auto r = rank(i, y);
    if (!r) break;
    out.push_back(*r);
  }
  return out;
}

BoundedStream suffix(const BoundedStream& x, StreamIndex i) {
  const auto& e = x.elements();
  if (i >= static_cast<StreamIndex>(e.size())) return {};
  return BoundedStream(std::vector<Value>(e.begin() + i, e.end()));
}

Implementations Implementations::reference() {
  Implementations impl;
  impl.pipelined = [](StreamOp op, const BoundedStream& x,
                      const BoundedStream& y) {
    return pipelined::apply(op, x, y);
  };
  impl.indexed = [](StreamOp op, const IndexedStream& x,
                    const IndexedStream& y) {
    return op_arity(op) == 1 ? indexed::apply(op, x) : indexed::apply(op, x, y);
  };
  return impl;
}

Implementations Implementations::with_fault(StreamOp op) {
  Implementations impl = reference();
  auto good = impl.indexed;
  impl.indexed = [good, op](StreamOp o, const IndexedStream& x,
                            const IndexedStream& y) {
    IndexedStream r = good(o, x, y);
    if (o != op) return r;
    return IndexedStream([r](StreamIndex i) {
      Value v = r.at(i);
      if (i != 1) return v;
      if (v.is_int()) return Value(v.as_int() + 1);
      if (v.is_bool()) return Value(!v.as_bool());
      return v;
    });
  };
  return impl;
}

std::vector<Value> Implementations::run_pipelined(
    StreamOp op, const BoundedStream& x, const BoundedStream& y) const {
  return defined_values(pipelined(op, x, y));
}

std::vector<Value> Implementations::run_indexed(StreamOp op,
                                                const BoundedStream& x,
                                                const BoundedStream& y) const {
  return defined_values(indexed(op, IndexedStream(x), IndexedStream(y)));
}

bool Report::passed() const { return failures() == 0; }

int Report::failures() const {
  int n = 0;
  for (const auto& r : results) n += r.passed() ? 0 : 1;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.suite << '/' << r.name
        << "  cases=" << r.cases << "  failures=" << r.failures;
    if (!r.counterexample.empty()) out << "  counterexample: " << r.counterexample;
    if (!r.note.empty()) out << "  note: " << r.note;
    out << '\n';
  }
  return out.str();
}

void Report::append(const Report& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

namespace {

struct Case {
  BoundedStream x;
  BoundedStream y;
};

using Failure = std::optional<std::string>;

std::string show(const std::vector<Value>& v) {
  return to_string(BoundedStream(v));
}

BoundedStream prefix(const BoundedStream& s, std::size_t k) {
  const auto& e = s.elements();
  if (k >= e.size()) return s;
  return BoundedStream(std::vector<Value>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k)));
}

Failure mismatch(const std::string& what, const std::vector<Value>& got,
                 const std::vector<Value>& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + show(got) + ", expected " + show(want);
}

Failure mismatch(const std::string& what, const BoundedStream& got,
                 const BoundedStream& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + to_string(got) + ", expected " + to_string(want);
}

Failure mismatch(const std::string& what, const Value& got, const Value& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + to_string(got) + ", expected " + to_string(want);
}

template <class Check>
Failure guarded(const Check& check, const Case& c) {
  try {
    return check(c);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view name) {
  return seed ^ (std::hash<std::string_view>{}(name) * 0x9e3779b97f4a7c15ULL);
}

// Runs `check` over `cases` generated inputs and shrinks the first failure
// by truncating both streams to the shortest failing prefix.
template <class Gen, class Check>
PropertyResult property(const Config& cfg, std::string suite, std::string name,
                        Gen gen, Check check) {
  PropertyResult res;
  res.suite = std::move(suite);
  res.name = std::move(name);
  StreamGen g(mix_seed(cfg.seed, res.suite + "/" + res.name), cfg.max_len);
  for (int i = 0; i < cfg.cases; ++i) {
    Case c = gen(g);
    ++res.cases;
    Failure f = guarded(check, c);
    if (!f) continue;
    ++res.failures;
    if (res.failures > 1) continue;
    std::size_t n = std::max(c.x.size(), c.y.size());
    for (std::size_t k = 0; k < n; ++k) {
      Case p{prefix(c.x, k), prefix(c.y, k)};
      if (Failure pf = guarded(check, p)) {
        c = p;
        f = pf;
        break;
      }
    }
    res.counterexample =
        "X=" + to_string(c.x) + " Y=" + to_string(c.y) + " " + *f;
  }
  return res;
}

auto ints_and_ints() {
  return [](StreamGen& g) {
    int n = g.length();
    BoundedStream x = g.ints(n);
    return Case{x, g.ints(n)};
  };
}

auto ints_and_condition() {
  return [](StreamGen& g) {
    int n = g.length();
    BoundedStream x = g.ints(n);
    return Case{x, g.condition(n)};
  };
}

// Both implementations, as functions producing bounded streams.
struct Sides {
  const Implementations& impl;

  [[nodiscard]] BoundedStream p(StreamOp op, const BoundedStream& x,
                                const BoundedStream& y = {}) const {
    return impl.pipelined(op, x, y);
  }
  [[nodiscard]] BoundedStream i(StreamOp op, const BoundedStream& x,
                                const BoundedStream& y = {}) const {
    return materialize(impl.indexed(op, IndexedStream(x), IndexedStream(y)));
  }
  template <class F>
  Failure both(const F& f) const {
    if (Failure r = f([this](StreamOp op, const BoundedStream& x,
                             const BoundedStream& y = {}) { return p(op, x, y); },
                      "pipelined"))
      return r;
    return f([this](StreamOp op, const BoundedStream& x,
                    const BoundedStream& y = {}) { return i(op, x, y); },
             "indexed");
  }
};

StreamIndex len(const BoundedStream& s) {
  return static_cast<StreamIndex>(s.size());
}

BoundedStream values(const BoundedStream& s) {
  return BoundedStream(defined_values(s));
}

BoundedStream negate_condition(const BoundedStream& y) {
  std::vector<Value> v;
  for (const auto& e : y.elements()) v.emplace_back(!truth(e));
  return BoundedStream(std::move(v));
}

}  // namespace

Report check_axioms(const Config& cfg) {
  Report rep;
  Sides s{cfg.impl};
  auto add = [&](std::string name, auto gen, auto check) {
    rep.results.push_back(property(cfg, "axioms", std::move(name), gen, check));
  };
  auto with_const = [](StreamGen& g) {
    int n = g.length();
    return Case{g.ints(n), BoundedStream{Value(g.integer())}};
  };

  add("4.1 [c]_i = c", with_const, [](const Case& c) -> Failure {
    Value k = c.y.at(0);
    IndexedStream s = indexed::constant(k);
    for (StreamIndex i = 0; i <= len(c.x); ++i)
      if (auto f = mismatch("[c]_" + std::to_string(i), s.at(i), k)) return f;
    return std::nullopt;
  });
  add("4.2 [X+c]_i = [X]_i+c", with_const, [](const Case& c) -> Failure {
    std::int64_t k = c.y.at(0).as_int();
    IndexedStream s = indexed::add(c.x, k);
    for (StreamIndex i = 0; i < len(c.x); ++i)
      if (auto f = mismatch("[X+c]_" + std::to_string(i), s.at(i),
                            Value(c.x.at(i).as_int() + k)))
        return f;
    return std::nullopt;
  });
  add("4.3 [first X]_i = [X]_0", ints_and_ints(), [&](const Case& c) {
    return s.both([&](auto op, const char* side) -> Failure {
      BoundedStream r = op(StreamOp::kFirst, c.x, {});
      for (StreamIndex i = 0; i < len(c.x); ++i)
        if (auto f = mismatch(std::string(side) + " [first X]_" + std::to_string(i),
                              r.at(i), c.x.at(0)))
          return f;
      return std::nullopt;
    });
  });
  add("4.4 [next X]_i = [X]_i+1", ints_and_ints(), [&](const Case& c) {
    return s.both([&](auto op, const char* side) -> Failure {
      BoundedStream r = op(StreamOp::kNext, c.x, {});
      for (StreamIndex i = 0; i <= len(c.x); ++i)
        if (auto f = mismatch(std::string(side) + " [next X]_" + std::to_string(i),
                              r.at(i), c.x.at(i + 1)))
          return f;
      return std::nullopt;
    });
  });
  add("4.5 [X fby Y]_0 = [X]_0", ints_and_ints(), [&](const Case& c) {
    return s.both([&](auto op, const char* side) -> Failure {
      if (c.x.empty()) return std::nullopt;
      return mismatch(std::string(side) + " [X fby Y]_0",
                      op(StreamOp::kFby, c.x, c.y).at(0), c.x.at(0));
    });
  });
  add("4.6 [X fby Y]_i+1 = [Y]_i", ints_and_ints(), [&](const Case& c) {
    return s.both([&](auto op, const char* side) -> Failure {
      if (c.x.empty()) return std::nullopt;
      BoundedStream r = op(StreamOp::kFby, c.x, c.y);
      for (StreamIndex i = 0; i <= len(c.y); ++i)
        if (auto f = mismatch(std::string(side) + " [X fby Y]_" + std::to_string(i + 1),
                              r.at(i + 1), c.y.at(i)))
          return f;
      return std::nullopt;
    });
  });
  add("4.7 if true then [X]_i else [Y]_i = [X]_i", ints_and_ints(),
      [](const Case& c) -> Failure {
        IndexedStream r =
            indexed::if_then_else(indexed::constant(Value(true)), c.x, c.y);
        for (StreamIndex i = 0; i <= len(c.x); ++i)
          if (auto f = mismatch("index " + std::to_string(i), r.at(i), c.x.at(i)))
            return f;
        return std::nullopt;
      });
  add("4.8 if false then [X]_i else [Y]_i = [Y]_i", ints_and_ints(),
      [](const Case& c) -> Failure {
        IndexedStream r =
            indexed::if_then_else(indexed::constant(Value(false)), c.x, c.y);
        for (StreamIndex i = 0; i <= len(c.y); ++i)
          if (auto f = mismatch("index " + std::to_string(i), r.at(i), c.y.at(i)))
            return f;
        return std::nullopt;
      });
  add("4.9 [if C then X else Y]_i", [](StreamGen& g) {
        int n = g.length();
        // X carries the condition in its second half to keep one case type.
        BoundedStream x = g.ints(n);
        BoundedStream y = g.ints(n);
        BoundedStream cond = g.condition(n);
        std::vector<Value> packed = y.elements();
        packed.insert(packed.end(), cond.elements().begin(), cond.elements().end());
        return Case{x, BoundedStream(std::move(packed))};
      },
      [](const Case& c) -> Failure {
        auto n = static_cast<std::ptrdiff_t>(c.x.size());
        if (static_cast<std::ptrdiff_t>(c.y.size()) < 2 * n) return std::nullopt;
        const auto& e = c.y.elements();
        BoundedStream y(std::vector<Value>(e.begin(), e.begin() + n));
        BoundedStream cond(std::vector<Value>(e.begin() + n, e.begin() + 2 * n));
        IndexedStream r = indexed::if_then_else(cond, c.x, y);
        for (StreamIndex i = 0; i < n; ++i) {
          Value want = truth(cond.at(i)) ? c.x.at(i) : y.at(i);
          if (auto f = mismatch("index " + std::to_string(i), r.at(i), want))
            return f;
        }
        return std::nullopt;
      });

  add("5.1 X^0 = X", ints_and_ints(), [](const Case& c) {
    return mismatch("X^0", suffix(c.x, 0), c.x);
  });
  add("5.2 [X^i]_0 = [X]_i", ints_and_ints(), [](const Case& c) -> Failure {
    for (StreamIndex i = 0; i < len(c.x); ++i)
      if (auto f = mismatch("[X^" + std::to_string(i) + "]_0", suffix(c.x, i).at(0),
                            c.x.at(i)))
        return f;
    return std::nullopt;
  });
  add("5.3 first X^i = [X]_i", ints_and_ints(), [&](const Case& c) {
    return s.both([&](auto op, const char* side) -> Failure {
      for (StreamIndex i = 0; i < len(c.x); ++i) {
        std::vector<Value> want(static_cast<std::size_t>(len(c.x) - i), c.x.at(i));
        if (auto f = mismatch(std::string(side) + " first X^" + std::to_string(i),
                              op(StreamOp::kFirst, suffix(c.x, i), {}),
                              BoundedStream(want)))
          return f;
      }
      return std::nullopt;
    });
  });
  add("5.4 next X^i = X^i+1", ints_and_ints(), [&](const Case& c) {
    return s.both([&](auto op, const char* side) -> Failure {
      for (StreamIndex i = 0; i < len(c.x); ++i)
        if (auto f = mismatch(std::string(side) + " next X^" + std::to_string(i),
                              op(StreamOp::kNext, suffix(c.x, i), {}),
                              suffix(c.x, i + 1)))
          return f;
      return std::nullopt;
    });
  });
  add("5.5 next (X fby Y) = Y", ints_and_ints(), [&](const Case& c) {
    return s.both([&](auto op, const char* side) -> Failure {
      if (c.x.empty()) return std::nullopt;
      return mismatch(std::string(side),
                      op(StreamOp::kNext, op(StreamOp::kFby, c.x, c.y), {}), c.y);
    });
  });
  add("5.6 (first X) fby Y = X fby Y", ints_and_ints(), [&](const Case& c) {
    return s.both([&](auto op, const char* side) -> Failure {
      return mismatch(std::string(side),
                      op(StreamOp::kFby, op(StreamOp::kFirst, c.x, {}), c.y),
                      op(StreamOp::kFby, c.x, c.y));
    });
  });
  add("5.7 if true then X else Y = X", ints_and_ints(), [](const Case& c) {
    return mismatch("stream",
                    materialize(indexed::if_then_else(
                        indexed::constant(Value(true)), c.x, c.y)),
                    c.x);
  });
  add("5.8 if false then X else Y = Y", ints_and_ints(), [](const Case& c) {
    return mismatch("stream",
                    materialize(indexed::if_then_else(
                        indexed::constant(Value(false)), c.x, c.y)),
                    c.y);
  });
  return rep;
}

Report check_propositions(const Config& cfg) {
  Report rep;
  const Implementations& impl = cfg.impl;
  auto agree = [&](StreamOp op) {
    return [&impl, op](const Case& c) {
      return mismatch(std::string(op_name(op)), impl.run_indexed(op, c.x, c.y),
                      impl.run_pipelined(op, c.x, c.y));
    };
  };
  auto gen_for = [](StreamOp op) -> std::function<Case(StreamGen&)> {
    if (op_takes_condition(op) || op == StreamOp::kAnd || op == StreamOp::kOr ||
        op == StreamOp::kXor)
      return ints_and_condition();
    return ints_and_ints();
  };
  for (StreamOp op : {StreamOp::kFirst, StreamOp::kNext, StreamOp::kFby,
                      StreamOp::kWvr, StreamOp::kAsa, StreamOp::kUpon})
    rep.results.push_back(property(cfg, "propositions",
                                   std::string(op_name(op)) + " agrees",
                                   gen_for(op), agree(op)));
  for (StreamOp op : kAllStreamOps)
    rep.results.push_back(property(cfg, "propositions",
                                   "extended " + std::string(op_name(op)),
                                   gen_for(op), agree(op)));
  return rep;
}

Report check_prophash(const Config& cfg) {
  Report rep;
  rep.results.push_back(property(
      cfg, "prophash", "[#]_i = i",
      [](StreamGen& g) { return Case{BoundedStream{Value(g.integer(0, 1 << 20))}, {}}; },
      [](const Case& c) -> Failure {
        for (StreamIndex i = 0; i < 64; ++i)
          if (auto f = mismatch("hash(" + std::to_string(i) + ")", indexed::hash(i),
                                Value(i)))
            return f;
        StreamIndex k = c.x.at(0).as_int();
        return mismatch("# at " + std::to_string(k), indexed::hash_stream().at(k),
                        Value(k));
      }));
  rep.results.push_back(property(
      cfg, "prophash", "[X @ Y]_i = [X]_[Y]_i",
      [](StreamGen& g) {
        int n = std::max(1, g.length());
        BoundedStream x = g.ints(n);
        return Case{x, g.indices(g.length(), n)};
      },
      [](const Case& c) -> Failure {
        if (c.x.empty()) return std::nullopt;
        IndexedStream r = indexed::at(c.x, c.y);
        for (StreamIndex i = 0; i < len(c.y); ++i) {
          Value want = c.x.at(c.y.at(i).as_int());
          if (auto f = mismatch("at_op index " + std::to_string(i),
                                indexed::at_op(c.x, c.y, i), want))
            return f;
          if (auto f = mismatch("@ index " + std::to_string(i), r.at(i), want))
            return f;
        }
        return std::nullopt;
      }));
  return rep;
}

Report check_lemmas(const Config& cfg) {
  Report rep;
  Sides s{cfg.impl};
  auto add = [&](std::string name, auto check) {
    rep.results.push_back(
        property(cfg, "lemmas", std::move(name), ints_and_condition(), check));
  };

  add("wvr[i] = X[rank(i,Y)]", [&](const Case& c) {
    std::vector<Value> want;
    for (StreamIndex r : ranks(c.y)) want.push_back(c.x.at(r));
    return s.both([&](auto op, const char* side) {
      return mismatch(side, defined_values(op(StreamOp::kWvr, c.x, c.y)), want);
    });
  });
  add("T[i] = rank(i,Y)", [](const Case& c) -> Failure {
    auto idx = indexed::whenever_index(c.y, false, false);
    std::vector<StreamIndex> rs = ranks(c.y);
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (auto f = mismatch("T[" + std::to_string(i) + "]",
                            idx.t.at(static_cast<StreamIndex>(i)), Value(rs[i])))
        return f;
    Value past = idx.t.at(static_cast<StreamIndex>(rs.size()));
    if (!past.is_eod())
      return "T past the last rank should be eod, got " + to_string(past);
    return std::nullopt;
  });
  add("U[j] = rank(i+1,Y) on (rank(i,Y), rank(i+1,Y)]", [](const Case& c) -> Failure {
    auto idx = indexed::whenever_index(c.y, false, false);
    StreamIndex prev = -1;
    for (StreamIndex r : ranks(c.y)) {
      for (StreamIndex j = prev + 1; j <= r; ++j)
        if (auto f = mismatch("U[" + std::to_string(j) + "]", idx.u.at(j), Value(r)))
          return f;
      prev = r;
    }
    return std::nullopt;
  });
  add("X^j wvr Y^j constant on each rank gap", [&](const Case& c) {
    return s.both([&](auto op, const char* side) -> Failure {
      StreamIndex prev = -1;
      for (StreamIndex r : ranks(c.y)) {
        BoundedStream want = op(StreamOp::kWvr, suffix(c.x, r), suffix(c.y, r));
        for (StreamIndex j = prev + 1; j < r; ++j)
          if (auto f = mismatch(std::string(side) + " j=" + std::to_string(j),
                                values(op(StreamOp::kWvr, suffix(c.x, j),
                                          suffix(c.y, j))),
                                values(want)))
            return f;
        prev = r;
      }
      return std::nullopt;
    });
  });
  add("(X wvr Y)^i = X^r_i wvr Y^r_i", [&](const Case& c) {
    return s.both([&](auto op, const char* side) -> Failure {
      BoundedStream whole = values(op(StreamOp::kWvr, c.x, c.y));
      std::vector<StreamIndex> rs = ranks(c.y);
      for (std::size_t i = 0; i < rs.size(); ++i)
        if (auto f = mismatch(
                std::string(side) + " i=" + std::to_string(i),
                suffix(whole, static_cast<StreamIndex>(i)),
                values(op(StreamOp::kWvr, suffix(c.x, rs[i]), suffix(c.y, rs[i])))))
          return f;
      return std::nullopt;
    });
  });
  // W by its recurrence: W_0 = 0, W_k+1 = W_k + (Y_k ? 1 : 0).
  auto w_oracle = [](const BoundedStream& y) {
    std::vector<StreamIndex> w{0};
    for (const auto& e : y.elements()) w.push_back(w.back() + (truth(e) ? 1 : 0));
    return w;
  };
  add("W recurrence and upon[i] = X[W[i]]", [&](const Case& c) -> Failure {
    std::vector<StreamIndex> w = w_oracle(c.y);
    IndexedStream idx = indexed::upon_index(c.y, false, false);
    for (StreamIndex k = 0; k < len(c.y); ++k)
      if (auto f = mismatch("W[" + std::to_string(k) + "]", idx.at(k),
                            Value(w[static_cast<std::size_t>(k)])))
        return f;
    std::vector<Value> want;
    for (StreamIndex k = 0; k < len(c.y); ++k)
      want.push_back(c.x.at(w[static_cast<std::size_t>(k)]));
    // The slot past the last condition exists only when it did not advance.
    if (!c.y.empty() && !truth(c.y.at(len(c.y) - 1)))
      want.push_back(c.x.at(w.back()));
    return s.both([&](auto op, const char* side) {
      return mismatch(side, defined_values(op(StreamOp::kUpon, c.x, c.y)), want);
    });
  });
  add("(X upon Y)^i = X^W_i upon Y^i", [&](const Case& c) {
    std::vector<StreamIndex> w = w_oracle(c.y);
    return s.both([&](auto op, const char* side) -> Failure {
      BoundedStream whole = values(op(StreamOp::kUpon, c.x, c.y));
      for (StreamIndex i = 0; i < len(whole); ++i)
        if (auto f = mismatch(
                std::string(side) + " i=" + std::to_string(i), suffix(whole, i),
                values(op(StreamOp::kUpon,
                          suffix(c.x, w[static_cast<std::size_t>(i)]),
                          suffix(c.y, i)))))
          return f;
      return std::nullopt;
    });
  });
  return rep;
}

Report check_dualities(const Config& cfg) {
  Report rep;
  Sides s{cfg.impl};
  auto add = [&](std::string name, StreamOp lhs, auto rhs) {
    rep.results.push_back(property(
        cfg, "dualities", std::move(name), ints_and_condition(),
        [&s, lhs, rhs](const Case& c) {
          return s.both([&](auto op, const char* side) {
            return mismatch(side, values(op(lhs, c.x, c.y)), rhs(op, c));
          });
        }));
  };
  auto rev = [](const BoundedStream& b) { return reverse(values(b)); };
  add("rwvr = reverse . wvr", StreamOp::kRwvr, [rev](auto op, const Case& c) {
    return rev(op(StreamOp::kWvr, c.x, c.y));
  });
  add("nrwvr = reverse . nwvr", StreamOp::kNrwvr, [rev](auto op, const Case& c) {
    return rev(op(StreamOp::kNwvr, c.x, c.y));
  });
  add("rupon X Y = upon (reverse X) (reverse Y)", StreamOp::kRupon,
      [](auto op, const Case& c) {
        return values(op(StreamOp::kUpon, reverse(c.x), reverse(c.y)));
      });
  add("nrupon X Y = nupon (reverse X) (reverse Y)", StreamOp::kNrupon,
      [](auto op, const Case& c) {
        return values(op(StreamOp::kNupon, reverse(c.x), reverse(c.y)));
      });
  const std::pair<StreamOp, StreamOp> negated[] = {
      {StreamOp::kNwvr, StreamOp::kWvr},     {StreamOp::kNrwvr, StreamOp::kRwvr},
      {StreamOp::kNasa, StreamOp::kAsa},     {StreamOp::kNala, StreamOp::kAla},
      {StreamOp::kNupon, StreamOp::kUpon},   {StreamOp::kNrupon, StreamOp::kRupon},
  };
  for (auto [n, base] : negated)
    add(std::string(op_name(n)) + " X Y = " + std::string(op_name(base)) +
            " X (not Y)",
        n, [base](auto op, const Case& c) {
          return values(op(base, c.x, negate_condition(c.y)));
        });

  // The reversal identities also have to land on the golden rows.
  PropertyResult golden;
  golden.suite = "dualities";
  golden.name = "reverse identities on the golden rows";
  for (const auto& row : golden_rows()) {
    if (row.op != StreamOp::kRupon && row.op != StreamOp::kNrupon) continue;
    StreamOp fwd = row.op == StreamOp::kRupon ? StreamOp::kUpon : StreamOp::kNupon;
    Failure f = s.both([&](auto op, const char* side) {
      return mismatch(std::string(side) + " " + row.label,
                      defined_values(op(fwd, reverse(table_x()), reverse(table_y()))),
                      row.expected);
    });
    ++golden.cases;
    if (f) {
      ++golden.failures;
      if (golden.counterexample.empty()) golden.counterexample = *f;
    }
  }
  rep.results.push_back(golden);
  return rep;
}

BoundedStream table_x() { return iota_stream(1, 10); }

BoundedStream table_y() {
  return BoundedStream{true, false, false, true, false,
                       false, true, true, false, true};
}

std::vector<GoldenRow> golden_rows() {
  auto ints = [](std::initializer_list<std::int64_t> v) {
    std::vector<Value> out;
    for (auto i : v) out.emplace_back(i);
    return out;
  };
  auto rep = [](std::int64_t v) { return std::vector<Value>(10, Value(v)); };
  const bool T = true;
  const bool F = false;
  std::vector<GoldenRow> rows = {
      {"X first Y", StreamOp::kFirst, false, rep(1), {}},
      {"X last Y", StreamOp::kLast, false, rep(10), {}},
      {"X next Y", StreamOp::kNext, false, ints({2, 3, 4, 5, 6, 7, 8, 9, 10}), {}},
      {"X prev Y", StreamOp::kPrev, false, ints({1, 2, 3, 4, 5, 6, 7, 8, 9}), {}},
      {"X fby Y", StreamOp::kFby, false,
       {Value(1), T, F, F, T, F, F, T, T, F, T}, {}},
      {"X pby Y", StreamOp::kPby, false,
       {T, F, F, T, F, F, T, T, F, T, Value(1)}, {}},
      {"X wvr Y", StreamOp::kWvr, false, ints({1, 4, 7, 8, 10}), {}},
      {"X rwvr Y", StreamOp::kRwvr, false, ints({10, 8, 7, 4, 1}), {}},
      {"X nwvr Y", StreamOp::kNwvr, false, ints({2, 3, 5, 6, 9}), {}},
      {"X nrwvr Y", StreamOp::kNrwvr, false, ints({9, 6, 5, 3, 2}), {}},
      {"X asa Y", StreamOp::kAsa, false, rep(1), {}},
      {"X nasa Y", StreamOp::kNasa, false, rep(2), {}},
      {"X ala Y", StreamOp::kAla, false, rep(10), {}},
      {"X nala Y", StreamOp::kNala, false, rep(9), {}},
      {"X upon Y", StreamOp::kUpon, false, ints({1, 2, 2, 2, 3, 3, 3, 4, 5, 5}), {}},
      {"X rupon Y", StreamOp::kRupon, false,
       ints({10, 9, 9, 8, 7, 7, 7, 6, 6, 6}), {}},
      {"X nupon Y", StreamOp::kNupon, false,
       ints({1, 1, 2, 3, 3, 4, 5, 5, 5, 6, 6}), {}},
      {"X nrupon Y", StreamOp::kNrupon, false,
       ints({10, 10, 9, 9, 9, 8, 7, 7, 6, 5, 5}), {}},
      {"neg X", StreamOp::kNeg, false,
       ints({-1, -2, -3, -4, -5, -6, -7, -8, -9, -10}), {}},
      {"not Y", StreamOp::kNot, true, {F, T, T, F, T, T, F, F, T, F}, {}},
      {"X and Y", StreamOp::kAnd, false, ints({1, 0, 0, 1, 0, 0, 1, 1, 0, 1}), {}},
      {"X or Y", StreamOp::kOr, false, ints({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
       ints({1, 2, 3, 5, 5, 6, 7, 9, 9, 11})},
      {"X xor Y", StreamOp::kXor, false, ints({0, 1, 1, 0, 1, 1, 0, 0, 1, 0}),
       ints({0, 2, 3, 5, 5, 6, 6, 9, 9, 11})},
  };
  return rows;
}

Report check_table1(const Config& cfg) {
  Report rep;
  Sides s{cfg.impl};
  for (const auto& row : golden_rows()) {
    PropertyResult r;
    r.suite = "table1";
    r.name = row.label;
    r.cases = 1;
    BoundedStream x = row.on_y ? table_y() : table_x();
    BoundedStream y = row.on_y ? BoundedStream{} : table_y();
    Failure f = s.both([&](auto op, const char* side) {
      return mismatch(side, defined_values(op(row.op, x, y)), row.expected);
    });
    if (f) {
      r.failures = 1;
      r.counterexample = *f;
    }
    if (row.printed)
      r.note = "printed row " + show(*row.printed) +
               " matches bitwise integer semantics; checked against logical values";
    rep.results.push_back(std::move(r));
  }
  return rep;
}

Report run(const Config& cfg, std::string_view only) {
  using Suite = Report (*)(const Config&);
  const std::pair<std::string_view, Suite> suites[] = {
      {"axioms", check_axioms},   {"propositions", check_propositions},
      {"prophash", check_prophash}, {"lemmas", check_lemmas},
      {"dualities", check_dualities}, {"table1", check_table1},
  };
  Report rep;
  bool found = false;
  for (auto [name, fn] : suites) {
    if (!only.empty() && only != name) continue;
    found = true;
    rep.append(fn(cfg));
  }
  if (!found) throw std::invalid_argument("unknown suite: " + std::string(only));
  return rep;
}

}  // namespace flucid::harness
