// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_HARNESS_HPP_
#define FLUCID_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "flucid/operators.hpp"
#include "flucid/ops_indexed.hpp"
#include "flucid/stream.hpp"

// Property suites cross-checking the pipelined and indexed operator
// implementations against each other and against hand-derived identities.
namespace flucid::harness {

/// Deterministic generator of finite test streams.
class StreamGen {
 public:
  explicit StreamGen(std::uint64_t seed, int max_len = 24, double bool_bias = 0.5)
      : rng_(seed), max_len_(max_len), bool_bias_(bool_bias) {}

  int length();
  std::int64_t integer(std::int64_t lo = -100, std::int64_t hi = 100);
  BoundedStream ints(int len);
  BoundedStream bools(int len);
  /// 20% all true, 20% all false, 60% random with the configured bias.
  BoundedStream condition(int len);
  /// Integers in [0, bound), for in-range `@` indices.
  BoundedStream indices(int len, std::int64_t bound);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int max_len_;
  double bool_bias_;
};

/// rank(i, Y): index of the (i+1)-th true element of Y; rank(-1, Y) = -1.
/// nullopt when Y has no such element.
std::optional<StreamIndex> rank(StreamIndex i, const BoundedStream& y);
/// rank(0, Y), rank(1, Y), ... while defined.
std::vector<StreamIndex> ranks(const BoundedStream& y);

/// Suffix X^i: the elements of X from index i on.
BoundedStream suffix(const BoundedStream& x, StreamIndex i);

/// The two operator implementations under test; replaceable so a faulty
/// build can be simulated.
struct Implementations {
  std::function<BoundedStream(StreamOp, const BoundedStream&,
                              const BoundedStream&)>
      pipelined;
  std::function<IndexedStream(StreamOp, const IndexedStream&,
                              const IndexedStream&)>
      indexed;

  static Implementations reference();
  /// Reference implementations, except that the indexed form of `op`
  /// corrupts its element at index 1.
  static Implementations with_fault(StreamOp op);

  [[nodiscard]] std::vector<Value> run_pipelined(StreamOp op,
                                                 const BoundedStream& x,
                                                 const BoundedStream& y) const;
  [[nodiscard]] std::vector<Value> run_indexed(StreamOp op,
                                               const BoundedStream& x,
                                               const BoundedStream& y) const;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string counterexample;
  /// Extra non-failing remarks (e.g. a printed row that was not used).
  std::string note;

  [[nodiscard]] bool passed() const { return failures == 0; }
};

struct Report {
  std::vector<PropertyResult> results;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] int failures() const;
  /// One line per property: status, suite/name, cases, failures and the
  /// first (shrunk) counterexample.
  [[nodiscard]] std::string to_text() const;
  void append(const Report& other);
};

struct Config {
  std::uint64_t seed = 20240601;
  int cases = 500;
  int max_len = 24;
  Implementations impl = Implementations::reference();
};

Report check_axioms(const Config& cfg);
Report check_propositions(const Config& cfg);
Report check_prophash(const Config& cfg);
Report check_lemmas(const Config& cfg);
Report check_dualities(const Config& cfg);
Report check_table1(const Config& cfg);

inline constexpr std::string_view kSuites[] = {
    "axioms", "propositions", "prophash", "lemmas", "dualities", "table1"};

/// Runs one suite by name, or all of them when `only` is empty. Throws
/// std::invalid_argument for an unknown suite name.
Report run(const Config& cfg, std::string_view only = {});

/// The fixture streams used by the golden table.
BoundedStream table_x();
BoundedStream table_y();

struct GoldenRow {
  std::string label;
  StreamOp op;
  bool on_y = false;  // unary operator applied to Y instead of X
  std::vector<Value> expected;
  /// The printed row when it differs from `expected`.
  std::optional<std::vector<Value>> printed;
};
std::vector<GoldenRow> golden_rows();

}  // namespace flucid::harness

#endif  // FLUCID_HARNESS_HPP_
