// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_VALUE_HPP_
#define FLUCID_VALUE_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "flucid/context.hpp"

namespace flucid {

struct Bod {
  friend bool operator==(Bod, Bod) { return true; }
};
struct Eod {
  friend bool operator==(Eod, Eod) { return true; }
};

class Value;

/// A finite ordered list of values. Never contains bod/eod.
struct Seq {
  std::vector<Value> items;
  friend bool operator==(const Seq&, const Seq&);
};

/// A single datum flowing through a stream.
///
/// Booleans and integers are distinct kinds; truth coercion happens only in
/// logical operators and conditions (see truth()).
class Value {
 public:
  using Storage = std::variant<std::int64_t, bool, Context, Seq, Bod, Eod>;

  Value() : v_(Eod{}) {}
  Value(std::int64_t i) : v_(i) {}  // NOLINT(google-explicit-constructor)
  Value(int i) : v_(std::int64_t{i}) {}  // NOLINT
  Value(bool b) : v_(b) {}  // NOLINT
  Value(Context c) : v_(std::move(c)) {}  // NOLINT
  Value(Seq s);  // NOLINT
  Value(Bod b) : v_(b) {}  // NOLINT
  Value(Eod e) : v_(e) {}  // NOLINT

  static Value bod() { return Value(Bod{}); }
  static Value eod() { return Value(Eod{}); }

  [[nodiscard]] bool is_int() const {
    return std::holds_alternative<std::int64_t>(v_);
  }
  [[nodiscard]] bool is_bool() const { return std::holds_alternative<bool>(v_); }
  [[nodiscard]] bool is_context() const {
    return std::holds_alternative<Context>(v_);
  }
  [[nodiscard]] bool is_seq() const { return std::holds_alternative<Seq>(v_); }
  [[nodiscard]] bool is_bod() const { return std::holds_alternative<Bod>(v_); }
  [[nodiscard]] bool is_eod() const { return std::holds_alternative<Eod>(v_); }
  [[nodiscard]] bool is_marker() const { return is_bod() || is_eod(); }

  [[nodiscard]] std::int64_t as_int() const;
  [[nodiscard]] bool as_bool() const;
  [[nodiscard]] const Context& as_context() const;
  [[nodiscard]] const Seq& as_seq() const;

  /// Name of the value's kind, for diagnostics.
  [[nodiscard]] const char* kind_name() const;

  [[nodiscard]] const Storage& storage() const { return v_; }

  friend bool operator==(const Value&, const Value&) = default;

 private:
  Storage v_;
};

bool is_eod(const Value& v);
bool is_bod(const Value& v);

/// Truth of a boolean or integer (nonzero is true). Throws TypeError otherwise.
bool truth(const Value& v);
/// True for values `truth` accepts.
bool truth_coercible(const Value& v);

/// Literal rendering: ints in decimal, booleans `T`/`F`, markers `bod`/`eod`,
/// contexts `[d:1, e:2]`, sequences `(a b c)`.
std::string to_string(const Value& v);

}  // namespace flucid

#endif  // FLUCID_VALUE_HPP_
