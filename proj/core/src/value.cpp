// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/value.hpp"

#include <string>

#include "flucid/error.hpp"

namespace flucid {

bool operator==(const Seq& a, const Seq& b) { return a.items == b.items; }

Value::Value(Seq s) : v_(std::move(s)) {
  for (const Value& item : std::get<Seq>(v_).items) {
    if (item.is_marker()) {
      throw TypeError("a run cannot contain bod/eod");
    }
  }
}

std::int64_t Value::as_int() const {
  if (const auto* i = std::get_if<std::int64_t>(&v_)) return *i;
  throw TypeError(std::string("expected an integer, got ") + kind_name());
}

bool Value::as_bool() const {
  if (const auto* b = std::get_if<bool>(&v_)) return *b;
  throw TypeError(std::string("expected a boolean, got ") + kind_name());
}

const Context& Value::as_context() const {
  if (const auto* c = std::get_if<Context>(&v_)) return *c;
  throw TypeError(std::string("expected a context, got ") + kind_name());
}

const Seq& Value::as_seq() const {
  if (const auto* s = std::get_if<Seq>(&v_)) return *s;
  throw TypeError(std::string("expected a run, got ") + kind_name());
}

const char* Value::kind_name() const {
  switch (v_.index()) {
    case 0: return "integer";
    case 1: return "boolean";
    case 2: return "context";
    case 3: return "run";
    case 4: return "bod";
    default: return "eod";
  }
}

bool is_eod(const Value& v) { return v.is_eod(); }
bool is_bod(const Value& v) { return v.is_bod(); }

bool truth_coercible(const Value& v) { return v.is_int() || v.is_bool(); }

bool truth(const Value& v) {
  if (v.is_bool()) return v.as_bool();
  if (v.is_int()) return v.as_int() != 0;
  throw TypeError(std::string("expected a truth value, got ") + v.kind_name());
}

std::string to_string(const Value& v) {
  struct Printer {
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "T" : "F"; }
    std::string operator()(const Context& c) const { return c.to_string(); }
    std::string operator()(const Seq& s) const {
      std::string out = "(";
      for (std::size_t k = 0; k < s.items.size(); ++k) {
        if (k > 0) out += ' ';
        out += to_string(s.items[k]);
      }
      return out + ")";
    }
    std::string operator()(Bod) const { return "bod"; }
    std::string operator()(Eod) const { return "eod"; }
  };
  return std::visit(Printer{}, v.storage());
}

}  // namespace flucid
