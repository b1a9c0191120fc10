// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/stream.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace flucid {

BoundedStream::BoundedStream(std::vector<Value> elements)
    : elements_(std::move(elements)) {
  for (const Value& v : elements_) {
    if (v.is_marker()) {
      throw std::invalid_argument("bod/eod cannot be a stream element");
    }
  }
}

BoundedStream::BoundedStream(std::initializer_list<Value> elements)
    : BoundedStream(std::vector<Value>(elements)) {}

Value BoundedStream::at(StreamIndex i) const {
  if (i < 0) return Value::bod();
  if (static_cast<std::size_t>(i) >= elements_.size()) return Value::eod();
  return elements_[static_cast<std::size_t>(i)];
}

Value at(const BoundedStream& s, StreamIndex i) { return s.at(i); }

BoundedStream reverse(const BoundedStream& s) {
  std::vector<Value> out(s.elements().rbegin(), s.elements().rend());
  return BoundedStream(std::move(out));
}

std::vector<Value> defined_values(const BoundedStream& s) {
  return s.elements();
}

std::string to_string(const BoundedStream& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) out += ' ';
    out += to_string(s.elements()[k]);
  }
  return out + "]";
}

namespace {

class LiteralReader {
 public:
  explicit LiteralReader(std::string_view text) : text_(text) {}

  BoundedStream read_stream() {
    skip_space();
    expect('[');
    std::vector<Value> items = read_items(']');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return BoundedStream(std::move(items));
  }

 private:
  std::vector<Value> read_items(char close) {
    std::vector<Value> items;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("unterminated literal");
      if (text_[pos_] == close) {
        ++pos_;
        return items;
      }
      items.push_back(read_value());
    }
  }

  Value read_value() {
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      return Value(Seq{read_items(')')});
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + pos_,
                                       text_.data() + text_.size(), v);
      if (ec != std::errc()) fail("bad integer");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      return Value(v);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string_view word = text_.substr(start, pos_ - start);
    if (word == "T" || word == "true") return Value(true);
    if (word == "F" || word == "false") return Value(false);
    if (word == "bod" || word == "eod") fail("markers are implicit");
    fail("unexpected token");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == ',')) {
      ++pos_;
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("stream literal: " + what + " at offset " +
                                std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BoundedStream parse_stream_literal(std::string_view text) {
  return LiteralReader(text).read_stream();
}

BoundedStream iota_stream(std::int64_t first, std::int64_t last) {
  std::vector<Value> out;
  for (std::int64_t v = first; v <= last; ++v) out.emplace_back(v);
  return BoundedStream(std::move(out));
}

}  // namespace flucid
