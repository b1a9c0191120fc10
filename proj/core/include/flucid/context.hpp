// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_CONTEXT_HPP_
#define FLUCID_CONTEXT_HPP_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flucid {

using Tag = std::int64_t;

/// Raised when a dimension is queried that the context does not bind.
class UnboundDimension : public std::runtime_error {
 public:
  explicit UnboundDimension(std::string dimension);
  [[nodiscard]] const std::string& dimension() const { return dimension_; }

 private:
  std::string dimension_;
};

/// An evaluation point: a partial map from dimension names to integer tags.
///
/// Compound (dot) dimensions such as `evidence.time` are stored under their
/// flat dotted name.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<std::pair<const std::string, Tag>> bindings)
      : bindings_(bindings) {}

  /// Tag of `dimension`; throws UnboundDimension if absent.
  [[nodiscard]] Tag query(const std::string& dimension) const;
  [[nodiscard]] std::optional<Tag> find(const std::string& dimension) const;
  [[nodiscard]] bool binds(const std::string& dimension) const {
    return bindings_.contains(dimension);
  }

  /// Right-biased union: bindings in `other` win.
  [[nodiscard]] Context override_with(const Context& other) const;
  /// Shorthand for `override_with({dimension: tag})`.
  [[nodiscard]] Context with(const std::string& dimension, Tag tag) const;

  [[nodiscard]] const std::map<std::string, Tag>& bindings() const {
    return bindings_;
  }
  [[nodiscard]] bool empty() const { return bindings_.empty(); }
  [[nodiscard]] std::size_t size() const { return bindings_.size(); }

  /// `[d:1, e:2]`, the context literal syntax.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Context&, const Context&) = default;
  friend auto operator<=>(const Context&, const Context&) = default;

 private:
  std::map<std::string, Tag> bindings_;
};

/// P † Q.
Context override(const Context& base, const Context& top);

/// Tag of `dimension` in `context`; throws UnboundDimension.
Tag query(const Context& context, const std::string& dimension);

/// Folds † over singleton contexts in order, starting from the empty context.
Context construct_context(
    const std::vector<std::pair<std::string, Tag>>& pairs);

/// An ordered collection of contexts (observation sequences, storyboards).
class ContextSet {
 public:
  ContextSet() = default;
  explicit ContextSet(std::vector<Context> contexts)
      : contexts_(std::move(contexts)) {}

  [[nodiscard]] const std::vector<Context>& contexts() const {
    return contexts_;
  }
  [[nodiscard]] std::size_t size() const { return contexts_.size(); }
  [[nodiscard]] bool empty() const { return contexts_.empty(); }
  [[nodiscard]] bool contains(const Context& c) const;

  friend bool operator==(const ContextSet&, const ContextSet&) = default;

 private:
  std::vector<Context> contexts_;
};

/// Order-preserving, de-duplicated union (left operand's order first).
ContextSet set_union(const ContextSet& a, const ContextSet& b);
/// Elements of `a` that also occur in `b`, in `a`'s order, de-duplicated.
ContextSet set_intersection(const ContextSet& a, const ContextSet& b);

/// One bracket group of a `{[...], ..., [...]}` literal, tags already known.
using ContextGroup = std::vector<std::pair<std::string, Tag>>;

/// Expands storyboard sugar into one context per bracket group.
/// Throws std::invalid_argument on an empty set.
ContextSet desugar_context_set(const std::vector<ContextGroup>& groups);

/// Flat name of the compound dimension `parent.child`.
std::string dot_dimension(const std::string& parent, const std::string& child);

}  // namespace flucid

#endif  // FLUCID_CONTEXT_HPP_
