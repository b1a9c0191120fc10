// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace flucid {

UnboundDimension::UnboundDimension(std::string dimension)
    : std::runtime_error("unbound dimension '" + dimension + "'"),
      dimension_(std::move(dimension)) {}

Tag Context::query(const std::string& dimension) const {
  auto it = bindings_.find(dimension);
  if (it == bindings_.end()) throw UnboundDimension(dimension);
  return it->second;
}

std::optional<Tag> Context::find(const std::string& dimension) const {
  auto it = bindings_.find(dimension);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

Context Context::override_with(const Context& other) const {
  Context out = *this;
  for (const auto& [dim, tag] : other.bindings_) out.bindings_[dim] = tag;
  return out;
}

Context Context::with(const std::string& dimension, Tag tag) const {
  Context out = *this;
  out.bindings_[dimension] = tag;
  return out;
}

std::string Context::to_string() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [dim, tag] : bindings_) {
    if (!first) out += ", ";
    first = false;
    out += dim + ":" + std::to_string(tag);
  }
  return out + "]";
}

Context override(const Context& base, const Context& top) {
  return base.override_with(top);
}

Tag query(const Context& context, const std::string& dimension) {
  return context.query(dimension);
}

Context construct_context(
    const std::vector<std::pair<std::string, Tag>>& pairs) {
  Context out;
  for (const auto& [dim, tag] : pairs) out = override(out, Context{{dim, tag}});
  return out;
}

bool ContextSet::contains(const Context& c) const {
  return std::find(contexts_.begin(), contexts_.end(), c) != contexts_.end();
}

ContextSet set_union(const ContextSet& a, const ContextSet& b) {
  std::vector<Context> out;
  for (const auto* src : {&a, &b}) {
    for (const Context& c : src->contexts()) {
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  }
  return ContextSet(std::move(out));
}

ContextSet set_intersection(const ContextSet& a, const ContextSet& b) {
  std::vector<Context> out;
  for (const Context& c : a.contexts()) {
    if (b.contains(c) && std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(c);
    }
  }
  return ContextSet(std::move(out));
}

ContextSet desugar_context_set(const std::vector<ContextGroup>& groups) {
  if (groups.empty()) {
    throw std::invalid_argument("a context set needs at least one group");
  }
  std::vector<Context> contexts;
  contexts.reserve(groups.size());
  for (const ContextGroup& g : groups) contexts.push_back(construct_context(g));
  return ContextSet(std::move(contexts));
}

std::string dot_dimension(const std::string& parent, const std::string& child) {
  return parent + "." + child;
}

}  // namespace flucid
