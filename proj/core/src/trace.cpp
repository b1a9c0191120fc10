// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/trace.hpp"

#include <sstream>

#include <json.hpp>

namespace flucid {

std::string Trace::to_text() const {
  std::ostringstream out;
  for (const auto& r : records_) {
    out << std::string(static_cast<std::size_t>(r.depth) * 2, ' ') << r.rule
        << " | " << r.expr << " | " << r.context.to_string() << " | "
        << r.value;
    if (r.cache_hit) out << " (cached)";
    out << "\n";
  }
  return out.str();
}

std::string Trace::to_json(int indent) const {
  using nlohmann::json;
  // pending[k] holds finished nodes at depth k still waiting for a parent.
  std::vector<json> pending;
  for (const auto& r : records_) {
    const auto depth = static_cast<std::size_t>(r.depth);
    if (pending.size() < depth + 2) pending.resize(depth + 2, json::array());
    json ctx = json::object();
    for (const auto& [dim, tag] : r.context.bindings()) ctx[dim] = tag;
    json node = {{"rule", r.rule},
                 {"expr", r.expr},
                 {"context", ctx},
                 {"value", r.value},
                 {"cached", r.cache_hit},
                 {"premises", std::move(pending[depth + 1])}};
    pending[depth + 1] = json::array();
    pending[depth].push_back(std::move(node));
  }
  json roots = pending.empty() ? json::array() : std::move(pending[0]);
  return roots.dump(indent);
}

}  // namespace flucid
