// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLUCID_ENVIRONMENT_HPP_
#define FLUCID_ENVIRONMENT_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flucid/ast.hpp"
#include "flucid/value.hpp"

namespace flucid {

enum class EntryKind { kDim, kConst, kOp, kVar, kFunc };

/// Host-level operators reachable by name from programs.
enum class Builtin { kRun, kUnion, kIntersection, kCombine, kProduct };

std::string_view builtin_name(Builtin b);
std::string_view entry_kind_name(EntryKind k);

struct EnvEntry {
  EntryKind kind = EntryKind::kDim;
  Value constant;           // kConst
  Builtin builtin{};        // kOp
  QDefPtr def;              // kVar, kFunc

  static EnvEntry dim() { return {}; }
  static EnvEntry constant_entry(Value v);
  static EnvEntry op(Builtin b);
  static EnvEntry var(QDefPtr def);
  static EnvEntry func(QDefPtr def);
};

/// The definition environment: identifier -> entry. Persistent; extending
/// returns a new environment that shares its parent.
class DefEnv {
 public:
  DefEnv() = default;

  /// `d` as a dimension, `bod`/`eod` as constants and the builtins.
  static DefEnv base();

  [[nodiscard]] DefEnv extend(
      std::vector<std::pair<std::string, EnvEntry>> entries) const;

  /// Innermost entry for `name`, or null.
  [[nodiscard]] const EnvEntry* lookup(const std::string& name) const;

  /// Flat name of a dimension expression (`d`, `evidence.time`). Throws
  /// UnboundDimension when no such dimension is declared and TypeError when
  /// the name is bound to something other than a dimension.
  [[nodiscard]] std::string resolve_dimension(const Expr& e) const;

  /// Names visible in this environment, innermost binding only.
  [[nodiscard]] std::map<std::string, EntryKind> visible() const;

 private:
  struct Frame {
    std::map<std::string, EnvEntry> entries;
    std::shared_ptr<const Frame> parent;
  };
  explicit DefEnv(std::shared_ptr<const Frame> top) : top_(std::move(top)) {}

  std::shared_ptr<const Frame> top_;
};

}  // namespace flucid

#endif  // FLUCID_ENVIRONMENT_HPP_
