// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/environment.hpp"

#include "flucid/desugar.hpp"
#include "flucid/error.hpp"
#include "flucid/printer.hpp"

namespace flucid {

std::string_view builtin_name(Builtin b) {
  switch (b) {
    case Builtin::kRun: return "run";
    case Builtin::kUnion: return "union";
    case Builtin::kIntersection: return "intersection";
    case Builtin::kCombine: return "combine";
    case Builtin::kProduct: return "product";
  }
  return "?";
}

std::string_view entry_kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::kDim: return "dim";
    case EntryKind::kConst: return "const";
    case EntryKind::kOp: return "op";
    case EntryKind::kVar: return "var";
    case EntryKind::kFunc: return "func";
  }
  return "?";
}

EnvEntry EnvEntry::constant_entry(Value v) {
  EnvEntry e;
  e.kind = EntryKind::kConst;
  e.constant = std::move(v);
  return e;
}

EnvEntry EnvEntry::op(Builtin b) {
  EnvEntry e;
  e.kind = EntryKind::kOp;
  e.builtin = b;
  return e;
}

EnvEntry EnvEntry::var(QDefPtr def) {
  EnvEntry e;
  e.kind = EntryKind::kVar;
  e.def = std::move(def);
  return e;
}

EnvEntry EnvEntry::func(QDefPtr def) {
  EnvEntry e;
  e.kind = EntryKind::kFunc;
  e.def = std::move(def);
  return e;
}

DefEnv DefEnv::base() {
  std::vector<std::pair<std::string, EnvEntry>> entries = {
      {kDefaultDimension, EnvEntry::dim()},
      {"bod", EnvEntry::constant_entry(Value::bod())},
      {"eod", EnvEntry::constant_entry(Value::eod())},
  };
  for (Builtin b : {Builtin::kRun, Builtin::kUnion, Builtin::kIntersection,
                    Builtin::kCombine, Builtin::kProduct}) {
    entries.emplace_back(std::string(builtin_name(b)), EnvEntry::op(b));
  }
  return DefEnv().extend(std::move(entries));
}

DefEnv DefEnv::extend(
    std::vector<std::pair<std::string, EnvEntry>> entries) const {
  auto frame = std::make_shared<Frame>();
  for (auto& [name, entry] : entries) {
    frame->entries.insert_or_assign(name, std::move(entry));
  }
  frame->parent = top_;
  return DefEnv(std::move(frame));
}

const EnvEntry* DefEnv::lookup(const std::string& name) const {
  for (const Frame* f = top_.get(); f != nullptr; f = f->parent.get()) {
    if (auto it = f->entries.find(name); it != f->entries.end()) {
      return &it->second;
    }
  }
  return nullptr;
}

std::string DefEnv::resolve_dimension(const Expr& e) const {
  // A compound `a.b` is one flat name; only the whole needs a (dim) entry.
  auto path = dimension_path(e);
  if (!path) throw TypeError("'" + print_brief(e) + "' is not a dimension");
  const std::string& name = *path;
  const EnvEntry* entry = lookup(name);
  if (entry == nullptr) throw UnboundDimension(name);
  if (entry->kind != EntryKind::kDim) {
    throw TypeError("'" + name + "' is a " +
                    std::string(entry_kind_name(entry->kind)) +
                    ", not a dimension");
  }
  return name;
}

std::map<std::string, EntryKind> DefEnv::visible() const {
  std::map<std::string, EntryKind> out;
  for (const Frame* f = top_.get(); f != nullptr; f = f->parent.get()) {
    for (const auto& [name, entry] : f->entries) out.emplace(name, entry.kind);
  }
  return out;
}

}  // namespace flucid
