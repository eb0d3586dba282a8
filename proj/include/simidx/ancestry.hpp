// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "simidx/types.hpp"

namespace simidx {

/// O(1) ancestor queries from preorder entry / postorder exit numbers.
class AncestryIndex {
 public:
  AncestryIndex() = default;

  /// `parent[v]` is kNone for the single root.
  static AncestryIndex from_parents(std::span<const NodeId> parent);
  /// Restores an index from stored numbers; throws CorruptIndex if they are
  /// not two permutations of 0..size-1.
  static AncestryIndex from_numbers(std::vector<Index> entry, std::vector<Index> exit);

  [[nodiscard]] std::size_t size() const { return entry_.size(); }
  [[nodiscard]] Index entry(NodeId v) const { return entry_[v]; }
  [[nodiscard]] Index exit(NodeId v) const { return exit_[v]; }
  [[nodiscard]] const std::vector<Index>& entries() const { return entry_; }
  [[nodiscard]] const std::vector<Index>& exits() const { return exit_; }

  /// Ancestor-or-equal.
  [[nodiscard]] bool is_ancestor(NodeId a, NodeId b) const {
    return entry_[a] <= entry_[b] && exit_[b] <= exit_[a];
  }
  [[nodiscard]] bool is_strict_ancestor(NodeId a, NodeId b) const { return a != b && is_ancestor(a, b); }

  friend bool operator==(const AncestryIndex&, const AncestryIndex&) = default;

 private:
  std::vector<Index> entry_;
  std::vector<Index> exit_;
};

}  // namespace simidx
