// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/ancestry.hpp"

#include <utility>

namespace simidx {

AncestryIndex AncestryIndex::from_parents(std::span<const NodeId> parent) {
  const std::size_t size = parent.size();
  NodeId root = kNone;
  std::vector<Index> begin(size + 1, 0);
  for (NodeId v = 0; v < size; ++v) {
    if (parent[v] == kNone) {
      if (root != kNone) throw InvalidArgument("tree has more than one root");
      root = v;
    } else {
      if (parent[v] >= size) throw InvalidArgument("parent reference out of range");
      ++begin[parent[v] + 1];
    }
  }
  if (size == 0) return {};
  if (root == kNone) throw InvalidArgument("tree has no root");
  for (std::size_t v = 0; v < size; ++v) begin[v + 1] += begin[v];
  std::vector<NodeId> kids(size - 1);
  {
    std::vector<Index> fill(begin.begin(), begin.end() - 1);
    for (NodeId v = 0; v < size; ++v)
      if (parent[v] != kNone) kids[fill[parent[v]]++] = v;
  }

  AncestryIndex idx;
  idx.entry_.assign(size, kNone);
  idx.exit_.assign(size, kNone);
  Index pre = 0;
  Index post = 0;
  std::vector<std::pair<NodeId, Index>> stack{{root, begin[root]}};
  idx.entry_[root] = pre++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < begin[v + 1]) {
      const NodeId c = kids[next++];
      idx.entry_[c] = pre++;
      stack.emplace_back(c, begin[c]);
    } else {
      idx.exit_[v] = post++;
      stack.pop_back();
    }
  }
  if (pre != size) throw InvalidArgument("tree is not connected");
  return idx;
}

AncestryIndex AncestryIndex::from_numbers(std::vector<Index> entry, std::vector<Index> exit) {
  if (entry.size() != exit.size()) throw CorruptIndex("euler interval arrays differ in length");
  for (const auto* numbers : {&entry, &exit}) {
    std::vector<std::uint8_t> seen(numbers->size(), 0);
    for (Index x : *numbers) {
      if (x >= numbers->size() || seen[x]) throw CorruptIndex("euler numbers are not a permutation");
      seen[x] = 1;
    }
  }
  AncestryIndex idx;
  idx.entry_ = std::move(entry);
  idx.exit_ = std::move(exit);
  return idx;
}

}  // namespace simidx
