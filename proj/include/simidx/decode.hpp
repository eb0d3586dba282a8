// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simidx/types.hpp"

// Label decoding shared by the fast-link indexes. A tree type provides, for a
// tree node c identifying the edge from parent(c) to c:
//   NodeId parent(NodeId c), NodeId child(NodeId v, Symbol a),
//   Symbol first(NodeId c), bool plus(NodeId c), FastLink fast_link(NodeId c),
//   bool is_ancestor(NodeId a, NodeId b)   (ancestor-or-equal)

namespace simidx {

/// Where a pattern ends: `node` is the node at or directly below the end,
/// `edge` the edge containing it (kNone when the end is exactly at `node`),
/// and `offset` the number of label symbols of `edge` consumed.
struct Locus {
  NodeId node = kNone;
  EdgeId edge = kNone;
  Index offset = 0;

  [[nodiscard]] bool at_node() const { return edge == kNone; }
  friend bool operator==(const Locus&, const Locus&) = default;
};

/// Counts fast-link applications of one query or extraction.
struct WorkCounter {
  std::uint64_t fast_link_applications = 0;
  std::uint64_t limit = UINT64_MAX;

  void apply() {
    if (++fast_link_applications > limit) throw CorruptIndex("fast-link application limit exceeded");
  }
};

/// Matches pattern[pos..] against the label of the Plus-edge entering tree
/// node `edge`, whose first symbol is already known to equal pattern[pos].
/// Decodes top-down inside fast-link destination paths. Returns the number of
/// symbols matched (stopping at pattern end or label end), or nullopt on a
/// mismatch. With `Guarded`, a child is only followed if it is an
/// ancestor-or-equal of the path's bottom node.
template <bool Guarded, class Tree>
std::optional<Index> match_plus_edge(const Tree& t, NodeId edge, std::span<const Symbol> pattern,
                                     Index pos, WorkCounter& work) {
  struct Frame {
    NodeId cur;
    NodeId bottom;
  };
  const auto m = static_cast<Index>(pattern.size());
  const Index start = pos;
  std::vector<Frame> frames;
  auto push = [&](NodeId e) {
    work.apply();
    const FastLink fl = t.fast_link(e);
    if (!fl.valid()) throw CorruptIndex("Plus-edge without fast link");
    frames.push_back({fl.top, fl.bottom});
  };
  push(edge);
  for (;;) {
    while (!frames.empty() && frames.back().cur == frames.back().bottom) frames.pop_back();
    if (frames.empty() || pos == m) return pos - start;
    Frame& f = frames.back();
    const NodeId c = t.child(f.cur, pattern[pos]);
    if (c == kNone) return std::nullopt;
    if constexpr (Guarded) {
      if (!t.is_ancestor(c, f.bottom)) return std::nullopt;
    }
    f.cur = c;
    if (!t.plus(c) || pos + 1 == m) {
      ++pos;
      continue;
    }
    push(c);
  }
}

/// Bottom-up label extraction of the edge entering tree node `edge`: walks
/// parent references from the fast link's bottom node to its top node and
/// recurses on Plus-edges. `max_length` bounds the output so corrupted links
/// cannot run away.
template <class Tree>
std::vector<Symbol> extract_edge_label(const Tree& t, NodeId edge, std::size_t max_length,
                                       WorkCounter& work) {
  std::vector<Symbol> out;
  std::vector<NodeId> pending{edge};
  std::size_t steps = 0;
  while (!pending.empty()) {
    const NodeId e = pending.back();
    pending.pop_back();
    if (!t.plus(e)) {
      if (out.size() == max_length) throw CorruptIndex("extracted label exceeds its bound");
      out.push_back(t.first(e));
      continue;
    }
    work.apply();
    const FastLink fl = t.fast_link(e);
    if (!fl.valid()) throw CorruptIndex("Plus-edge without fast link");
    // Pushing bottom-up makes the stack pop the path top-down.
    for (NodeId b = fl.bottom; b != fl.top; b = t.parent(b)) {
      if (b == kNone || ++steps > 2 * max_length + 2)
        throw CorruptIndex("fast link top is not an ancestor of its bottom");
      pending.push_back(b);
    }
  }
  return out;
}

}  // namespace simidx
