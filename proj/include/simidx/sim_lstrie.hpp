// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "simidx/ancestry.hpp"
#include "simidx/decode.hpp"
#include "simidx/lstrie.hpp"
#include "simidx/suffix_tree.hpp"
#include "simidx/text.hpp"

namespace simidx {

/// Simplified linear-size suffix trie: the suffix tree plus one depth-1
/// type-2 node per symbol that is not right-maximal, with modified fast links
/// and an ancestry index. Text-free once built.
class SimLSTrie {
 public:
  static SimLSTrie build_from_lstrie(const LSTrie& lst);
  static SimLSTrie build_direct(const SuffixTree& st, const Text& text);
  /// Reassembles a stored index; throws CorruptIndex on inconsistent parts.
  static SimLSTrie from_parts(LinkedTree tree, Index n, AncestryIndex ancestry);

  [[nodiscard]] const LinkedTree& tree() const { return tree_; }
  [[nodiscard]] const AncestryIndex& ancestry() const { return ancestry_; }
  [[nodiscard]] std::size_t size() const { return tree_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return tree_.size() - 1; }
  [[nodiscard]] Index text_size() const { return n_; }

  [[nodiscard]] std::optional<Locus> locate(std::span<const Symbol> pattern,
                                            WorkCounter* work = nullptr) const;
  /// Sorted 1-based start positions of the occurrences below `locus`.
  [[nodiscard]] std::vector<Index> report(const Locus& locus) const;
  [[nodiscard]] std::size_t count(const Locus& locus) const { return report(locus).size(); }
  [[nodiscard]] std::vector<Symbol> extract_label(NodeId edge, WorkCounter* work = nullptr) const;

  /// Replaces one stored fast link; used to test corruption detection.
  void override_fast_link(NodeId edge, FastLink link) { tree_.fast_link.at(edge) = link; }

  // Decoding interface.
  [[nodiscard]] NodeId parent(NodeId c) const { return tree_.parent[c]; }
  [[nodiscard]] NodeId child(NodeId v, Symbol a) const { return tree_.child(v, a); }
  [[nodiscard]] Symbol first(NodeId c) const { return tree_.first[c]; }
  [[nodiscard]] bool plus(NodeId c) const { return tree_.plus[c] != 0; }
  [[nodiscard]] FastLink fast_link(NodeId c) const { return tree_.fast_link[c]; }
  [[nodiscard]] bool is_ancestor(NodeId a, NodeId b) const { return ancestry_.is_ancestor(a, b); }

  friend bool operator==(const SimLSTrie&, const SimLSTrie&) = default;

 private:
  LinkedTree tree_;
  AncestryIndex ancestry_;
  Index n_ = 0;
};

}  // namespace simidx
