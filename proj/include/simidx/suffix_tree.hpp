// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "simidx/text.hpp"
#include "simidx/types.hpp"

namespace simidx {

/// Suffix tree with suffix links. Nodes are numbered in depth-first preorder
/// with children ordered by the first symbol of their edge, so node 0 is the
/// root and numbering is canonical.
///
/// For an unterminated text the tree is the Weiner tree: every suffix that
/// occurs more than once keeps an explicit node even when it does not branch.
class SuffixTree {
 public:
  static SuffixTree build(const Text& text);

  [[nodiscard]] std::size_t size() const { return parent_.size(); }
  [[nodiscard]] std::size_t text_size() const { return node_of_suffix_.size(); }
  [[nodiscard]] static constexpr NodeId root() { return 0; }

  [[nodiscard]] NodeId parent(NodeId v) const { return parent_[v]; }
  /// String depth |str(v)|.
  [[nodiscard]] Index depth(NodeId v) const { return depth_[v]; }
  /// Start of one occurrence of str(v) in the text.
  [[nodiscard]] Index str_start(NodeId v) const { return str_start_[v]; }
  [[nodiscard]] NodeId slink(NodeId v) const { return slink_[v]; }
  /// Start of the suffix spelled by v, or kNone if str(v) is not a suffix.
  [[nodiscard]] Index suffix_start(NodeId v) const { return suffix_start_[v]; }
  /// First symbol of the edge entering v.
  [[nodiscard]] Symbol edge_first(NodeId v) const { return edge_first_[v]; }
  [[nodiscard]] Index edge_length(NodeId v) const { return depth_[v] - depth_[parent_[v]]; }
  [[nodiscard]] bool is_leaf(NodeId v) const { return child_begin_[v] == child_begin_[v + 1]; }

  [[nodiscard]] std::span<const NodeId> children(NodeId v) const {
    return {children_.data() + child_begin_[v], children_.data() + child_begin_[v + 1]};
  }
  /// Child of v whose edge starts with `symbol`, or kNone.
  [[nodiscard]] NodeId child(NodeId v, Symbol symbol) const;
  /// Node spelling the suffix starting at i.
  [[nodiscard]] NodeId node_of_suffix(Index i) const { return node_of_suffix_[i]; }

 private:
  std::vector<NodeId> parent_;
  std::vector<Index> depth_;
  std::vector<Index> str_start_;
  std::vector<NodeId> slink_;
  std::vector<Index> suffix_start_;
  std::vector<Symbol> edge_first_;
  std::vector<Index> child_begin_;
  std::vector<NodeId> children_;
  std::vector<NodeId> node_of_suffix_;
};

/// Per-node sets of left extensions: the distinct symbols preceding the
/// occurrences of str(v).
struct LeftExtensions {
  std::vector<Index> begin;        // size() + 1 offsets into symbols/witness
  std::vector<Symbol> symbols;     // sorted per node
  std::vector<Index> witness;      // position i >= 1 with T[i-1] = symbol and str(v) at i
  std::vector<std::uint8_t> prefix;  // str(v) is a prefix of the text

  [[nodiscard]] std::span<const Symbol> preceding(NodeId v) const {
    return {symbols.data() + begin[v], symbols.data() + begin[v + 1]};
  }
  [[nodiscard]] bool is_left_maximal(NodeId v) const {
    return begin[v + 1] - begin[v] >= 2 || prefix[v] != 0;
  }
  /// The single preceding symbol of a node that is not left-maximal.
  [[nodiscard]] std::optional<Symbol> unique_predecessor(NodeId v) const;
};

LeftExtensions left_extensions(const SuffixTree& st, const Text& text);

/// A pair (v, a) where a·str(v) occurs in the text but has no explicit node.
struct SoftWeinerPair {
  NodeId node;
  Symbol symbol;
  Index witness;  // a·str(v) occurs at witness - 1

  friend bool operator==(const SoftWeinerPair&, const SoftWeinerPair&) = default;
};

std::vector<SoftWeinerPair> soft_weiner_pairs(const SuffixTree& st, const Text& text,
                                              const LeftExtensions& ext);
std::vector<SoftWeinerPair> soft_weiner_pairs(const SuffixTree& st, const Text& text);

/// Position in the tree spelling some string: `node` is the explicit node at
/// or directly below the position, `depth` the string depth of the position.
struct StLocus {
  NodeId node;
  Index depth;

  [[nodiscard]] bool is_explicit(const SuffixTree& st) const { return st.depth(node) == depth; }
  friend bool operator==(const StLocus&, const StLocus&) = default;
};

/// Text-based descent; reference matcher for differential tests.
std::optional<StLocus> locate_with_text(const SuffixTree& st, const Text& text,
                                        std::span<const Symbol> pattern);

}  // namespace simidx
