// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "simidx/decode.hpp"
#include "simidx/suffix_tree.hpp"
#include "simidx/text.hpp"
#include "simidx/types.hpp"

namespace simidx {

enum class NodeKind : std::uint8_t { kType1 = 1, kType2 = 2 };

/// Node-labelled tree storage shared by LSTrie and SimLSTrie. Node 0 is the
/// root, nodes are in preorder with children ordered by symbol, and the edge
/// entering node c is identified by c.
struct LinkedTree {
  std::vector<NodeId> parent;
  std::vector<Index> depth;
  std::vector<NodeKind> kind;
  std::vector<Index> suffix_start;   // kNone unless str(v) is a suffix
  std::vector<Symbol> first;         // first symbol of the entering edge
  std::vector<std::uint8_t> plus;    // entering edge label has length >= 2
  std::vector<FastLink> fast_link;   // valid on Plus-edges only
  std::vector<Index> child_begin;
  std::vector<NodeId> children;

  [[nodiscard]] std::size_t size() const { return parent.size(); }
  [[nodiscard]] std::span<const NodeId> children_of(NodeId v) const {
    return {children.data() + child_begin[v], children.data() + child_begin[v + 1]};
  }
  [[nodiscard]] NodeId child(NodeId v, Symbol a) const;
  [[nodiscard]] Index edge_length(NodeId c) const { return depth[c] - depth[parent[c]]; }
  [[nodiscard]] std::size_t type2_count() const;

  /// Rebuilds the child index from `parent`; requires preorder numbering.
  void index_children();
  /// Checks preorder numbering, symbol order, depths and Plus flags;
  /// throws CorruptIndex on failure.
  void validate() const;

  friend bool operator==(const LinkedTree&, const LinkedTree&) = default;
};

/// Fast links of all Plus-edges: for edge (u,v) the pair
/// <slink^k(u), slink^k(v)> for the smallest k >= 1 such that slink^k(u) is
/// not the parent of slink^k(v). Chains are walked once and memoized.
std::vector<FastLink> chain_fast_links(const LinkedTree& tree, std::span<const NodeId> slink);

namespace detail {

/// A non-branching node inserted on the suffix-tree edge entering `below`.
struct Insertion {
  NodeId below;
  Index depth;
  NodeId slink;  // suffix-tree node
};

/// Builds the tree of suffix-tree nodes plus the given insertions, with
/// suffix links (type-1 links from the suffix tree, type-2 from the
/// insertion). Fast links are left empty.
LinkedTree assemble(const SuffixTree& st, const Text& text, std::vector<Insertion> insertions,
                    std::vector<NodeId>& slink);

}  // namespace detail

/// Linear-size suffix trie: suffix tree nodes (type-1) plus one non-branching
/// type-2 node per soft Weiner link, with original fast links. Answers
/// decision queries only.
class LSTrie {
 public:
  static LSTrie build(const SuffixTree& st, const Text& text);
  static LSTrie build(const SuffixTree& st, const Text& text, const LeftExtensions& ext);

  [[nodiscard]] const LinkedTree& tree() const { return tree_; }
  [[nodiscard]] std::span<const NodeId> slinks() const { return slink_; }
  [[nodiscard]] std::size_t size() const { return tree_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return tree_.size() - 1; }
  [[nodiscard]] Index text_size() const { return n_; }

  [[nodiscard]] bool contains(std::span<const Symbol> pattern, WorkCounter* work = nullptr) const;
  [[nodiscard]] std::vector<Symbol> extract_label(NodeId edge, WorkCounter* work = nullptr) const;

  // Decoding interface.
  [[nodiscard]] NodeId parent(NodeId c) const { return tree_.parent[c]; }
  [[nodiscard]] NodeId child(NodeId v, Symbol a) const { return tree_.child(v, a); }
  [[nodiscard]] Symbol first(NodeId c) const { return tree_.first[c]; }
  [[nodiscard]] bool plus(NodeId c) const { return tree_.plus[c] != 0; }
  [[nodiscard]] FastLink fast_link(NodeId c) const { return tree_.fast_link[c]; }

 private:
  LinkedTree tree_;
  std::vector<NodeId> slink_;
  Index n_ = 0;
};

}  // namespace simidx
