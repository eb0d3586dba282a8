// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "simidx/suffix_tree.hpp"
#include "simidx/text.hpp"
#include "simidx/types.hpp"

namespace simidx {

struct CdawgEdge {
  NodeId src = kNone;
  NodeId dest = kNone;
  Symbol first = 0;
  Index length = 0;
  Index label_start = kNone;  // kNone once text references are dropped
  bool primary = false;

  friend bool operator==(const CdawgEdge&, const CdawgEdge&) = default;
};

/// Compact directed acyclic word graph of a terminated text, obtained by
/// merging suffix-tree nodes that share their end positions. Nodes are
/// numbered in preorder of the longest-path tree, so the source is node 0;
/// out-edges of a node are contiguous and ordered by first symbol.
class Cdawg {
 public:
  static Cdawg build(const Text& text);
  static Cdawg build(const SuffixTree& st, const Text& text, const LeftExtensions& ext);

  [[nodiscard]] std::size_t node_count() const { return length_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] std::size_t primary_count() const;
  [[nodiscard]] static constexpr NodeId source() { return 0; }
  [[nodiscard]] NodeId sink() const { return sink_; }
  [[nodiscard]] Index text_size() const { return n_; }

  /// |str(v)|, the length of the longest string of v.
  [[nodiscard]] Index length(NodeId v) const { return length_[v]; }
  [[nodiscard]] NodeId slink(NodeId v) const { return slink_[v]; }
  [[nodiscard]] std::uint64_t path_count(NodeId v) const { return path_count_[v]; }
  /// Length of the longest suffix-link chain.
  [[nodiscard]] Index height_slt() const { return height_slt_; }

  [[nodiscard]] EdgeId edges_begin(NodeId v) const { return edge_begin_[v]; }
  [[nodiscard]] EdgeId edges_end(NodeId v) const { return edge_begin_[v + 1]; }
  [[nodiscard]] const CdawgEdge& edge(EdgeId e) const { return edges_[e]; }
  [[nodiscard]] const std::vector<CdawgEdge>& edges() const { return edges_; }
  [[nodiscard]] EdgeId out_edge(NodeId v, Symbol a) const;

  /// CDAWG node of every suffix-tree node used for the build.
  [[nodiscard]] const std::vector<NodeId>& st_class() const { return st_class_; }

  void drop_text_references();

 private:
  std::vector<Index> length_;
  std::vector<NodeId> slink_;
  std::vector<std::uint64_t> path_count_;
  std::vector<EdgeId> edge_begin_;
  std::vector<CdawgEdge> edges_;
  std::vector<NodeId> st_class_;
  NodeId sink_ = kNone;
  Index n_ = 0;
  Index height_slt_ = 0;
};

/// Longest-path tree: the primary edges as a spanning tree at the source.
struct Lpt {
  std::vector<NodeId> parent;      // kNone at the source
  std::vector<EdgeId> parent_edge;  // kNone at the source
};

/// Throws InvariantViolation if the primary edges do not form a spanning tree.
Lpt lpt(const Cdawg& c);

struct ECounts {
  std::uint64_t e_l = 0;
  std::uint64_t e_r = 0;

  friend bool operator==(const ECounts&, const ECounts&) = default;
};

/// Left and right extension totals over the maximal substrings. e_R is the
/// CDAWG edge count; e_L comes from the CDAWG of the reversed text.
ECounts e_counts(const Text& text);

}  // namespace simidx
