// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simidx/ancestry.hpp"
#include "simidx/cdawg.hpp"
#include "simidx/decode.hpp"
#include "simidx/text.hpp"

namespace simidx {

struct SimEdge {
  NodeId src = kNone;
  NodeId dest = kNone;
  Symbol first = 0;
  Index length = 0;
  bool primary = false;
  FastLink fast_link;  // tree nodes; valid on Plus-edges only

  [[nodiscard]] bool plus() const { return length >= 2; }
  friend bool operator==(const SimEdge&, const SimEdge&) = default;
};

/// Simplified linear-size CDAWG. DAG nodes are the CDAWG nodes (same ids)
/// followed by one depth-1 type-2 node per source edge of length >= 2. The
/// decoding tree (longest-path tree plus secondary edges as detached leaves)
/// has one node per DAG node, at its primary placement, followed by one
/// detached leaf per secondary edge in edge order; tree node t != 0 is
/// entered by DAG edge tree_edge(t). Text-free once built.
class SimLCdawg {
 public:
  struct BuildReport {
    /// Per edge: the CDAWG edge it comes from and the offset of its label.
    std::vector<std::pair<EdgeId, Index>> origin;
    std::size_t peak_chain = 0;
    Index height_slt = 0;
  };

  static SimLCdawg build(const Cdawg& c, const Text& text, BuildReport* report = nullptr);
  /// Reassembles a stored index; throws CorruptIndex on inconsistent parts.
  static SimLCdawg from_parts(std::vector<Index> length, std::vector<std::uint8_t> type2,
                              std::vector<SimEdge> edges, Index n, AncestryIndex ancestry);

  [[nodiscard]] std::size_t node_count() const { return length_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] std::size_t type2_count() const;
  [[nodiscard]] std::size_t fast_link_count() const;
  [[nodiscard]] static constexpr NodeId source() { return 0; }
  [[nodiscard]] NodeId sink() const { return sink_; }
  [[nodiscard]] Index text_size() const { return n_; }
  [[nodiscard]] Index length(NodeId v) const { return length_[v]; }
  [[nodiscard]] bool is_type2(NodeId v) const { return type2_[v] != 0; }
  [[nodiscard]] std::uint64_t path_count(NodeId v) const { return path_count_[v]; }

  [[nodiscard]] const SimEdge& edge(EdgeId e) const { return edges_[e]; }
  [[nodiscard]] const std::vector<SimEdge>& edges() const { return edges_; }
  [[nodiscard]] EdgeId edges_begin(NodeId v) const { return edge_begin_[v]; }
  [[nodiscard]] EdgeId edges_end(NodeId v) const { return edge_begin_[v + 1]; }
  [[nodiscard]] EdgeId out_edge(NodeId v, Symbol a) const;

  [[nodiscard]] std::size_t tree_size() const { return tree_edge_.size(); }
  [[nodiscard]] EdgeId tree_edge(NodeId t) const { return tree_edge_[t]; }
  [[nodiscard]] NodeId tree_node_of_edge(EdgeId e) const { return edge_tree_node_[e]; }
  [[nodiscard]] const AncestryIndex& ancestry() const { return ancestry_; }
  [[nodiscard]] std::vector<NodeId> tree_parents() const;

  [[nodiscard]] std::optional<Locus> locate(std::span<const Symbol> pattern,
                                            WorkCounter* work = nullptr) const;
  /// Locus nodes and edges are DAG ids.
  [[nodiscard]] std::uint64_t count(const Locus& locus) const;
  /// Sorted 1-based start positions of a pattern of length m ending at
  /// `locus`. `visits` receives the number of enumerated path nodes.
  [[nodiscard]] std::vector<Index> report(const Locus& locus, Index m, std::size_t* visits = nullptr) const;
  [[nodiscard]] std::vector<Symbol> extract_label(EdgeId e, WorkCounter* work = nullptr) const;

  void override_fast_link(EdgeId e, FastLink link) { edges_.at(e).fast_link = link; }

  // Decoding interface over tree nodes.
  [[nodiscard]] NodeId parent(NodeId t) const {
    return tree_edge_[t] == kNone ? kNone : edges_[tree_edge_[t]].src;
  }
  [[nodiscard]] NodeId child(NodeId t, Symbol a) const {
    if (t >= length_.size()) return kNone;
    const EdgeId e = out_edge(t, a);
    return e == kNone ? kNone : edge_tree_node_[e];
  }
  [[nodiscard]] Symbol first(NodeId t) const { return edges_[tree_edge_[t]].first; }
  [[nodiscard]] bool plus(NodeId t) const { return edges_[tree_edge_[t]].plus(); }
  [[nodiscard]] FastLink fast_link(NodeId t) const { return edges_[tree_edge_[t]].fast_link; }
  [[nodiscard]] bool is_ancestor(NodeId a, NodeId b) const { return ancestry_.is_ancestor(a, b); }

  friend bool operator==(const SimLCdawg&, const SimLCdawg&) = default;

 private:
  void index();

  std::vector<Index> length_;
  std::vector<std::uint8_t> type2_;
  std::vector<std::uint64_t> path_count_;
  std::vector<SimEdge> edges_;
  std::vector<EdgeId> edge_begin_;
  std::vector<EdgeId> tree_edge_;
  std::vector<NodeId> edge_tree_node_;
  AncestryIndex ancestry_;
  NodeId sink_ = kNone;
  Index n_ = 0;
};

}  // namespace simidx
