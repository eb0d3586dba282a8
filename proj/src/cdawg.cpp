// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/cdawg.hpp"

#include <algorithm>
#include <numeric>

#include "simidx/ancestry.hpp"

namespace simidx {

Cdawg Cdawg::build(const Text& text) {
  const SuffixTree st = SuffixTree::build(text);
  return build(st, text, left_extensions(st, text));
}

Cdawg Cdawg::build(const SuffixTree& st, const Text& text, const LeftExtensions& ext) {
  if (!text.terminated()) throw InvalidArgument("a CDAWG needs a terminated text");
  const std::size_t size = st.size();

  // Left-maximal nodes head their class. Any other node w has a single
  // predecessor symbol a, so a·str(w) ends exactly where str(w) ends and is
  // the node x with slink(x) = w; w joins the class of x.
  std::vector<NodeId> pred(size, kNone);
  for (NodeId x = 1; x < size; ++x) pred[st.slink(x)] = x;

  Cdawg c;
  c.n_ = static_cast<Index>(text.size());
  c.st_class_.assign(size, kNone);
  std::vector<NodeId> head;  // CDAWG node -> suffix-tree node
  for (NodeId v = 0; v < size; ++v) {
    if (ext.is_left_maximal(v)) {
      c.st_class_[v] = static_cast<NodeId>(head.size());
      head.push_back(v);
    }
  }
  std::vector<NodeId> by_depth(size);
  std::iota(by_depth.begin(), by_depth.end(), 0);
  std::sort(by_depth.begin(), by_depth.end(),
            [&st](NodeId a, NodeId b) { return st.depth(a) > st.depth(b); });
  for (NodeId w : by_depth) {
    if (c.st_class_[w] != kNone) continue;
    if (pred[w] == kNone || c.st_class_[pred[w]] == kNone)
      throw InvariantViolation("node without a class representative");
    c.st_class_[w] = c.st_class_[pred[w]];
  }

  const std::size_t nodes = head.size();
  c.length_.resize(nodes);
  c.slink_.assign(nodes, kNone);
  c.edge_begin_.assign(nodes + 1, 0);
  for (NodeId id = 0; id < nodes; ++id) {
    const NodeId h = head[id];
    c.length_[id] = st.depth(h);
    for (NodeId ch : st.children(h)) {
      const NodeId dest = c.st_class_[ch];
      const bool primary = c.st_class_[ch] != kNone && head[dest] == ch;
      c.edges_.push_back({id, dest, st.edge_first(ch), st.edge_length(ch), st.str_start(ch) + st.depth(h),
                          primary});
    }
    c.edge_begin_[id + 1] = static_cast<EdgeId>(c.edges_.size());
    if (h != SuffixTree::root()) {
      NodeId w = st.slink(h);
      while (!ext.is_left_maximal(w)) w = st.slink(w);
      c.slink_[id] = c.st_class_[w];
    }
  }
  c.sink_ = c.st_class_[st.node_of_suffix(0)];

  std::vector<NodeId> by_length(nodes);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::sort(by_length.begin(), by_length.end(),
            [&c](NodeId a, NodeId b) { return c.length_[a] < c.length_[b]; });
  std::vector<Index> height(nodes, 0);
  for (NodeId v : by_length) {
    if (v != source()) height[v] = height[c.slink_[v]] + 1;
    c.height_slt_ = std::max(c.height_slt_, height[v]);
  }
  c.path_count_.assign(nodes, 0);
  for (auto it = by_length.rbegin(); it != by_length.rend(); ++it) {
    const NodeId v = *it;
    if (v == c.sink_) {
      c.path_count_[v] = 1;
      continue;
    }
    for (EdgeId e = c.edge_begin_[v]; e < c.edge_begin_[v + 1]; ++e) c.path_count_[v] += c.path_count_[c.edges_[e].dest];
  }
  return c;
}

std::size_t Cdawg::primary_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const CdawgEdge& e) { return e.primary; }));
}

EdgeId Cdawg::out_edge(NodeId v, Symbol a) const {
  auto begin = edges_.begin() + edge_begin_[v];
  auto end = edges_.begin() + edge_begin_[v + 1];
  auto it = std::lower_bound(begin, end, a, [](const CdawgEdge& e, Symbol s) { return e.first < s; });
  return it != end && it->first == a ? static_cast<EdgeId>(it - edges_.begin()) : kNone;
}

void Cdawg::drop_text_references() {
  for (auto& e : edges_) e.label_start = kNone;
}

Lpt lpt(const Cdawg& c) {
  Lpt t;
  t.parent.assign(c.node_count(), kNone);
  t.parent_edge.assign(c.node_count(), kNone);
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const CdawgEdge& edge = c.edge(e);
    if (!edge.primary) continue;
    if (edge.dest == Cdawg::source() || t.parent[edge.dest] != kNone)
      throw InvariantViolation("node with more than one primary in-edge");
    t.parent[edge.dest] = edge.src;
    t.parent_edge[edge.dest] = e;
  }
  try {
    (void)AncestryIndex::from_parents(t.parent);
  } catch (const InvalidArgument& err) {
    throw InvariantViolation(std::string("primary edges are not a spanning tree: ") + err.what());
  }
  return t;
}

ECounts e_counts(const Text& text) {
  if (!text.terminated()) throw InvalidArgument("extension counts need a terminated text");
  ECounts out;
  out.e_r = Cdawg::build(text).edge_count();
  // In the reversal every maximal substring other than the empty string and
  // the text that is a prefix of the core gains one extra right extension:
  // the end-marker. Those are the internal nodes with an end-marker out-edge.
  const Cdawg rev = Cdawg::build(text.reversed_core());
  const Symbol marker = text[text.size() - 1];
  std::uint64_t extra = 0;
  for (NodeId v = 1; v < rev.node_count(); ++v) {
    if (v != rev.sink() && rev.out_edge(v, marker) != kNone) ++extra;
  }
  out.e_l = rev.edge_count() - extra;
  return out;
}

}  // namespace simidx
