// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/sim_lcdawg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace simidx {

SimLCdawg SimLCdawg::build(const Cdawg& c, const Text& text, BuildReport* report) {
  const auto base = static_cast<NodeId>(c.node_count());
  struct Pending {
    SimEdge edge;
    Index label_start;
    std::pair<EdgeId, Index> origin;
  };
  std::vector<Pending> pending;
  pending.reserve(c.edge_count() + text.sigma());
  SimLCdawg s;
  s.n_ = c.text_size();
  s.length_.reserve(base + text.sigma());
  for (NodeId v = 0; v < base; ++v) s.length_.push_back(c.length(v));
  s.type2_.assign(base, 0);

  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const CdawgEdge& ce = c.edge(e);
    if (ce.label_start == kNone) throw InvalidArgument("CDAWG text references were dropped");
    if (ce.src == Cdawg::source() && ce.length >= 2) {
      const auto v = static_cast<NodeId>(s.length_.size());
      s.length_.push_back(1);
      s.type2_.push_back(1);
      pending.push_back({{ce.src, v, ce.first, 1, true, {}}, ce.label_start, {e, 0}});
      pending.push_back({{v, ce.dest, text[ce.label_start + 1], ce.length - 1, ce.primary, {}},
                         ce.label_start + 1,
                         {e, 1}});
    } else {
      pending.push_back({{ce.src, ce.dest, ce.first, ce.length, ce.primary, {}}, ce.label_start, {e, 0}});
    }
  }
  std::stable_sort(pending.begin(), pending.end(),
                   [](const Pending& a, const Pending& b) { return a.edge.src < b.edge.src; });
  std::vector<Index> label_start;
  label_start.reserve(pending.size());
  BuildReport local;
  BuildReport& rep = report != nullptr ? *report : local;
  rep = {};
  rep.height_slt = c.height_slt();
  for (const Pending& p : pending) {
    s.edges_.push_back(p.edge);
    label_start.push_back(p.label_start);
    rep.origin.push_back(p.origin);
  }
  s.index();

  std::vector<NodeId> slink(s.length_.size(), Cdawg::source());
  for (NodeId v = 0; v < base; ++v) slink[v] = c.slink(v);

  // Modified fast links by parallel suffix-link chains. The chain of a
  // Plus-edge follows the same-symbol edges out of successive suffix links
  // while they have the same label length; the first shorter one starts a
  // path of at least three nodes, found by skip-and-count over the label.
  std::vector<EdgeId> chain;
  for (EdgeId start = 0; start < s.edges_.size(); ++start) {
    if (!s.edges_[start].plus() || s.edges_[start].fast_link.valid()) continue;
    const Symbol a = s.edges_[start].first;
    const Index ell = s.edges_[start].length;
    chain.clear();
    FastLink result;
    for (EdgeId cur = start;;) {
      chain.push_back(cur);
      const NodeId w = slink[s.edges_[cur].src];
      const EdgeId e2 = w == kNone ? kNone : s.out_edge(w, a);
      if (e2 == kNone)
        throw InvariantViolation("suffix-link chain of edge " + std::to_string(start) + " broke off");
      if (s.edges_[e2].length == ell) {
        if (s.edges_[e2].fast_link.valid()) {
          result = s.edges_[e2].fast_link;
          break;
        }
        cur = e2;
        continue;
      }
      if (s.edges_[e2].length > ell)
        throw InvariantViolation("suffix-link edge longer than edge " + std::to_string(start));
      NodeId t = w;
      Index k = 0;
      while (k < ell) {
        if (t >= s.length_.size())
          throw InvariantViolation("secondary edge inside the fast-link path of edge " + std::to_string(start));
        const EdgeId e3 = s.out_edge(t, text[label_start[start] + k]);
        if (e3 == kNone) throw InvariantViolation("fast-link path of edge " + std::to_string(start) + " missing");
        k += s.edges_[e3].length;
        t = s.edge_tree_node_[e3];
      }
      if (k != ell) throw InvariantViolation("fast-link path of edge " + std::to_string(start) + " overshoots");
      result = {w, t};
      break;
    }
    rep.peak_chain = std::max(rep.peak_chain, chain.size());
    for (EdgeId e : chain) s.edges_[e].fast_link = result;
  }
  s.ancestry_ = AncestryIndex::from_parents(s.tree_parents());
  return s;
}

void SimLCdawg::index() {
  const std::size_t nodes = length_.size();
  edge_begin_.assign(nodes + 1, 0);
  for (const SimEdge& e : edges_) {
    if (e.src >= nodes || e.dest >= nodes) throw CorruptIndex("edge endpoint out of range");
    ++edge_begin_[e.src + 1];
  }
  for (std::size_t v = 0; v < nodes; ++v) edge_begin_[v + 1] += edge_begin_[v];
  for (EdgeId e = 1; e < edges_.size(); ++e) {
    const SimEdge& a = edges_[e - 1];
    const SimEdge& b = edges_[e];
    if (a.src > b.src || (a.src == b.src && a.first >= b.first))
      throw CorruptIndex("edges are not ordered by source and symbol");
  }

  sink_ = kNone;
  for (NodeId v = 0; v < nodes; ++v) {
    if (edge_begin_[v] == edge_begin_[v + 1]) {
      if (sink_ != kNone) throw CorruptIndex("more than one node without out-edges");
      sink_ = v;
    }
  }
  if (sink_ == kNone || length_[sink_] != n_) throw CorruptIndex("no sink of the text length");

  tree_edge_.assign(nodes, kNone);
  edge_tree_node_.assign(edges_.size(), kNone);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const SimEdge& edge = edges_[e];
    if (edge.length == 0 || (edge.primary ? length_[edge.src] + edge.length != length_[edge.dest]
                                          : length_[edge.src] + edge.length >= length_[edge.dest]))
      throw CorruptIndex("length of edge " + std::to_string(e) + " disagrees with its primary flag");
    if (edge.primary) {
      if (tree_edge_[edge.dest] != kNone) throw CorruptIndex("node with two primary in-edges");
      tree_edge_[edge.dest] = e;
      edge_tree_node_[e] = edge.dest;
    } else {
      edge_tree_node_[e] = static_cast<NodeId>(tree_edge_.size());
      tree_edge_.push_back(e);
    }
  }

  std::vector<NodeId> by_length(nodes);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::sort(by_length.begin(), by_length.end(),
            [this](NodeId a, NodeId b) { return length_[a] > length_[b]; });
  path_count_.assign(nodes, 0);
  for (NodeId v : by_length) {
    if (v == sink_) {
      path_count_[v] = 1;
      continue;
    }
    for (EdgeId e = edge_begin_[v]; e < edge_begin_[v + 1]; ++e) path_count_[v] += path_count_[edges_[e].dest];
  }
}

SimLCdawg SimLCdawg::from_parts(std::vector<Index> length, std::vector<std::uint8_t> type2,
                                std::vector<SimEdge> edges, Index n, AncestryIndex ancestry) {
  if (length.empty() || type2.size() != length.size()) throw CorruptIndex("node arrays differ in length");
  if (length[0] != 0) throw CorruptIndex("source must have length 0");
  for (NodeId v = 0; v < length.size(); ++v) {
    if (type2[v] != 0 && length[v] != 1) throw CorruptIndex("type-2 node of length other than 1");
  }
  SimLCdawg s;
  s.length_ = std::move(length);
  s.type2_ = std::move(type2);
  s.edges_ = std::move(edges);
  s.n_ = n;
  s.index();
  const std::size_t tree = s.tree_size();
  for (EdgeId e = 0; e < s.edges_.size(); ++e) {
    const FastLink fl = s.edges_[e].fast_link;
    if (s.edges_[e].plus() && (fl.top >= tree || fl.bottom >= tree))
      throw CorruptIndex("fast link of edge " + std::to_string(e) + " out of range");
  }
  try {
    s.ancestry_ = AncestryIndex::from_parents(s.tree_parents());
  } catch (const InvalidArgument& err) {
    throw CorruptIndex(std::string("primary edges are not a tree: ") + err.what());
  }
  if (!(s.ancestry_ == ancestry)) throw CorruptIndex("euler intervals do not match the tree");
  return s;
}

std::size_t SimLCdawg::type2_count() const {
  return static_cast<std::size_t>(std::count(type2_.begin(), type2_.end(), 1));
}

std::size_t SimLCdawg::fast_link_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const SimEdge& e) { return e.plus(); }));
}

EdgeId SimLCdawg::out_edge(NodeId v, Symbol a) const {
  auto begin = edges_.begin() + edge_begin_[v];
  auto end = edges_.begin() + edge_begin_[v + 1];
  auto it = std::lower_bound(begin, end, a, [](const SimEdge& e, Symbol s) { return e.first < s; });
  return it != end && it->first == a ? static_cast<EdgeId>(it - edges_.begin()) : kNone;
}

std::vector<NodeId> SimLCdawg::tree_parents() const {
  std::vector<NodeId> p(tree_size());
  for (NodeId t = 0; t < p.size(); ++t) p[t] = parent(t);
  return p;
}

std::optional<Locus> SimLCdawg::locate(std::span<const Symbol> pattern, WorkCounter* work) const {
  const auto m = static_cast<Index>(pattern.size());
  WorkCounter local;
  local.limit = static_cast<std::uint64_t>(n_) + 4ull * m + 16;
  std::optional<Locus> result = Locus{source(), kNone, 0};
  NodeId v = source();
  Index pos = 0;
  while (pos < m) {
    const EdgeId e = out_edge(v, pattern[pos]);
    if (e == kNone) {
      result.reset();
      break;
    }
    const SimEdge& edge = edges_[e];
    Index matched = 1;
    if (edge.plus() && pos + 1 < m) {
      const auto r = match_plus_edge<true>(*this, edge_tree_node_[e], pattern, pos, local);
      if (!r) {
        result.reset();
        break;
      }
      matched = *r;
    }
    pos += matched;
    v = edge.dest;
    result = matched == edge.length ? Locus{v, kNone, 0} : Locus{v, e, matched};
  }
  if (work != nullptr) work->fast_link_applications += local.fast_link_applications;
  return result;
}

std::uint64_t SimLCdawg::count(const Locus& locus) const { return path_count_[locus.node]; }

std::vector<Index> SimLCdawg::report(const Locus& locus, Index m, std::size_t* visits) const {
  // Every path from the locus to the sink spells the rest of one suffix that
  // starts with the pattern; its length fixes the occurrence position.
  NodeId start = locus.node;
  Index rest = locus.at_node() ? 0 : edges_[locus.edge].length - locus.offset;
  if (locus.at_node() && is_type2(start)) {
    const SimEdge& only = edges_[edge_begin_[start]];
    rest += only.length;
    start = only.dest;
  }
  std::vector<Index> out;
  std::vector<std::pair<NodeId, Index>> stack{{start, rest}};
  std::size_t visited = 0;
  while (!stack.empty()) {
    const auto [v, r] = stack.back();
    stack.pop_back();
    ++visited;
    if (v == sink_) {
      out.push_back(n_ - m - r + 1);
      continue;
    }
    for (EdgeId e = edge_begin_[v]; e < edge_begin_[v + 1]; ++e) {
      NodeId d = edges_[e].dest;
      Index len = r + edges_[e].length;
      if (is_type2(d)) {
        // Out-degree 1: step over it so every expanded node branches.
        len += edges_[edge_begin_[d]].length;
        d = edges_[edge_begin_[d]].dest;
      }
      stack.emplace_back(d, len);
    }
  }
  if (visits != nullptr) *visits = visited;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Symbol> SimLCdawg::extract_label(EdgeId e, WorkCounter* work) const {
  WorkCounter local;
  local.limit = n_;
  auto label = extract_edge_label(*this, edge_tree_node_[e], edges_[e].length, local);
  if (work != nullptr) work->fast_link_applications += local.fast_link_applications;
  return label;
}

}  // namespace simidx
