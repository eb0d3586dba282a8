// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/sim_lstrie.hpp"

#include <algorithm>
#include <utility>

namespace simidx {

SimLSTrie SimLSTrie::build_from_lstrie(const LSTrie& lst) {
  const LinkedTree& src = lst.tree();
  auto slink = lst.slinks();
  const std::size_t size = src.size();

  std::vector<NodeId> id_of(size, kNone);
  LinkedTree t;
  for (NodeId x = 0; x < size; ++x) {
    if (src.kind[x] == NodeKind::kType2 && src.depth[x] != 1) continue;
    // The contracted edge starts with the edge below its kept upper end.
    NodeId top = x;
    NodeId p = src.parent[x];
    while (p != kNone && id_of[p] == kNone) {
      top = p;
      p = src.parent[p];
    }
    id_of[x] = static_cast<NodeId>(t.parent.size());
    const NodeId parent = p == kNone ? kNone : id_of[p];
    t.parent.push_back(parent);
    t.depth.push_back(src.depth[x]);
    t.kind.push_back(src.kind[x]);
    t.suffix_start.push_back(src.suffix_start[x]);
    t.first.push_back(src.first[top]);
    t.plus.push_back(parent != kNone && src.depth[x] - src.depth[p] >= 2 ? 1 : 0);
  }

  // Fast links, in source ids: a Plus-edge that lost type-2 nodes is one
  // suffix-link step from its destination; a surviving original edge moves
  // its fast link one step further unless the link already hangs off the root.
  t.fast_link.assign(t.parent.size(), FastLink{});
  for (NodeId x = 1; x < size; ++x) {
    const NodeId nx = id_of[x];
    if (nx == kNone || t.plus[nx] == 0) continue;
    FastLink fl;
    if (id_of[src.parent[x]] == kNone) {
      NodeId p = src.parent[x];
      while (id_of[p] == kNone) p = src.parent[p];
      fl = {slink[p], slink[x]};
    } else {
      const FastLink orig = src.fast_link[x];
      fl = orig.top == 0 ? orig : FastLink{slink[orig.top], slink[orig.bottom]};
    }
    if (!fl.valid() || id_of[fl.top] == kNone || id_of[fl.bottom] == kNone)
      throw InvariantViolation("modified fast link leaves the simplified trie");
    t.fast_link[nx] = {id_of[fl.top], id_of[fl.bottom]};
  }
  t.index_children();

  SimLSTrie s;
  s.n_ = lst.text_size();
  s.tree_ = std::move(t);
  s.ancestry_ = AncestryIndex::from_parents(s.tree_.parent);
  return s;
}

SimLSTrie SimLSTrie::build_direct(const SuffixTree& st, const Text& text) {
  std::vector<detail::Insertion> insertions;
  for (NodeId c : st.children(SuffixTree::root())) {
    if (st.depth(c) >= 2) insertions.push_back({c, 1, SuffixTree::root()});
  }
  std::vector<NodeId> slink;
  SimLSTrie s;
  s.n_ = static_cast<Index>(text.size());
  s.tree_ = detail::assemble(st, text, std::move(insertions), slink);
  s.tree_.fast_link = chain_fast_links(s.tree_, slink);
  s.ancestry_ = AncestryIndex::from_parents(s.tree_.parent);
  return s;
}

SimLSTrie SimLSTrie::from_parts(LinkedTree tree, Index n, AncestryIndex ancestry) {
  tree.index_children();
  tree.validate();
  if (ancestry.size() != tree.size()) throw CorruptIndex("euler intervals do not match the tree");
  for (NodeId v = 0; v < tree.size(); ++v) {
    if (tree.kind[v] == NodeKind::kType2 && tree.depth[v] != 1)
      throw CorruptIndex("type-2 node below depth 1");
    if (tree.suffix_start[v] != kNone && tree.suffix_start[v] >= n)
      throw CorruptIndex("suffix start out of range");
  }
  SimLSTrie s;
  s.tree_ = std::move(tree);
  s.n_ = n;
  s.ancestry_ = std::move(ancestry);
  if (!(s.ancestry_ == AncestryIndex::from_parents(s.tree_.parent)))
    throw CorruptIndex("euler intervals do not match the tree");
  return s;
}

std::optional<Locus> SimLSTrie::locate(std::span<const Symbol> pattern, WorkCounter* work) const {
  const auto m = static_cast<Index>(pattern.size());
  WorkCounter local;
  local.limit = static_cast<std::uint64_t>(n_) + 4ull * m + 16;
  std::optional<Locus> result = Locus{0, kNone, 0};
  NodeId v = 0;
  Index pos = 0;
  while (pos < m) {
    const NodeId c = tree_.child(v, pattern[pos]);
    if (c == kNone) {
      result.reset();
      break;
    }
    Index matched = 1;
    if (plus(c) && pos + 1 < m) {
      const auto r = match_plus_edge<true>(*this, c, pattern, pos, local);
      if (!r) {
        result.reset();
        break;
      }
      matched = *r;
    }
    pos += matched;
    v = c;
    result = matched == tree_.edge_length(c) ? Locus{c, kNone, 0} : Locus{c, c, matched};
  }
  if (work != nullptr) work->fast_link_applications += local.fast_link_applications;
  return result;
}

std::vector<Index> SimLSTrie::report(const Locus& locus) const {
  std::vector<Index> out;
  std::vector<NodeId> stack{locus.node};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (tree_.suffix_start[v] != kNone) out.push_back(tree_.suffix_start[v] + 1);
    for (NodeId c : tree_.children_of(v)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Symbol> SimLSTrie::extract_label(NodeId edge, WorkCounter* work) const {
  WorkCounter local;
  local.limit = n_;
  auto label = extract_edge_label(*this, edge, tree_.edge_length(edge), local);
  if (work != nullptr) work->fast_link_applications += local.fast_link_applications;
  return label;
}

}  // namespace simidx
