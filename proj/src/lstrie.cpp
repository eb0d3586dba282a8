// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/lstrie.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace simidx {

NodeId LinkedTree::child(NodeId v, Symbol a) const {
  auto kids = children_of(v);
  auto it = std::lower_bound(kids.begin(), kids.end(), a,
                             [this](NodeId c, Symbol s) { return first[c] < s; });
  return it != kids.end() && first[*it] == a ? *it : kNone;
}

std::size_t LinkedTree::type2_count() const {
  return static_cast<std::size_t>(std::count(kind.begin(), kind.end(), NodeKind::kType2));
}

void LinkedTree::index_children() {
  const std::size_t size = parent.size();
  child_begin.assign(size + 1, 0);
  for (NodeId v = 1; v < size; ++v) ++child_begin[parent[v] + 1];
  for (std::size_t v = 0; v < size; ++v) child_begin[v + 1] += child_begin[v];
  children.assign(size > 0 ? size - 1 : 0, kNone);
  std::vector<Index> fill(child_begin.begin(), child_begin.end() - 1);
  for (NodeId v = 1; v < size; ++v) children[fill[parent[v]]++] = v;
}

void LinkedTree::validate() const {
  const std::size_t size = parent.size();
  if (size == 0) throw CorruptIndex("empty tree");
  for (const std::size_t s : {depth.size(), kind.size(), suffix_start.size(), first.size(), plus.size(),
                              fast_link.size()}) {
    if (s != size) throw CorruptIndex("tree arrays differ in length");
  }
  if (parent[0] != kNone || depth[0] != 0) throw CorruptIndex("malformed root");
  for (NodeId v = 1; v < size; ++v) {
    const NodeId p = parent[v];
    if (p >= v) throw CorruptIndex("node " + std::to_string(v) + " is not in preorder");
    if (depth[v] <= depth[p]) throw CorruptIndex("node " + std::to_string(v) + " has no greater depth");
    if ((plus[v] != 0) != (depth[v] - depth[p] >= 2))
      throw CorruptIndex("Plus flag of edge " + std::to_string(v) + " disagrees with depths");
    const FastLink fl = fast_link[v];
    if (plus[v] != 0 && (fl.top >= size || fl.bottom >= size))
      throw CorruptIndex("fast link of edge " + std::to_string(v) + " out of range");
  }
  if (child_begin.size() != size + 1 || children.size() != size - 1) throw CorruptIndex("bad child index");
  for (NodeId v = 0; v < size; ++v) {
    auto kids = children_of(v);
    for (std::size_t j = 0; j < kids.size(); ++j) {
      if (parent[kids[j]] != v) throw CorruptIndex("child index disagrees with parents");
      if (j > 0 && first[kids[j - 1]] >= first[kids[j]]) throw CorruptIndex("children out of symbol order");
    }
  }
}

std::vector<FastLink> chain_fast_links(const LinkedTree& tree, std::span<const NodeId> slink) {
  const std::size_t size = tree.size();
  std::vector<FastLink> fl(size);
  std::vector<NodeId> chain;
  for (NodeId c = 1; c < size; ++c) {
    if (tree.plus[c] == 0 || fl[c].valid()) continue;
    chain.clear();
    FastLink result;
    for (NodeId x = c;;) {
      chain.push_back(x);
      const NodeId u1 = slink[tree.parent[x]];
      const NodeId v1 = slink[x];
      if (u1 == kNone || v1 == kNone)
        throw InvariantViolation("suffix-link chain of edge " + std::to_string(c) + " reached the root");
      if (tree.parent[v1] != u1) {
        result = {u1, v1};
        break;
      }
      if (fl[v1].valid()) {
        result = fl[v1];
        break;
      }
      x = v1;
    }
    for (NodeId x : chain) fl[x] = result;
  }
  return fl;
}

namespace detail {

LinkedTree assemble(const SuffixTree& st, const Text& text, std::vector<Insertion> insertions,
                    std::vector<NodeId>& slink) {
  std::sort(insertions.begin(), insertions.end(), [](const Insertion& a, const Insertion& b) {
    return std::tie(a.below, a.depth) < std::tie(b.below, b.depth);
  });
  insertions.erase(std::unique(insertions.begin(), insertions.end(),
                               [](const Insertion& a, const Insertion& b) {
                                 return a.below == b.below && a.depth == b.depth;
                               }),
                   insertions.end());

  const std::size_t size = st.size() + insertions.size();
  LinkedTree t;
  t.parent.reserve(size);
  t.depth.reserve(size);
  t.kind.reserve(size);
  t.suffix_start.reserve(size);
  t.first.reserve(size);
  t.plus.reserve(size);
  std::vector<NodeId> slink_st;  // suffix links as suffix-tree node ids
  slink_st.reserve(size);
  std::vector<NodeId> id_of(st.size(), kNone);

  auto emit = [&](NodeId parent, Index depth, NodeKind kind, Index suffix, NodeId below, NodeId sl) {
    t.parent.push_back(parent);
    t.depth.push_back(depth);
    t.kind.push_back(kind);
    t.suffix_start.push_back(suffix);
    if (parent == kNone) {
      t.first.push_back(kNone);
      t.plus.push_back(0);
    } else {
      t.first.push_back(text[st.str_start(below) + t.depth[parent]]);
      t.plus.push_back(depth - t.depth[parent] >= 2 ? 1 : 0);
    }
    slink_st.push_back(sl);
    return static_cast<NodeId>(t.parent.size() - 1);
  };

  std::size_t next = 0;
  for (NodeId y = 0; y < st.size(); ++y) {
    NodeId parent = y == 0 ? kNone : id_of[st.parent(y)];
    for (; next < insertions.size() && insertions[next].below == y; ++next) {
      const Insertion& ins = insertions[next];
      if (ins.depth <= t.depth[parent] || ins.depth >= st.depth(y))
        throw InvariantViolation("inserted node is not strictly inside its edge");
      parent = emit(parent, ins.depth, NodeKind::kType2, kNone, y, ins.slink);
    }
    id_of[y] = emit(parent, st.depth(y), NodeKind::kType1, st.suffix_start(y), y, st.slink(y));
  }
  if (next != insertions.size()) throw InvariantViolation("insertion below an unknown node");

  slink.assign(size, kNone);
  for (NodeId v = 1; v < size; ++v) slink[v] = id_of[slink_st[v]];
  t.fast_link.assign(size, FastLink{});
  t.index_children();
  return t;
}

}  // namespace detail

LSTrie LSTrie::build(const SuffixTree& st, const Text& text) {
  return build(st, text, left_extensions(st, text));
}

LSTrie LSTrie::build(const SuffixTree& st, const Text& text, const LeftExtensions& ext) {
  // Each soft Weiner pair (v, a) names the string a·str(v); locate its edge
  // offline by walking the suffix tree in preorder with the current path.
  struct Query {
    NodeId at;  // node spelling a suffix that starts with a·str(v)
    Index depth;
    NodeId slink;
  };
  std::vector<Query> queries;
  for (const SoftWeinerPair& p : soft_weiner_pairs(st, text, ext))
    queries.push_back({st.node_of_suffix(p.witness - 1), st.depth(p.node) + 1, p.node});
  std::sort(queries.begin(), queries.end(), [](const Query& a, const Query& b) { return a.at < b.at; });

  std::vector<detail::Insertion> insertions;
  insertions.reserve(queries.size());
  std::vector<NodeId> path;
  std::size_t q = 0;
  for (NodeId y = 0; y < st.size(); ++y) {
    while (!path.empty() && path.back() != st.parent(y)) path.pop_back();
    path.push_back(y);
    for (; q < queries.size() && queries[q].at == y; ++q) {
      const Index d = queries[q].depth;
      auto it = std::lower_bound(path.begin(), path.end(), d,
                                 [&st](NodeId x, Index depth) { return st.depth(x) < depth; });
      if (it == path.end() || st.depth(*it) == d)
        throw InvariantViolation("soft Weiner link target is explicit or missing");
      insertions.push_back({*it, d, queries[q].slink});
    }
  }

  LSTrie lst;
  lst.n_ = static_cast<Index>(text.size());
  lst.tree_ = detail::assemble(st, text, std::move(insertions), lst.slink_);
  lst.tree_.fast_link = chain_fast_links(lst.tree_, lst.slink_);
  return lst;
}

bool LSTrie::contains(std::span<const Symbol> pattern, WorkCounter* work) const {
  const auto m = static_cast<Index>(pattern.size());
  WorkCounter local;
  local.limit = static_cast<std::uint64_t>(n_) + 4ull * m + 16;
  bool found = true;
  NodeId v = 0;
  Index pos = 0;
  while (pos < m) {
    const NodeId c = tree_.child(v, pattern[pos]);
    if (c == kNone) {
      found = false;
      break;
    }
    if (!plus(c) || pos + 1 == m) {
      ++pos;
      v = c;
      continue;
    }
    const auto r = match_plus_edge<false>(*this, c, pattern, pos, local);
    if (!r) {
      found = false;
      break;
    }
    pos += *r;
    v = c;
  }
  if (work != nullptr) work->fast_link_applications += local.fast_link_applications;
  return found;
}

std::vector<Symbol> LSTrie::extract_label(NodeId edge, WorkCounter* work) const {
  WorkCounter local;
  local.limit = n_;
  auto label = extract_edge_label(*this, edge, tree_.edge_length(edge), local);
  if (work != nullptr) work->fast_link_applications += local.fast_link_applications;
  return label;
}

}  // namespace simidx
