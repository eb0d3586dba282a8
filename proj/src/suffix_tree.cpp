// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/suffix_tree.hpp"

#include <algorithm>
#include <utility>

namespace simidx {
namespace {

// Ukkonen's online construction over a sequence whose last symbol is unique.
class Ukkonen {
 public:
  explicit Ukkonen(std::span<const Symbol> seq) : seq_(seq) {
    const std::size_t cap = 2 * seq.size() + 1;
    start_.reserve(cap);
    end_.reserve(cap);
    link_.reserve(cap);
    suffix_.reserve(cap);
    kids_.reserve(cap);
    new_node(0, 0, kNone);
  }

  void run() {
    constexpr NodeId root = 0;
    NodeId active_node = root;
    Index active_edge = 0;
    Index active_length = 0;
    Index remainder = 0;
    const auto n = static_cast<Index>(seq_.size());
    for (Index i = 0; i < n; ++i) {
      leaf_end_ = i + 1;
      ++remainder;
      NodeId last_new = kNone;
      while (remainder > 0) {
        if (active_length == 0) active_edge = i;
        const NodeId next = find(active_node, seq_[active_edge]);
        if (next == kNone) {
          const NodeId leaf = new_node(i, kNone, i - remainder + 1);
          set_child(active_node, seq_[i], leaf);
          if (last_new != kNone) {
            link_[last_new] = active_node;
            last_new = kNone;
          }
        } else {
          const Index len = edge_length(next);
          if (active_length >= len) {
            active_edge += len;
            active_length -= len;
            active_node = next;
            continue;
          }
          if (seq_[start_[next] + active_length] == seq_[i]) {
            if (last_new != kNone && active_node != root) {
              link_[last_new] = active_node;
              last_new = kNone;
            }
            ++active_length;
            break;
          }
          const NodeId split = new_node(start_[next], start_[next] + active_length, kNone);
          set_child(active_node, seq_[active_edge], split);
          const NodeId leaf = new_node(i, kNone, i - remainder + 1);
          set_child(split, seq_[i], leaf);
          start_[next] += active_length;
          set_child(split, seq_[start_[next]], next);
          if (last_new != kNone) link_[last_new] = split;
          last_new = split;
        }
        --remainder;
        if (active_node == root && active_length > 0) {
          --active_length;
          active_edge = i - remainder + 1;
        } else if (active_node != root) {
          active_node = link_[active_node];
        }
      }
    }
  }

  [[nodiscard]] Index start(NodeId v) const { return start_[v]; }
  [[nodiscard]] Index edge_length(NodeId v) const {
    return (end_[v] == kNone ? leaf_end_ : end_[v]) - start_[v];
  }
  [[nodiscard]] bool is_leaf(NodeId v) const { return end_[v] == kNone; }
  [[nodiscard]] NodeId link(NodeId v) const { return link_[v]; }
  [[nodiscard]] Index suffix(NodeId v) const { return suffix_[v]; }
  [[nodiscard]] const std::vector<std::pair<Symbol, NodeId>>& kids(NodeId v) const { return kids_[v]; }
  [[nodiscard]] std::size_t size() const { return start_.size(); }

 private:
  NodeId new_node(Index start, Index end, Index suffix) {
    start_.push_back(start);
    end_.push_back(end);
    link_.push_back(0);
    suffix_.push_back(suffix);
    kids_.emplace_back();
    return static_cast<NodeId>(start_.size() - 1);
  }

  NodeId find(NodeId v, Symbol c) const {
    const auto& k = kids_[v];
    auto it = std::lower_bound(k.begin(), k.end(), c,
                               [](const auto& p, Symbol s) { return p.first < s; });
    return it != k.end() && it->first == c ? it->second : kNone;
  }

  void set_child(NodeId v, Symbol c, NodeId w) {
    auto& k = kids_[v];
    auto it = std::lower_bound(k.begin(), k.end(), c,
                               [](const auto& p, Symbol s) { return p.first < s; });
    if (it != k.end() && it->first == c) {
      it->second = w;
    } else {
      k.insert(it, {c, w});
    }
  }

  std::span<const Symbol> seq_;
  Index leaf_end_ = 0;
  std::vector<Index> start_;
  std::vector<Index> end_;
  std::vector<NodeId> link_;
  std::vector<Index> suffix_;
  std::vector<std::vector<std::pair<Symbol, NodeId>>> kids_;
};

}  // namespace

SuffixTree SuffixTree::build(const Text& text) {
  const auto n = static_cast<Index>(text.size());
  if (n == 0) throw InvalidArgument("cannot build a suffix tree of an empty text");
  const bool weiner = !text.terminated();

  // An unterminated text gets a private end symbol above the alphabet; its
  // leaves are dropped afterwards, which leaves the Weiner tree.
  std::vector<Symbol> seq(text.symbols().begin(), text.symbols().end());
  if (weiner) seq.push_back(static_cast<Symbol>(text.sigma()));
  const auto seq_len = static_cast<Index>(seq.size());

  Ukkonen uk(seq);
  uk.run();

  SuffixTree st;
  const std::size_t cap = uk.size();
  st.parent_.reserve(cap);
  st.depth_.reserve(cap);
  st.suffix_start_.reserve(cap);
  st.edge_first_.reserve(cap);
  st.node_of_suffix_.assign(n, kNone);
  std::vector<NodeId> new_id(uk.size(), kNone);

  struct Frame {
    NodeId old;
    NodeId parent;
  };
  std::vector<Frame> stack{{0, kNone}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const auto id = static_cast<NodeId>(st.parent_.size());
    new_id[f.old] = id;
    st.parent_.push_back(f.parent);
    if (f.parent == kNone) {
      st.depth_.push_back(0);
      st.edge_first_.push_back(kNone);
    } else {
      Index len = uk.edge_length(f.old);
      if (weiner && uk.is_leaf(f.old)) --len;
      st.depth_.push_back(st.depth_[f.parent] + len);
      st.edge_first_.push_back(seq[uk.start(f.old)]);
    }
    if (uk.is_leaf(f.old)) {
      st.suffix_start_.push_back(uk.suffix(f.old));
      st.node_of_suffix_[uk.suffix(f.old)] = id;
    } else {
      st.suffix_start_.push_back(kNone);
    }
    const auto& kids = uk.kids(f.old);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      const NodeId kid = it->second;
      if (weiner && uk.is_leaf(kid) && uk.start(kid) == seq_len - 1) {
        // End-symbol leaf: str(f.old) is a repeating suffix.
        if (f.parent != kNone) {
          st.suffix_start_[id] = uk.suffix(kid);
          st.node_of_suffix_[uk.suffix(kid)] = id;
        }
        continue;
      }
      stack.push_back({kid, id});
    }
  }

  const std::size_t size = st.parent_.size();
  st.child_begin_.assign(size + 1, 0);
  for (NodeId v = 1; v < size; ++v) ++st.child_begin_[st.parent_[v] + 1];
  for (std::size_t v = 0; v < size; ++v) st.child_begin_[v + 1] += st.child_begin_[v];
  st.children_.resize(size - 1);
  {
    std::vector<Index> fill(st.child_begin_.begin(), st.child_begin_.end() - 1);
    for (NodeId v = 1; v < size; ++v) st.children_[fill[st.parent_[v]]++] = v;
  }

  st.str_start_.assign(size, 0);
  for (std::size_t k = size; k-- > 0;) {
    const auto v = static_cast<NodeId>(k);
    st.str_start_[v] = st.suffix_start_[v] != kNone ? st.suffix_start_[v]
                                                    : st.str_start_[st.children_[st.child_begin_[v]]];
  }

  st.slink_.assign(size, kNone);
  for (NodeId old = 1; old < uk.size(); ++old) {
    const NodeId v = new_id[old];
    if (v == kNone || uk.is_leaf(old)) continue;
    st.slink_[v] = new_id[uk.link(old)];
  }
  for (NodeId v = 1; v < size; ++v) {
    if (!st.is_leaf(v)) continue;
    const Index i = st.suffix_start_[v];
    st.slink_[v] = i + 1 < n ? st.node_of_suffix_[i + 1] : root();
  }
  return st;
}

NodeId SuffixTree::child(NodeId v, Symbol symbol) const {
  auto kids = children(v);
  auto it = std::lower_bound(kids.begin(), kids.end(), symbol,
                             [this](NodeId c, Symbol s) { return edge_first_[c] < s; });
  return it != kids.end() && edge_first_[*it] == symbol ? *it : kNone;
}

std::optional<Symbol> LeftExtensions::unique_predecessor(NodeId v) const {
  if (begin[v + 1] - begin[v] != 1) return std::nullopt;
  return symbols[begin[v]];
}

LeftExtensions left_extensions(const SuffixTree& st, const Text& text) {
  const std::size_t size = st.size();
  struct Entry {
    Symbol symbol;
    Index witness;
  };
  std::vector<std::vector<Entry>> sets(size);
  LeftExtensions ext;
  ext.prefix.assign(size, 0);

  // Children carry larger preorder ids, so a reverse sweep is bottom-up. The
  // sets total O(n) entries: one per hard or soft Weiner link.
  for (std::size_t k = size; k-- > 1;) {
    const auto v = static_cast<NodeId>(k);
    std::vector<Entry> merged;
    if (const Index i = st.suffix_start(v); i != kNone) {
      if (i == 0) {
        ext.prefix[v] = 1;
      } else {
        merged.push_back({text[i - 1], i});
      }
    }
    for (NodeId c : st.children(v)) {
      ext.prefix[v] |= ext.prefix[c];
      merged.insert(merged.end(), sets[c].begin(), sets[c].end());
    }
    std::stable_sort(merged.begin(), merged.end(),
                     [](const Entry& a, const Entry& b) { return a.symbol < b.symbol; });
    merged.erase(std::unique(merged.begin(), merged.end(),
                             [](const Entry& a, const Entry& b) { return a.symbol == b.symbol; }),
                 merged.end());
    sets[v] = std::move(merged);
  }

  // The empty string occurs at every position, so every symbol precedes it.
  ext.prefix[0] = 1;
  {
    std::vector<Index> first(text.sigma(), kNone);
    for (Index p = 0; p < text.size(); ++p)
      if (first[text[p]] == kNone) first[text[p]] = p;
    for (Symbol a = 0; a < text.sigma(); ++a) sets[0].push_back({a, first[a] + 1});
  }

  ext.begin.assign(size + 1, 0);
  for (std::size_t v = 0; v < size; ++v)
    ext.begin[v + 1] = ext.begin[v] + static_cast<Index>(sets[v].size());
  ext.symbols.reserve(ext.begin[size]);
  ext.witness.reserve(ext.begin[size]);
  for (const auto& set : sets) {
    for (const auto& e : set) {
      ext.symbols.push_back(e.symbol);
      ext.witness.push_back(e.witness);
    }
  }
  return ext;
}

std::vector<SoftWeinerPair> soft_weiner_pairs(const SuffixTree& st, const Text& text,
                                              const LeftExtensions& ext) {
  // Hard Weiner links: (slink(w), first symbol of str(w)) for every w != root.
  std::vector<std::pair<NodeId, Symbol>> hard;
  hard.reserve(st.size());
  for (NodeId w = 1; w < st.size(); ++w) hard.emplace_back(st.slink(w), text[st.str_start(w)]);
  std::sort(hard.begin(), hard.end());

  std::vector<SoftWeinerPair> out;
  for (NodeId v = 0; v < st.size(); ++v) {
    auto pre = ext.preceding(v);
    for (std::size_t j = 0; j < pre.size(); ++j) {
      const std::pair<NodeId, Symbol> key{v, pre[j]};
      if (!std::binary_search(hard.begin(), hard.end(), key))
        out.push_back({v, pre[j], ext.witness[ext.begin[v] + j]});
    }
  }
  return out;
}

std::vector<SoftWeinerPair> soft_weiner_pairs(const SuffixTree& st, const Text& text) {
  return soft_weiner_pairs(st, text, left_extensions(st, text));
}

std::optional<StLocus> locate_with_text(const SuffixTree& st, const Text& text,
                                        std::span<const Symbol> pattern) {
  NodeId v = SuffixTree::root();
  std::size_t matched = 0;
  while (matched < pattern.size()) {
    const NodeId c = st.child(v, pattern[matched]);
    if (c == kNone) return std::nullopt;
    const Index label = st.str_start(c) + st.depth(v);
    const Index len = st.edge_length(c);
    Index j = 0;
    while (j < len && matched < pattern.size()) {
      if (text[label + j] != pattern[matched]) return std::nullopt;
      ++j;
      ++matched;
    }
    if (j < len) return StLocus{c, static_cast<Index>(matched)};
    v = c;
  }
  return StLocus{v, static_cast<Index>(matched)};
}

}  // namespace simidx
