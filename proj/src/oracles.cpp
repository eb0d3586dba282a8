// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace simidx {

std::vector<Index> naive_find_all(std::span<const Symbol> text, std::span<const Symbol> pattern) {
  std::vector<Index> out;
  if (pattern.size() > text.size()) return out;
  // The empty pattern occurs at every suffix start 1..n.
  const std::size_t last = pattern.empty() ? text.size() - 1 : text.size() - pattern.size();
  for (std::size_t i = 0; i <= last; ++i) {
    if (std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(i)))
      out.push_back(static_cast<Index>(i + 1));
  }
  return out;
}

std::vector<Index> naive_find_all(const Text& text, std::span<const Symbol> pattern) {
  return naive_find_all(text.symbols(), pattern);
}

NaiveSuffixTrie NaiveSuffixTrie::build(const Text& text, std::size_t ceiling, bool record_end_positions) {
  const std::size_t n = text.size();
  if (n > ceiling)
    throw InvalidArgument("text of length " + std::to_string(n) + " exceeds the oracle ceiling " +
                          std::to_string(ceiling));
  NaiveSuffixTrie t;
  auto add = [&t](NodeId parent, Index depth, Symbol symbol) {
    t.parent_.push_back(parent);
    t.depth_.push_back(depth);
    t.symbol_.push_back(symbol);
    t.kids_.emplace_back();
    t.left_.emplace_back();
    t.prefix_.push_back(0);
    t.suffix_.push_back(0);
    t.ends_.emplace_back();
    return static_cast<NodeId>(t.parent_.size() - 1);
  };
  add(kNone, 0, kNone);
  t.prefix_[0] = 1;
  t.suffix_[0] = 1;
  for (Symbol a = 0; a < text.sigma(); ++a) t.left_[0].push_back(a);
  if (record_end_positions) {
    t.ends_[0].resize(n + 1);
    std::iota(t.ends_[0].begin(), t.ends_[0].end(), 0);
  }

  for (std::size_t i = 0; i < n; ++i) {
    NodeId v = 0;
    for (std::size_t j = i; j < n; ++j) {
      NodeId c = t.child(v, text[j]);
      if (c == kNone) {
        c = add(v, static_cast<Index>(j - i + 1), text[j]);
        auto& kids = t.kids_[v];
        kids.insert(std::lower_bound(kids.begin(), kids.end(), std::pair<Symbol, NodeId>{text[j], 0}),
                    {text[j], c});
      }
      v = c;
      if (i == 0) {
        t.prefix_[v] = 1;
      } else {
        auto& left = t.left_[v];
        auto it = std::lower_bound(left.begin(), left.end(), text[i - 1]);
        if (it == left.end() || *it != text[i - 1]) left.insert(it, text[i - 1]);
      }
      if (record_end_positions) t.ends_[v].push_back(static_cast<Index>(j + 1));
    }
    t.suffix_[v] = 1;
  }
  return t;
}

NodeId NaiveSuffixTrie::child(NodeId v, Symbol a) const {
  const auto& kids = kids_[v];
  auto it = std::lower_bound(kids.begin(), kids.end(), std::pair<Symbol, NodeId>{a, 0});
  return it != kids.end() && it->first == a ? it->second : kNone;
}

NodeId NaiveSuffixTrie::find(std::span<const Symbol> s) const {
  NodeId v = 0;
  for (Symbol a : s) {
    v = child(v, a);
    if (v == kNone) return kNone;
  }
  return v;
}

SymbolString NaiveSuffixTrie::string(NodeId v) const {
  SymbolString s;
  for (; v != 0; v = parent_[v]) s.push_back(symbol_[v]);
  std::reverse(s.begin(), s.end());
  return s;
}

MaximalSets maximal_sets(const Text& text, const OracleLimits& limits) {
  const auto t = NaiveSuffixTrie::build(text, limits.maximal_sets, false);
  MaximalSets out;
  for (NodeId v = 0; v < t.size(); ++v) {
    const bool r = t.right_maximal(v);
    const bool l = t.left_maximal(v);
    if (r) out.right.push_back(t.string(v));
    if (l) out.left.push_back(t.string(v));
    if (r && l) out.maximal.push_back(t.string(v));
  }
  std::sort(out.right.begin(), out.right.end());
  std::sort(out.left.begin(), out.left.end());
  std::sort(out.maximal.begin(), out.maximal.end());
  return out;
}

ECounts brute_e_counts(const Text& text, const OracleLimits& limits) {
  const auto t = NaiveSuffixTrie::build(text, limits.maximal_sets, false);
  ECounts out;
  for (NodeId v = 0; v < t.size(); ++v) {
    if (!t.maximal(v)) continue;
    out.e_r += t.children(v).size();
    out.e_l += t.left(v).size();
  }
  return out;
}

TrieReference build_trie_and_minimize(const Text& text, const OracleLimits& limits) {
  const auto t = NaiveSuffixTrie::build(text, limits.trie, true);
  TrieReference ref;
  ref.trie_size = t.size();
  std::map<std::vector<Index>, std::vector<SymbolString>> classes;
  for (NodeId v = 0; v < t.size(); ++v) {
    const SymbolString s = t.string(v);
    if (t.right_maximal(v)) {
      ref.suffix_tree_nodes.push_back(s);
      ref.lstrie_nodes.push_back(s);
      classes[t.end_positions(v)].push_back(s);
    } else if (v != 0) {
      const NodeId tail = t.find(std::span<const Symbol>(s).subspan(1));
      if (tail != kNone && t.right_maximal(tail)) ref.lstrie_nodes.push_back(s);
    }
  }
  for (auto& [ends, members] : classes) {
    std::sort(members.begin(), members.end());
    ref.cdawg_classes.push_back(std::move(members));
  }
  std::sort(ref.suffix_tree_nodes.begin(), ref.suffix_tree_nodes.end());
  std::sort(ref.lstrie_nodes.begin(), ref.lstrie_nodes.end());
  std::sort(ref.cdawg_classes.begin(), ref.cdawg_classes.end());
  return ref;
}

}  // namespace simidx
