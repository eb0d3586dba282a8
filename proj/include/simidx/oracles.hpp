// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "simidx/cdawg.hpp"
#include "simidx/text.hpp"
#include "simidx/types.hpp"

// Brute-force references. Quadratic or worse; correctness anchors only.

namespace simidx {

struct OracleLimits {
  std::size_t maximal_sets = 500;
  std::size_t trie = 64;
  std::size_t fast_link_check = 200;
};

using SymbolString = std::vector<Symbol>;

/// 1-based start positions of every occurrence, by direct scan.
std::vector<Index> naive_find_all(std::span<const Symbol> text, std::span<const Symbol> pattern);
std::vector<Index> naive_find_all(const Text& text, std::span<const Symbol> pattern);

/// Uncompacted trie of all substrings with per-node extension data.
class NaiveSuffixTrie {
 public:
  /// Throws InvalidArgument if the text is longer than `ceiling`.
  static NaiveSuffixTrie build(const Text& text, std::size_t ceiling, bool record_end_positions);

  [[nodiscard]] std::size_t size() const { return parent_.size(); }
  [[nodiscard]] NodeId parent(NodeId v) const { return parent_[v]; }
  [[nodiscard]] Index depth(NodeId v) const { return depth_[v]; }
  [[nodiscard]] const std::vector<std::pair<Symbol, NodeId>>& children(NodeId v) const { return kids_[v]; }
  [[nodiscard]] NodeId child(NodeId v, Symbol a) const;
  [[nodiscard]] NodeId find(std::span<const Symbol> s) const;
  /// Distinct symbols preceding occurrences (every symbol for the root).
  [[nodiscard]] const std::vector<Symbol>& left(NodeId v) const { return left_[v]; }
  [[nodiscard]] bool is_prefix(NodeId v) const { return prefix_[v] != 0; }
  [[nodiscard]] bool is_suffix(NodeId v) const { return suffix_[v] != 0; }
  /// Exclusive end positions of the occurrences, if recorded.
  [[nodiscard]] const std::vector<Index>& end_positions(NodeId v) const { return ends_[v]; }
  [[nodiscard]] SymbolString string(NodeId v) const;

  [[nodiscard]] bool right_maximal(NodeId v) const { return kids_[v].size() >= 2 || is_suffix(v); }
  [[nodiscard]] bool left_maximal(NodeId v) const { return left_[v].size() >= 2 || is_prefix(v); }
  [[nodiscard]] bool maximal(NodeId v) const { return right_maximal(v) && left_maximal(v); }

 private:
  std::vector<NodeId> parent_;
  std::vector<Index> depth_;
  std::vector<Symbol> symbol_;
  std::vector<std::vector<std::pair<Symbol, NodeId>>> kids_;
  std::vector<std::vector<Symbol>> left_;
  std::vector<std::uint8_t> prefix_;
  std::vector<std::uint8_t> suffix_;
  std::vector<std::vector<Index>> ends_;
};

/// Right-maximal, left-maximal and maximal substrings, each sorted.
struct MaximalSets {
  std::vector<SymbolString> right;
  std::vector<SymbolString> left;
  std::vector<SymbolString> maximal;
};

MaximalSets maximal_sets(const Text& text, const OracleLimits& limits = {});
ECounts brute_e_counts(const Text& text, const OracleLimits& limits = {});

struct TrieReference {
  /// Right-maximal substrings: the suffix-tree node strings, sorted.
  std::vector<SymbolString> suffix_tree_nodes;
  /// Right-maximal substrings grouped by end-position set; each class and
  /// the list of classes sorted.
  std::vector<std::vector<SymbolString>> cdawg_classes;
  /// Right-maximal substrings plus quasi right-maximal ones, sorted.
  std::vector<SymbolString> lstrie_nodes;
  std::size_t trie_size = 0;
};

TrieReference build_trie_and_minimize(const Text& text, const OracleLimits& limits = {});

}  // namespace simidx
