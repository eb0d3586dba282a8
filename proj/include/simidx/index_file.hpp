// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simidx/sim_lcdawg.hpp"
#include "simidx/sim_lstrie.hpp"
#include "simidx/text.hpp"

// Persistent index files: one JSON document
//   {"format": "simidx", "version": 1, "kind": ..., "n": ..., "terminated": ...,
//    "alphabet": [codes], "nodes": {...}, "edges": {...},
//    "fastlinks": [[edge, top, bottom], ...], "euler": {"entry": [...], "exit": [...]}}
// with node and edge arrays stored column-wise in canonical order. Only the
// stree, lstrie and cdawg kinds carry a "text" array; they are rebuilt from it
// on load and checked against the stored sizes.

namespace simidx {

enum class IndexKind { stree, lstrie, simlst, cdawg, simlcdawg };

std::optional<IndexKind> parse_kind(std::string_view name);
std::string_view kind_name(IndexKind kind);

enum class QueryMode { exists, count, positions };

struct QueryResult {
  bool found = false;
  std::uint64_t count = 0;
  std::vector<Index> positions;  // 1-based, filled in positions mode
};

/// A built index of any kind together with its alphabet.
class IndexFile {
 public:
  static IndexFile build(IndexKind kind, const Text& text);
  static IndexFile load(std::istream& in);
  void save(std::ostream& out) const;

  [[nodiscard]] IndexKind kind() const { return kind_; }
  [[nodiscard]] Index text_size() const { return n_; }
  [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
  [[nodiscard]] std::size_t node_count() const { return nodes_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_; }
  /// One-line size summary, e.g. "nodes=12 edges=11 bound=2n:OK".
  [[nodiscard]] std::string summary() const;

  /// Raw pattern bytes; a byte outside the alphabet means no occurrence.
  /// Throws InvalidArgument for count/positions on an lstrie index.
  [[nodiscard]] QueryResult query(std::string_view pattern, QueryMode mode) const;

  [[nodiscard]] const SimLSTrie* simlst() const { return simlst_ ? &*simlst_ : nullptr; }
  [[nodiscard]] const SimLCdawg* simlcdawg() const { return simlcdawg_ ? &*simlcdawg_ : nullptr; }

 private:
  void rebuild_from_text();

  IndexKind kind_ = IndexKind::simlst;
  Alphabet alphabet_;
  Index n_ = 0;
  bool terminated_ = false;
  std::size_t nodes_ = 0;
  std::size_t edges_ = 0;
  std::optional<Text> text_;
  std::optional<SuffixTree> stree_;
  std::optional<LSTrie> lstrie_;
  std::optional<Cdawg> cdawg_;
  std::optional<SimLSTrie> simlst_;
  std::optional<SimLCdawg> simlcdawg_;
};

}  // namespace simidx
