// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "simidx/oracles.hpp"
#include "simidx/sim_lstrie.hpp"
#include "simidx/text.hpp"

namespace simidx::testing {

/// Random text of length n over the first sigma letters.
inline Text random_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma, bool terminate) {
  std::vector<std::int32_t> codes(n);
  for (auto& c : codes) c = 'a' + static_cast<std::int32_t>(rng() % sigma);
  return Text::from_codes(codes, terminate);
}

/// Pattern bytes mapped through the text alphabet; the end-marker is '$'.
inline SymbolString encode(const Text& text, std::string_view s) {
  SymbolString out;
  for (const char ch : s) {
    const std::int32_t code = ch == '$' ? kSentinelCode : static_cast<unsigned char>(ch);
    out.push_back(*text.alphabet().rank(code));
  }
  return out;
}

inline SymbolString substring(const Text& text, std::size_t start, std::size_t length) {
  const auto s = text.symbols();
  return {s.begin() + static_cast<std::ptrdiff_t>(start), s.begin() + static_cast<std::ptrdiff_t>(start + length)};
}

/// String spelled from the root to simplified-trie node v, decoded from the
/// index alone.
inline SymbolString node_string(const SimLSTrie& s, NodeId v) {
  std::vector<NodeId> path;
  for (; v != 0; v = s.tree().parent[v]) path.push_back(v);
  SymbolString out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const auto label = s.extract_label(*it);
    out.insert(out.end(), label.begin(), label.end());
  }
  return out;
}

/// Simplified-trie node spelling exactly `str`, or kNone.
inline NodeId find_node(const SimLSTrie& s, const SymbolString& str) {
  for (NodeId v = 0; v < s.size(); ++v)
    if (node_string(s, v) == str) return v;
  return kNone;
}

/// All strings of length n over sigma letters, in lexicographic order.
template <class Fn>
void for_each_string(std::size_t n, std::size_t sigma, Fn fn) {
  std::vector<std::int32_t> codes(n, 'a');
  for (;;) {
    fn(codes);
    std::size_t i = n;
    while (i > 0 && codes[i - 1] == static_cast<std::int32_t>('a' + sigma - 1)) codes[--i] = 'a';
    if (i == 0) return;
    ++codes[i - 1];
  }
}

}  // namespace simidx::testing
