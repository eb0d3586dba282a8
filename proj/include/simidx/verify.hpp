// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "simidx/cdawg.hpp"
#include "simidx/oracles.hpp"
#include "simidx/sim_lcdawg.hpp"
#include "simidx/sim_lstrie.hpp"
#include "simidx/text.hpp"

namespace simidx {

struct VerifyOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  OracleLimits limits;
  /// Corrupts the fast link of the first Plus-edge of the simplified trie
  /// before checking, to exercise failure reporting.
  bool inject_fault = false;
};

struct VerifyReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Runs every cross-check on one text: size bounds, construction
/// equivalences, label round trips, fast-link definitions, oracle agreement
/// within the configured ceilings, and randomized differential matching.
VerifyReport verify_text(const Text& text, const VerifyOptions& options);

/// Ground-truth label of every simplified-trie edge, indexed by lower node.
std::vector<SymbolString> simlst_labels(const SimLSTrie& s, const Text& text);

/// Smallest-k definition check of every stored modified fast link, with
/// suffix links recovered from node strings. Returns offending edge ids.
std::vector<NodeId> simlst_fast_link_violations(const SimLSTrie& s, const Text& text);

/// Brute-force definition check of the simplified CDAWG fast links: for each
/// Plus-edge, tries every proper suffix of str(u) that is a node, longest
/// first, and descends its label. Returns offending edge ids.
std::vector<EdgeId> simlcdawg_fast_link_violations(const SimLCdawg& s, const Cdawg& c, const Text& text,
                                                   const SimLCdawg::BuildReport& report);

/// Ground-truth label of every simplified-CDAWG edge.
std::vector<SymbolString> simlcdawg_labels(const SimLCdawg& s, const Cdawg& c, const Text& text,
                                           const SimLCdawg::BuildReport& report);

/// One pattern drawn as a substring, a random string, or a substring with one
/// perturbed symbol, with equal probability.
SymbolString sample_pattern(const Text& text, std::mt19937_64& rng, std::size_t max_length);

}  // namespace simidx
