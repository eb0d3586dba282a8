// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "simidx/oracles.hpp"
#include "support.hpp"

using namespace simidx;
using simidx::testing::encode;

namespace {

std::vector<std::string> render_all(const Text& t, const std::vector<SymbolString>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(t.render(s));
  return out;
}

}  // namespace

TEST_CASE("naive scan") {
  const Text t = ingest("abaabc", true);
  CHECK(naive_find_all(t, encode(t, "a")) == std::vector<Index>{1, 3, 4});
  CHECK(naive_find_all(t, encode(t, "ab")) == std::vector<Index>{1, 4});
  CHECK(naive_find_all(t, encode(t, "c$")) == std::vector<Index>{6});
  CHECK(naive_find_all(t, encode(t, "baaa")).empty());
  CHECK(naive_find_all(t, SymbolString{}) == std::vector<Index>{1, 2, 3, 4, 5, 6, 7});
  const std::vector<Symbol> aaaa{0, 0, 0, 0};
  CHECK(naive_find_all(aaaa, std::vector<Symbol>{0, 0}) == std::vector<Index>{1, 2, 3});
  CHECK(naive_find_all(aaaa, std::vector<Symbol>{0, 0, 0, 0, 0}).empty());
}

TEST_CASE("maximal sets of abaabc$") {
  const Text t = ingest("abaabc", true);
  const MaximalSets m = maximal_sets(t);
  CHECK(render_all(t, m.right) ==
        std::vector<std::string>{"", "$", "a", "aabc$", "ab", "abaabc$", "abc$", "b", "baabc$", "bc$", "c$"});
  CHECK(render_all(t, m.maximal) == std::vector<std::string>{"", "a", "ab", "abaabc$"});
  CHECK(m.left.size() >= m.maximal.size());
}

TEST_CASE("extension counts by brute force") {
  CHECK(brute_e_counts(ingest("abaabc", true)) == ECounts{7, 8});
  CHECK(brute_e_counts(ingest("a", true)) == ECounts{2, 2});
  FamilyParams p;
  p.size = 2;
  CHECK(brute_e_counts(gen_family(Family::lemma52, p)) == ECounts{7, 7});
  p.size = 3;
  CHECK(brute_e_counts(gen_family(Family::lemma52, p)) == ECounts{12, 11});
}

TEST_CASE("trie reference for abaabc$") {
  const Text t = ingest("abaabc", true);
  const TrieReference r = build_trie_and_minimize(t);
  CHECK(r.suffix_tree_nodes.size() == 11);
  CHECK(r.lstrie_nodes.size() == 15);
  CHECK(r.cdawg_classes.size() == 4);
  // Root plus 28 substring occurrences less the repeats of a, a, b and ab.
  CHECK(r.trie_size == 25);
}

TEST_CASE("substring trie extension data") {
  const Text t = ingest("abaab", true);
  const NaiveSuffixTrie trie = NaiveSuffixTrie::build(t, 64, true);
  const NodeId ab = trie.find(encode(t, "ab"));
  REQUIRE(ab != kNone);
  CHECK(trie.is_prefix(ab));
  CHECK(trie.left(ab) == std::vector<Symbol>{encode(t, "a")[0]});
  CHECK(trie.left_maximal(ab));
  CHECK(trie.end_positions(ab) == std::vector<Index>{2, 5});
  CHECK(trie.string(ab) == encode(t, "ab"));
  CHECK(trie.find(encode(t, "bb")) == kNone);
}

TEST_CASE("oracle ceilings") {
  const Text t = ingest(std::string(100, 'a'), true);
  CHECK_THROWS_AS(NaiveSuffixTrie::build(t, 64, false), InvalidArgument);
  OracleLimits small;
  small.maximal_sets = 10;
  CHECK_THROWS_AS(maximal_sets(t, small), InvalidArgument);
}
