// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "simidx/cdawg.hpp"
#include "simidx/oracles.hpp"
#include "support.hpp"

using namespace simidx;
using simidx::testing::for_each_string;
using simidx::testing::random_text;
using simidx::testing::substring;

namespace {

std::vector<std::vector<SymbolString>> cdawg_classes(const Cdawg& c, const SuffixTree& st, const Text& t) {
  std::map<NodeId, std::vector<SymbolString>> by_class;
  for (NodeId v = 0; v < st.size(); ++v)
    by_class[c.st_class()[v]].push_back(substring(t, st.str_start(v), st.depth(v)));
  std::vector<std::vector<SymbolString>> out;
  for (auto& [_, strings] : by_class) {
    std::sort(strings.begin(), strings.end());
    out.push_back(std::move(strings));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("abaabc$") {
  const Text t = ingest("abaabc", true);
  const Cdawg c = Cdawg::build(t);
  CHECK(c.node_count() == 4);
  CHECK(c.edge_count() == 8);
  CHECK(c.primary_count() == 3);
  CHECK(c.length(c.sink()) == 7);
  CHECK(c.path_count(Cdawg::source()) == 7);
  CHECK(c.path_count(c.sink()) == 1);
  CHECK(c.height_slt() == 1);
  CHECK(e_counts(t) == ECounts{7, 8});
  CHECK(brute_e_counts(t) == ECounts{7, 8});
}

TEST_CASE("single symbol and unary") {
  const Text a = ingest("a", false);
  REQUIRE(a.terminated());
  CHECK(e_counts(a) == ECounts{1, 1});
  CHECK(e_counts(ingest("a", true)) == ECounts{2, 2});
  const Text u = ingest("aaaa", true);
  const Cdawg c = Cdawg::build(u);
  CHECK(c.edge_count() == brute_e_counts(u).e_r);
}

TEST_CASE("lemma52 extension counts") {
  FamilyParams p;
  p.size = 2;
  CHECK(brute_e_counts(gen_family(Family::lemma52, p)) == ECounts{7, 7});
  // 1..i occurs after bars i..k, so it has k-i+1 left extensions.
  for (std::size_t k = 1; k <= 12; ++k) {
    p.size = k;
    const Text t = gen_family(Family::lemma52, p);
    CHECK(e_counts(t) == ECounts{2 * k + 1 + (k - 1) * (k + 2) / 2, 4 * k - 1});
  }
  p.size = 10;
  CHECK(e_counts(gen_family(Family::lemma52, p)) == ECounts{75, 39});
}

TEST_CASE("nodes are the maximal substrings and classes match end positions") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const Text t = random_text(rng, 1 + rng() % 25, 1 + rng() % 4, true);
    const SuffixTree st = SuffixTree::build(t);
    const Cdawg c = Cdawg::build(st, t, left_extensions(st, t));
    const TrieReference ref = build_trie_and_minimize(t);
    CHECK(cdawg_classes(c, st, t) == ref.cdawg_classes);
    CHECK(c.node_count() == maximal_sets(t).maximal.size());
    CHECK(c.edge_count() == brute_e_counts(t).e_r);
    CHECK(c.primary_count() + 1 == c.node_count());
    CHECK(e_counts(t) == brute_e_counts(t));
  }
}

TEST_CASE("edge structure") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const Text t = random_text(rng, 1 + rng() % 50, 1 + rng() % 4, true);
    const Cdawg c = Cdawg::build(t);
    std::uint64_t sink_paths = 0;
    for (EdgeId e = 0; e < c.edge_count(); ++e) {
      const CdawgEdge& x = c.edge(e);
      CHECK(x.length >= 1);
      CHECK(c.length(x.src) + x.length <= c.length(x.dest));
      CHECK(x.primary == (c.length(x.src) + x.length == c.length(x.dest)));
      CHECK(t[x.label_start] == x.first);
      CHECK(c.out_edge(x.src, x.first) == e);
    }
    for (NodeId v = 0; v < c.node_count(); ++v)
      for (EdgeId e = c.edges_begin(v); e + 1 < c.edges_end(v); ++e) CHECK(c.edge(e).first < c.edge(e + 1).first);
    sink_paths = c.path_count(Cdawg::source());
    CHECK(sink_paths == t.size());
    CHECK(c.length(c.sink()) == t.size());

    const Lpt tree = lpt(c);
    std::size_t roots = 0;
    for (NodeId v = 0; v < c.node_count(); ++v) {
      if (tree.parent[v] == kNone) {
        ++roots;
        continue;
      }
      const CdawgEdge& pe = c.edge(tree.parent_edge[v]);
      CHECK(pe.primary);
      CHECK(pe.dest == v);
      CHECK(tree.parent[v] < v);
    }
    CHECK(roots == 1);
  }
}

TEST_CASE("minimality over every short binary string") {
  for (std::size_t n = 1; n <= 8; ++n)
    for_each_string(n, 2, [&](const std::vector<std::int32_t>& codes) {
      const Text t = Text::from_codes(codes, true);
      const SuffixTree st = SuffixTree::build(t);
      const Cdawg c = Cdawg::build(st, t, left_extensions(st, t));
      CHECK(cdawg_classes(c, st, t) == build_trie_and_minimize(t).cdawg_classes);
    });
}

TEST_CASE("dropping text references") {
  Cdawg c = Cdawg::build(ingest("abaabc", true));
  c.drop_text_references();
  for (const auto& e : c.edges()) CHECK(e.label_start == kNone);
}
