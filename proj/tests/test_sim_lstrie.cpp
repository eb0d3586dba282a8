// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "simidx/lstrie.hpp"
#include "simidx/sim_lstrie.hpp"
#include "simidx/verify.hpp"
#include "support.hpp"

using namespace simidx;
using simidx::testing::encode;
using simidx::testing::find_node;
using simidx::testing::random_text;
using simidx::testing::substring;

namespace {

SimLSTrie build(const Text& t) { return SimLSTrie::build_direct(SuffixTree::build(t), t); }

}  // namespace

TEST_CASE("abaabc$ sizes and queries") {
  const Text t = ingest("abaabc", true);
  const SimLSTrie s = build(t);
  CHECK(s.size() == 12);
  CHECK(s.edge_count() == 11);
  CHECK(s.tree().type2_count() == 1);
  auto loc = s.locate(encode(t, "baab"));
  REQUIRE(loc);
  CHECK(s.report(*loc) == std::vector<Index>{2});
  CHECK_FALSE(s.locate(encode(t, "baaa")));
  loc = s.locate(encode(t, "a"));
  REQUIRE(loc);
  CHECK(s.report(*loc) == std::vector<Index>{1, 3, 4});
  loc = s.locate({});
  REQUIRE(loc);
  CHECK(s.count(*loc) == 7);
}

TEST_CASE("abaabc$ modified fast links") {
  const Text t = ingest("abaabc", true);
  const SimLSTrie s = build(t);
  const NodeId r = 0;
  const NodeId u = find_node(s, encode(t, "ab"));
  const NodeId tt = find_node(s, encode(t, "b"));
  const NodeId sn = find_node(s, encode(t, "a"));
  auto leaf = [&](Index i) { return find_node(s, substring(t, i - 1, t.size() - i + 1)); };
  auto link = [&](NodeId top, NodeId leaf_node) {
    REQUIRE(s.parent(leaf_node) == top);
    return s.fast_link(leaf_node);
  };
  CHECK(link(u, leaf(1)) == FastLink{r, leaf(3)});
  CHECK(link(tt, leaf(2)) == FastLink{r, leaf(3)});
  CHECK(link(sn, leaf(3)) == FastLink{r, leaf(4)});
  CHECK(link(u, leaf(4)) == FastLink{r, leaf(6)});
  CHECK(link(tt, leaf(5)) == FastLink{r, leaf(6)});
}

TEST_CASE("tight and degenerate instances") {
  FamilyParams p;
  p.size = 4;
  const Text d = gen_family(Family::all_distinct, p);
  CHECK(build(d).size() == 8);
  CHECK(soft_weiner_pairs(SuffixTree::build(d), d).size() == 3);
  for (std::size_t n : {4u, 8u, 16u}) {
    p.size = n;
    CHECK(build(gen_family(Family::all_distinct, p)).size() == 2 * n);
  }
  CHECK(build(ingest("aaaa", false)).size() == 5);
  CHECK(build(ingest("a", false)).size() == 2);
}

TEST_CASE("both constructions agree and respect the size bound") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const Text t = random_text(rng, 1 + rng() % 60, 1 + rng() % 5, trial % 2 == 0);
    const SuffixTree st = SuffixTree::build(t);
    const LSTrie lst = LSTrie::build(st, t);
    const SimLSTrie a = SimLSTrie::build_direct(st, t);
    const SimLSTrie b = SimLSTrie::build_from_lstrie(lst);
    CHECK(a == b);
    CHECK(a.size() <= 2 * t.size());
    CHECK(a.size() <= lst.size());
    a.tree().validate();
  }
}

TEST_CASE("labels and fast-link definitions") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const Text t = random_text(rng, 1 + rng() % 40, 1 + rng() % 4, trial % 2 == 0);
    const SimLSTrie s = build(t);
    const auto truth = simlst_labels(s, t);
    for (NodeId v = 1; v < s.size(); ++v) {
      WorkCounter work;
      CHECK(s.extract_label(v, &work) == truth[v]);
      CHECK(work.fast_link_applications <= truth[v].size());
    }
    CHECK(simlst_fast_link_violations(s, t).empty());
  }
}

TEST_CASE("locate and report match the naive scan") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Text t = random_text(rng, 1 + rng() % 80, 1 + rng() % 4, trial % 2 == 0);
    const SimLSTrie s = build(t);
    for (int q = 0; q < 40; ++q) {
      const SymbolString p = sample_pattern(t, rng, 12);
      WorkCounter work;
      const auto loc = s.locate(p, &work);
      const auto expect = naive_find_all(t, p);
      CHECK(work.fast_link_applications <= 2 * p.size());
      if (expect.empty()) {
        CHECK_FALSE(loc.has_value());
      } else {
        REQUIRE(loc.has_value());
        CHECK(s.report(*loc) == expect);
      }
    }
  }
}

TEST_CASE("reassembly from parts") {
  const Text t = ingest("mississippi", true);
  const SimLSTrie s = build(t);
  const SimLSTrie r = SimLSTrie::from_parts(s.tree(), s.text_size(), s.ancestry());
  CHECK(r == s);
  LinkedTree broken = s.tree();
  broken.depth[3] += 1;
  CHECK_THROWS_AS(SimLSTrie::from_parts(broken, s.text_size(), s.ancestry()), CorruptIndex);
}

TEST_CASE("a self-referencing fast link is detected") {
  const Text t = ingest("abaabc", true);
  SimLSTrie s = build(t);
  NodeId plus = kNone;
  for (NodeId v = 1; v < s.size() && plus == kNone; ++v)
    if (s.plus(v)) plus = v;
  REQUIRE(plus != kNone);
  s.override_fast_link(plus, FastLink{s.parent(plus), plus});
  CHECK_THROWS_AS((void)s.extract_label(plus), CorruptIndex);
  CHECK_FALSE(simlst_fast_link_violations(s, t).empty());
}
