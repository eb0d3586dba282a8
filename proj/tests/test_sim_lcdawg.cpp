// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "simidx/sim_lcdawg.hpp"
#include "simidx/verify.hpp"
#include "support.hpp"

using namespace simidx;
using simidx::testing::encode;
using simidx::testing::random_text;

namespace {

// Edge leaving node src with the given decoded label.
EdgeId find_edge(const SimLCdawg& s, NodeId src, const SymbolString& label) {
  for (EdgeId e = s.edges_begin(src); e < s.edges_end(src); ++e)
    if (s.extract_label(e) == label) return e;
  return kNone;
}

}  // namespace

TEST_CASE("abaabc$ sizes and queries") {
  const Text t = ingest("abaabc", true);
  const Cdawg c = Cdawg::build(t);
  SimLCdawg::BuildReport report;
  const SimLCdawg s = SimLCdawg::build(c, t, &report);
  CHECK(s.node_count() == 5);
  CHECK(s.edge_count() == 9);
  CHECK(s.type2_count() == 1);
  CHECK(s.fast_link_count() == 3);
  CHECK(report.peak_chain <= report.height_slt);

  auto loc = s.locate(encode(t, "baab"));
  REQUIRE(loc);
  CHECK(s.report(*loc, 4) == std::vector<Index>{2});
  CHECK_FALSE(s.locate(encode(t, "baaa")));
  loc = s.locate(encode(t, "a"));
  REQUIRE(loc);
  CHECK(s.count(*loc) == 3);
  CHECK(s.report(*loc, 1) == std::vector<Index>{1, 3, 4});
  loc = s.locate({});
  REQUIRE(loc);
  CHECK(s.count(*loc) == 7);
}

TEST_CASE("abaabc$ modified fast links") {
  const Text t = ingest("abaabc", true);
  const SimLCdawg s = SimLCdawg::build(Cdawg::build(t), t);
  const NodeId R = SimLCdawg::source();
  const NodeId S = s.edge(s.out_edge(R, encode(t, "a")[0])).dest;
  const NodeId U = s.edge(s.out_edge(R, encode(t, "b")[0])).dest;
  const NodeId W = s.edge(s.out_edge(R, encode(t, "c")[0])).dest;
  const EdgeId S_A = find_edge(s, S, encode(t, "abc$"));
  const EdgeId U_Z = find_edge(s, U, encode(t, "aabc$"));
  const EdgeId U_B = find_edge(s, U, encode(t, "c$"));
  const EdgeId W_C = find_edge(s, W, encode(t, "$"));
  REQUIRE(S_A != kNone);
  REQUIRE(U_Z != kNone);
  REQUIRE(U_B != kNone);
  REQUIRE(W_C != kNone);
  CHECK(s.is_type2(W));
  // Secondary edges end in detached leaves of the decoding tree.
  const NodeId A = s.tree_node_of_edge(S_A);
  const NodeId B = s.tree_node_of_edge(U_B);
  const NodeId C = s.tree_node_of_edge(W_C);
  CHECK(s.edge(U_Z).fast_link == FastLink{R, A});
  CHECK(s.edge(S_A).fast_link == FastLink{R, B});
  CHECK(s.edge(U_B).fast_link == FastLink{R, C});
  // The path of each link spells the full label.
  for (EdgeId e : {U_Z, S_A, U_B}) {
    const FastLink fl = s.edge(e).fast_link;
    SymbolString path;
    std::vector<NodeId> nodes;
    for (NodeId v = fl.bottom; v != fl.top; v = s.parent(v)) nodes.push_back(v);
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
      const auto label = s.extract_label(s.tree_edge(*it));
      path.insert(path.end(), label.begin(), label.end());
    }
    const auto label = s.extract_label(e);
    CHECK(path == label);
  }
}

TEST_CASE("size bounds, labels and fast-link definitions") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const Text t = random_text(rng, 1 + rng() % 50, 1 + rng() % 4, true);
    const Cdawg c = Cdawg::build(t);
    SimLCdawg::BuildReport report;
    const SimLCdawg s = SimLCdawg::build(c, t, &report);
    CHECK(s.node_count() <= c.node_count() + t.sigma());
    CHECK(s.edge_count() <= c.edge_count() + t.sigma());
    CHECK(s.node_count() == c.node_count() + s.type2_count());
    CHECK(report.peak_chain <= report.height_slt);
    const auto truth = simlcdawg_labels(s, c, t, report);
    for (EdgeId e = 0; e < s.edge_count(); ++e) {
      WorkCounter work;
      CHECK(s.extract_label(e, &work) == truth[e]);
      CHECK(work.fast_link_applications <= truth[e].size());
    }
    CHECK(simlcdawg_fast_link_violations(s, c, t, report).empty());
  }
}

TEST_CASE("locate, count and report match the naive scan") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const Text t = random_text(rng, 1 + rng() % 80, 1 + rng() % 4, true);
    const SimLCdawg s = SimLCdawg::build(Cdawg::build(t), t);
    for (int q = 0; q < 40; ++q) {
      const SymbolString p = sample_pattern(t, rng, 12);
      WorkCounter work;
      const auto loc = s.locate(p, &work);
      const auto expect = naive_find_all(t, p);
      CHECK(work.fast_link_applications <= 2 * p.size());
      if (expect.empty()) {
        CHECK_FALSE(loc.has_value());
        continue;
      }
      REQUIRE(loc.has_value());
      CHECK(s.count(*loc) == expect.size());
      std::size_t visits = 0;
      CHECK(s.report(*loc, static_cast<Index>(p.size()), &visits) == expect);
      if (t.size() > 1) CHECK(visits <= 2 * expect.size() - 1);
    }
  }
}

TEST_CASE("tree over DAG nodes and detached leaves") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const Text t = random_text(rng, 1 + rng() % 40, 1 + rng() % 4, true);
    const SimLCdawg s = SimLCdawg::build(Cdawg::build(t), t);
    CHECK(s.tree_size() == s.edge_count() + 1);
    for (EdgeId e = 0; e < s.edge_count(); ++e) {
      const NodeId tn = s.tree_node_of_edge(e);
      CHECK(s.tree_edge(tn) == e);
      if (s.edge(e).primary || s.edge(e).src == SimLCdawg::source()) CHECK(tn < s.tree_size());
      CHECK(s.ancestry().is_ancestor(s.edge(e).src, tn));
    }
  }
}

TEST_CASE("reassembly from parts") {
  const Text t = ingest("abracadabra", true);
  const SimLCdawg s = SimLCdawg::build(Cdawg::build(t), t);
  std::vector<Index> length;
  std::vector<std::uint8_t> type2;
  for (NodeId v = 0; v < s.node_count(); ++v) {
    length.push_back(s.length(v));
    type2.push_back(s.is_type2(v) ? 1 : 0);
  }
  const SimLCdawg r = SimLCdawg::from_parts(length, type2, s.edges(), s.text_size(), s.ancestry());
  CHECK(r == s);
  auto edges = s.edges();
  edges[0].dest = static_cast<NodeId>(s.node_count() + 3);
  CHECK_THROWS_AS(SimLCdawg::from_parts(length, type2, edges, s.text_size(), s.ancestry()), CorruptIndex);
}
