// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <random>

#include "simidx/ancestry.hpp"

using namespace simidx;

namespace {

bool naive_ancestor(const std::vector<NodeId>& parent, NodeId a, NodeId b) {
  for (NodeId v = b; v != kNone; v = parent[v])
    if (v == a) return true;
  return false;
}

}  // namespace

TEST_CASE("small tree") {
  //      0
  //    1   2
  //   3 4
  const std::vector<NodeId> parent{kNone, 0, 0, 1, 1};
  const AncestryIndex a = AncestryIndex::from_parents(parent);
  CHECK(a.is_ancestor(0, 4));
  CHECK(a.is_ancestor(1, 3));
  CHECK(a.is_ancestor(3, 3));
  CHECK_FALSE(a.is_strict_ancestor(3, 3));
  CHECK_FALSE(a.is_ancestor(2, 3));
  CHECK_FALSE(a.is_ancestor(3, 1));
  CHECK(a.entries() == std::vector<Index>{0, 1, 4, 2, 3});
}

TEST_CASE("random trees agree with parent walks") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    std::vector<NodeId> parent(n, kNone);
    // Root at a random position; others attach to an earlier node of a shuffled order.
    std::vector<NodeId> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) parent[order[i]] = order[rng() % i];
    const AncestryIndex a = AncestryIndex::from_parents(parent);

    std::vector<bool> seen(n, false);
    for (std::size_t v = 0; v < n; ++v) {
      REQUIRE(a.entry(static_cast<NodeId>(v)) < n);
      seen[a.entry(static_cast<NodeId>(v))] = true;
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    for (NodeId x = 0; x < n; ++x)
      for (NodeId y = 0; y < n; ++y) {
        CHECK(a.is_ancestor(x, y) == naive_ancestor(parent, x, y));
        CHECK(a.is_strict_ancestor(x, y) == (x != y && naive_ancestor(parent, x, y)));
      }
    CHECK(AncestryIndex::from_numbers(a.entries(), a.exits()) == a);
  }
}

TEST_CASE("stored numbers are validated") {
  CHECK_THROWS_AS(AncestryIndex::from_numbers({0, 0, 2}, {2, 0, 1}), CorruptIndex);
  CHECK_THROWS_AS(AncestryIndex::from_numbers({0, 1}, {1}), CorruptIndex);
  CHECK_THROWS_AS(AncestryIndex::from_numbers({0, 5}, {1, 0}), CorruptIndex);
}

TEST_CASE("malformed parent arrays are rejected") {
  CHECK_THROWS(AncestryIndex::from_parents(std::vector<NodeId>{kNone, kNone}));
  CHECK_THROWS(AncestryIndex::from_parents(std::vector<NodeId>{kNone, 2, 1}));
}
