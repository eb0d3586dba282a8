// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "simidx/stats.hpp"

using namespace simidx;

namespace {

const StatsRow& row(const std::vector<StatsRow>& rows, const std::string& name) {
  for (const auto& r : rows)
    if (r.structure == name) return r;
  FAIL("missing row " << name);
  return rows.front();
}

}  // namespace

TEST_CASE("abaabc$ rows") {
  const auto rows = structure_stats(ingest("abaabc", true));
  REQUIRE(rows.size() == 5);
  CHECK(row(rows, "lstrie").nodes == 15);
  CHECK(row(rows, "simlst").nodes == 12);
  CHECK(row(rows, "stree").nodes == 11);
  CHECK(row(rows, "cdawg").edges == 8);
  CHECK(row(rows, "simlcdawg").nodes == 5);
  for (const auto& r : rows) {
    CHECK(r.bound_ok);
    CHECK(r.n == 7);
    CHECK(r.sigma == 4);
  }
  CHECK(to_csv(row(rows, "simlst")) == "simlst,7,4,12,11,7,8,true");
}

TEST_CASE("lemma52 k=10") {
  FamilyParams p;
  p.size = 10;
  const auto rows = structure_stats(gen_family(Family::lemma52, p));
  CHECK(rows.front().e_l == 75u);
  CHECK(rows.front().e_r == 39u);
}

TEST_CASE("unary text is degenerate and within bounds") {
  const auto rows = structure_stats(ingest("aaaaaaaa", false));
  CHECK(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.bound_ok);
    CHECK(r.nodes == 9);
    CHECK_FALSE(r.e_l.has_value());
  }
  CHECK(to_csv(rows.front()) == "stree,8,1,9,8,,,true");
  const auto term = structure_stats(ingest("aaaaaaaa", true));
  for (const auto& r : term) CHECK(r.bound_ok);
}

TEST_CASE("header") { CHECK(std::string(kStatsCsvHeader) == "structure,n,sigma,nodes,edges,e_l,e_r,bound_ok"); }
