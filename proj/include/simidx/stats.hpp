// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simidx/text.hpp"

namespace simidx {

/// Size row of one structure over one text. e_l/e_r are text properties,
/// present for terminated texts only.
struct StatsRow {
  std::string structure;
  std::size_t n = 0;
  std::size_t sigma = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::optional<std::uint64_t> e_l;
  std::optional<std::uint64_t> e_r;
  bool bound_ok = false;
};

/// Rows for stree, lstrie, simlst and, on terminated texts, cdawg and
/// simlcdawg, each with its size bound evaluated.
std::vector<StatsRow> structure_stats(const Text& text);

inline constexpr const char* kStatsCsvHeader = "structure,n,sigma,nodes,edges,e_l,e_r,bound_ok";
std::string to_csv(const StatsRow& row);

}  // namespace simidx
