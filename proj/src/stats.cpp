// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/stats.hpp"

#include <sstream>

#include "simidx/cdawg.hpp"
#include "simidx/lstrie.hpp"
#include "simidx/sim_lcdawg.hpp"
#include "simidx/sim_lstrie.hpp"

namespace simidx {

std::vector<StatsRow> structure_stats(const Text& text) {
  const std::size_t n = text.size();
  const std::size_t sigma = text.sigma();
  std::optional<ECounts> ec;
  if (text.terminated()) ec = e_counts(text);
  auto row = [&](const char* name, std::size_t nodes, std::size_t edges, bool ok) {
    StatsRow r{name, n, sigma, nodes, edges, {}, {}, ok};
    if (ec) {
      r.e_l = ec->e_l;
      r.e_r = ec->e_r;
    }
    return r;
  };

  std::vector<StatsRow> rows;
  const SuffixTree st = SuffixTree::build(text);
  const LeftExtensions ext = left_extensions(st, text);
  // Weiner trees may keep one extra non-branching node per repeated suffix,
  // so only terminated trees get the classic 2n-1 bound.
  rows.push_back(row("stree", st.size(), st.size() - 1, n < 2 || st.size() <= (text.terminated() ? 2 * n - 1 : 2 * n)));
  const LSTrie lst = LSTrie::build(st, text, ext);
  rows.push_back(row("lstrie", lst.size(), lst.edge_count(), n < 3 || (lst.size() <= 3 * n - 3 && lst.edge_count() <= 3 * n - 4)));
  const SimLSTrie sim = SimLSTrie::build_direct(st, text);
  rows.push_back(row("simlst", sim.size(), sim.edge_count(), sim.size() <= 2 * n && sim.edge_count() <= 2 * n - 1));
  if (text.terminated()) {
    const Cdawg c = Cdawg::build(st, text, ext);
    rows.push_back(row("cdawg", c.node_count(), c.edge_count(), c.primary_count() + 1 == c.node_count()));
    const SimLCdawg s = SimLCdawg::build(c, text);
    rows.push_back(row("simlcdawg", s.node_count(), s.edge_count(),
                       s.node_count() <= c.node_count() + sigma && s.edge_count() <= c.edge_count() + sigma));
  }
  return rows;
}

std::string to_csv(const StatsRow& row) {
  std::ostringstream out;
  out << row.structure << ',' << row.n << ',' << row.sigma << ',' << row.nodes << ',' << row.edges << ',';
  if (row.e_l) out << *row.e_l;
  out << ',';
  if (row.e_r) out << *row.e_r;
  out << ',' << (row.bound_ok ? "true" : "false");
  return out.str();
}

}  // namespace simidx
