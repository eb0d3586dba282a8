// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "simidx/lstrie.hpp"

namespace simidx {
namespace {

SymbolString substring(const Text& text, Index start, Index length) {
  auto s = text.symbols().subspan(start, length);
  return {s.begin(), s.end()};
}

// Start of one suffix in the subtree of v; preorder puts one on the
// leftmost descending path.
Index suffix_below(const LinkedTree& t, NodeId v) {
  while (t.suffix_start[v] == kNone) v = t.children_of(v)[0];
  return t.suffix_start[v];
}

std::vector<SymbolString> tree_labels(const LinkedTree& t, const Text& text) {
  std::vector<SymbolString> labels(t.size());
  for (NodeId v = 1; v < t.size(); ++v) {
    const Index s = suffix_below(t, v);
    labels[v] = substring(text, s + t.depth[t.parent[v]], t.edge_length(v));
  }
  return labels;
}

class Checker {
 public:
  Checker(const Text& text, VerifyReport& report) : text_(text), report_(report) {}

  void check(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok) report_.failures.push_back(what + " [text=\"" + text_.render() + "\"]");
  }

 private:
  const Text& text_;
  VerifyReport& report_;
};

std::string render_pattern(const Text& text, const SymbolString& p) { return "\"" + text.render(p) + "\""; }

}  // namespace

std::vector<SymbolString> simlst_labels(const SimLSTrie& s, const Text& text) { return tree_labels(s.tree(), text); }

std::vector<NodeId> simlst_fast_link_violations(const SimLSTrie& s, const Text& text) {
  const LinkedTree& t = s.tree();
  std::map<SymbolString, NodeId> node_of;
  std::vector<SymbolString> str(t.size());
  for (NodeId v = 0; v < t.size(); ++v) {
    str[v] = v == 0 ? SymbolString{} : substring(text, suffix_below(t, v), t.depth[v]);
    node_of[str[v]] = v;
  }
  std::vector<NodeId> slink(t.size(), kNone);
  for (NodeId v = 1; v < t.size(); ++v) {
    auto it = node_of.find(SymbolString(str[v].begin() + 1, str[v].end()));
    if (it != node_of.end()) slink[v] = it->second;
  }
  std::vector<NodeId> bad;
  for (NodeId v = 1; v < t.size(); ++v) {
    if (t.plus[v] == 0) continue;
    NodeId a = t.parent[v];
    NodeId b = v;
    bool ok = true;
    do {
      a = slink[a];
      b = slink[b];
      if (a == kNone || b == kNone) {
        ok = false;
        break;
      }
    } while (t.parent[b] == a);
    if (!ok || !(t.fast_link[v] == FastLink{a, b})) bad.push_back(v);
  }
  return bad;
}

std::vector<SymbolString> simlcdawg_labels(const SimLCdawg& s, const Cdawg& c, const Text& text,
                                           const SimLCdawg::BuildReport& report) {
  std::vector<SymbolString> labels(s.edge_count());
  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    const auto [origin, offset] = report.origin[e];
    labels[e] = substring(text, c.edge(origin).label_start + offset, s.edge(e).length);
  }
  return labels;
}

std::vector<EdgeId> simlcdawg_fast_link_violations(const SimLCdawg& s, const Cdawg& c, const Text& text,
                                                   const SimLCdawg::BuildReport& report) {
  const auto labels = simlcdawg_labels(s, c, text, report);
  // Node strings along the primary (tree) edges.
  std::vector<SymbolString> str(s.node_count());
  std::vector<NodeId> order(s.node_count());
  for (NodeId v = 0; v < order.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&s](NodeId a, NodeId b) { return s.length(a) < s.length(b); });
  std::map<SymbolString, NodeId> node_of;
  for (NodeId v : order) {
    if (v != SimLCdawg::source()) {
      const EdgeId in = s.tree_edge(v);
      str[v] = str[s.edge(in).src];
      str[v].insert(str[v].end(), labels[in].begin(), labels[in].end());
    }
    node_of[str[v]] = v;
  }

  std::vector<EdgeId> bad;
  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    const SimEdge& edge = s.edge(e);
    if (!edge.plus()) continue;
    const SymbolString& x = labels[e];
    const SymbolString& su = str[edge.src];
    std::optional<FastLink> expected;
    for (std::size_t cut = 1; cut <= su.size() && !expected; ++cut) {
      auto it = node_of.find(SymbolString(su.begin() + static_cast<std::ptrdiff_t>(cut), su.end()));
      if (it == node_of.end()) continue;
      NodeId t = it->second;
      std::size_t k = 0;
      std::size_t nodes = 1;
      bool ok = true;
      while (k < x.size()) {
        const EdgeId step = t < s.node_count() ? s.out_edge(t, x[k]) : kNone;
        if (step == kNone || k + labels[step].size() > x.size() ||
            !std::equal(labels[step].begin(), labels[step].end(), x.begin() + static_cast<std::ptrdiff_t>(k))) {
          ok = false;
          break;
        }
        k += labels[step].size();
        t = s.tree_node_of_edge(step);
        ++nodes;
      }
      if (ok && nodes >= 3) expected = FastLink{it->second, t};
    }
    if (!expected || !(*expected == edge.fast_link)) bad.push_back(e);
  }
  return bad;
}

SymbolString sample_pattern(const Text& text, std::mt19937_64& rng, std::size_t max_length) {
  const std::size_t n = text.size();
  auto pick = [&rng](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  const std::size_t kind = pick(3);
  if (kind == 1) {
    SymbolString p(pick(max_length + 1));
    for (auto& a : p) a = static_cast<Symbol>(pick(text.sigma()));
    return p;
  }
  const std::size_t start = pick(n);
  const std::size_t length = std::min(n - start, pick(max_length + 1));
  SymbolString p = substring(text, static_cast<Index>(start), static_cast<Index>(length));
  if (kind == 2 && !p.empty()) p[pick(p.size())] = static_cast<Symbol>(pick(text.sigma()));
  return p;
}

VerifyReport verify_text(const Text& text, const VerifyOptions& options) {
  VerifyReport report;
  Checker check(text, report);
  const std::uint64_t n = text.size();
  const OracleLimits& lim = options.limits;

  const SuffixTree st = SuffixTree::build(text);
  const LeftExtensions ext = left_extensions(st, text);
  if (text.terminated() && n >= 2) check.check(st.size() <= 2 * n - 1, "suffix tree exceeds 2n-1 nodes");
  for (NodeId v = 1; v < st.size(); ++v) {
    const NodeId w = st.slink(v);
    check.check(st.depth(w) + 1 == st.depth(v) &&
                    substring(text, st.str_start(v) + 1, st.depth(w)) == substring(text, st.str_start(w), st.depth(w)),
                "suffix link of suffix-tree node " + std::to_string(v));
  }
  if (n <= lim.maximal_sets) {
    std::vector<SymbolString> nodes;
    for (NodeId v = 0; v < st.size(); ++v) nodes.push_back(substring(text, st.str_start(v), st.depth(v)));
    std::sort(nodes.begin(), nodes.end());
    check.check(nodes == maximal_sets(text, lim).right, "suffix-tree nodes differ from the right-maximal substrings");
  }

  const LSTrie lst = LSTrie::build(st, text, ext);
  const auto soft = soft_weiner_pairs(st, text, ext);
  check.check(lst.tree().type2_count() == soft.size(), "type-2 count differs from soft Weiner links");
  if (n >= 3) {
    check.check(lst.size() <= 3 * n - 3, "LSTrie exceeds 3n-3 nodes");
  }
  {
    const auto labels = tree_labels(lst.tree(), text);
    for (NodeId v = 1; v < lst.size(); ++v) {
      WorkCounter work;
      const auto got = lst.extract_label(v, &work);
      check.check(got == labels[v] && work.fast_link_applications <= labels[v].size(),
                  "LSTrie label of edge " + std::to_string(v));
    }
  }

  SimLSTrie sim = SimLSTrie::build_direct(st, text);
  if (options.inject_fault) {
    for (NodeId v = 1; v < sim.size(); ++v) {
      if (sim.plus(v)) {
        const FastLink fl = sim.fast_link(v);
        sim.override_fast_link(v, {fl.top, sim.parent(fl.bottom)});
        break;
      }
    }
  }
  check.check(sim.size() <= 2 * n && sim.edge_count() <= 2 * n - 1, "simplified trie exceeds 2n nodes");
  check.check(sim.size() <= lst.size(), "simplified trie larger than the LSTrie");
  check.check(SimLSTrie::build_from_lstrie(lst) == SimLSTrie::build_direct(st, text),
              "simplified trie constructions disagree");
  {
    const auto labels = simlst_labels(sim, text);
    for (NodeId v = 1; v < sim.size(); ++v) {
      WorkCounter work;
      SymbolString got;
      try {
        got = sim.extract_label(v, &work);
      } catch (const CorruptIndex&) {
        got.clear();
      }
      check.check(got == labels[v] && work.fast_link_applications <= labels[v].size(),
                  "simplified trie label of edge " + std::to_string(v) + " is \"" + text.render(got) +
                      "\", expected \"" + text.render(labels[v]) + "\"");
    }
    if (n <= lim.fast_link_check) {
      for (NodeId v : simlst_fast_link_violations(sim, text))
        check.check(false, "simplified trie fast link of edge " + std::to_string(v) + " violates its definition");
    }
  }

  std::optional<Cdawg> cdawg;
  std::optional<SimLCdawg> scd;
  SimLCdawg::BuildReport build;
  if (text.terminated()) {
    cdawg = Cdawg::build(st, text, ext);
    check.check(cdawg->primary_count() + 1 == cdawg->node_count(), "primary edge count is not |V|-1");
    try {
      (void)lpt(*cdawg);
    } catch (const InvariantViolation& err) {
      check.check(false, err.what());
    }
    for (NodeId v = 0; v < cdawg->node_count(); ++v) {
      if (v != Cdawg::source() && v != cdawg->sink())
        check.check(cdawg->edges_end(v) - cdawg->edges_begin(v) >= 2, "CDAWG node with out-degree below 2");
    }
    const ECounts ec = e_counts(text);
    check.check(ec.e_r == cdawg->edge_count(), "e_R differs from the CDAWG edge count");
    std::uint64_t left_total = 0;
    for (NodeId v = 0; v < st.size(); ++v)
      if (ext.is_left_maximal(v)) left_total += ext.preceding(v).size();
    check.check(ec.e_l == left_total, "e_L differs from the suffix-tree left-extension total");
    if (n <= lim.maximal_sets) check.check(ec == brute_e_counts(text, lim), "e counts differ from brute force");
    if (n <= lim.trie) {
      const TrieReference ref = build_trie_and_minimize(text, lim);
      std::vector<std::vector<SymbolString>> classes(cdawg->node_count());
      for (NodeId v = 0; v < st.size(); ++v)
        classes[cdawg->st_class()[v]].push_back(substring(text, st.str_start(v), st.depth(v)));
      for (auto& cl : classes) std::sort(cl.begin(), cl.end());
      std::sort(classes.begin(), classes.end());
      check.check(classes == ref.cdawg_classes, "CDAWG classes differ from end-position classes");
      check.check(ref.lstrie_nodes.size() == lst.size(), "LSTrie size differs from the trie reference");
    }

    scd = SimLCdawg::build(*cdawg, text, &build);
    const std::uint64_t sigma = text.sigma();
    check.check(scd->node_count() <= cdawg->node_count() + sigma, "simplified CDAWG exceeds |V|+sigma nodes");
    check.check(scd->edge_count() <= cdawg->edge_count() + sigma, "simplified CDAWG exceeds e_R+sigma edges");
    check.check(build.peak_chain <= build.height_slt, "chain buffer exceeded the suffix-link tree height");
    const auto labels = simlcdawg_labels(*scd, *cdawg, text, build);
    for (EdgeId e = 0; e < scd->edge_count(); ++e) {
      WorkCounter work;
      check.check(scd->extract_label(e, &work) == labels[e] && work.fast_link_applications <= labels[e].size(),
                  "simplified CDAWG label of edge " + std::to_string(e));
    }
    if (n <= lim.fast_link_check) {
      for (EdgeId e : simlcdawg_fast_link_violations(*scd, *cdawg, text, build))
        check.check(false, "simplified CDAWG fast link of edge " + std::to_string(e) + " violates its definition");
    }
  }

  std::mt19937_64 rng(options.seed);
  const std::size_t max_length = std::min<std::size_t>(n + 2, 24);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const SymbolString p = sample_pattern(text, rng, max_length);
    const auto expected = naive_find_all(text, p);
    const std::string repro = " (pattern " + render_pattern(text, p) + ", seed " + std::to_string(options.seed) +
                              ", trial " + std::to_string(trial) + ")";
    const std::uint64_t budget = 2 * p.size();
    try {
      check.check(lst.contains(p) == !expected.empty(), "LSTrie decision" + repro);
      WorkCounter work;
      const auto loc = sim.locate(p, &work);
      check.check((loc ? sim.report(*loc) : std::vector<Index>{}) == expected, "simplified trie report" + repro);
      check.check(work.fast_link_applications <= budget, "simplified trie fast-link budget" + repro);
      if (scd) {
        WorkCounter w2;
        const auto dl = scd->locate(p, &w2);
        std::size_t visits = 0;
        const auto got = dl ? scd->report(*dl, static_cast<Index>(p.size()), &visits) : std::vector<Index>{};
        check.check(got == expected, "simplified CDAWG report" + repro);
        check.check(!dl || scd->count(*dl) == expected.size(), "simplified CDAWG count" + repro);
        check.check(w2.fast_link_applications <= budget, "simplified CDAWG fast-link budget" + repro);
        // A one-symbol text has a source of out-degree 1, the only non-branching
        // node the enumeration can expand.
        check.check(expected.empty() || n == 1 || visits <= 2 * expected.size() - 1,
                    "report enumeration size" + repro);
      }
    } catch (const Error& err) {
      check.check(false, std::string(err.what()) + repro);
    }
  }
  return report;
}

}  // namespace simidx
