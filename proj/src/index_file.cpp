// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/index_file.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace simidx {
namespace {

using nlohmann::json;

constexpr int kVersion = 1;

json ids(const std::vector<std::uint32_t>& v) {
  json a = json::array();
  for (std::uint32_t x : v) a.push_back(x == kNone ? std::int64_t{-1} : std::int64_t{x});
  return a;
}

std::vector<std::uint32_t> read_ids(const json& a) {
  std::vector<std::uint32_t> v;
  v.reserve(a.size());
  for (const auto& x : a) {
    const auto i = x.get<std::int64_t>();
    if (i < -1 || i >= std::int64_t{kNone}) throw CorruptIndex("id out of range");
    v.push_back(i < 0 ? kNone : static_cast<std::uint32_t>(i));
  }
  return v;
}

std::vector<std::uint32_t> column(const json& obj, const char* key, std::size_t expected) {
  auto v = read_ids(obj.at(key));
  if (v.size() != expected) throw CorruptIndex(std::string("column '") + key + "' has the wrong length");
  return v;
}

std::string bound_flag(bool ok) { return ok ? "OK" : "FAIL"; }

}  // namespace

std::optional<IndexKind> parse_kind(std::string_view name) {
  for (IndexKind k : {IndexKind::stree, IndexKind::lstrie, IndexKind::simlst, IndexKind::cdawg, IndexKind::simlcdawg})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

std::string_view kind_name(IndexKind kind) {
  switch (kind) {
    case IndexKind::stree: return "stree";
    case IndexKind::lstrie: return "lstrie";
    case IndexKind::simlst: return "simlst";
    case IndexKind::cdawg: return "cdawg";
    case IndexKind::simlcdawg: return "simlcdawg";
  }
  return "unknown";
}

IndexFile IndexFile::build(IndexKind kind, const Text& text) {
  IndexFile f;
  f.kind_ = kind;
  f.alphabet_ = text.alphabet();
  f.n_ = static_cast<Index>(text.size());
  f.terminated_ = text.terminated();
  f.text_ = text;
  f.rebuild_from_text();
  if (kind == IndexKind::simlst || kind == IndexKind::simlcdawg) f.text_.reset();
  return f;
}

void IndexFile::rebuild_from_text() {
  const Text& text = *text_;
  switch (kind_) {
    case IndexKind::stree:
      stree_ = SuffixTree::build(text);
      nodes_ = stree_->size();
      edges_ = nodes_ - 1;
      break;
    case IndexKind::lstrie:
    case IndexKind::simlst: {
      const SuffixTree st = SuffixTree::build(text);
      if (kind_ == IndexKind::lstrie) {
        lstrie_ = LSTrie::build(st, text);
        nodes_ = lstrie_->size();
      } else {
        simlst_ = SimLSTrie::build_direct(st, text);
        nodes_ = simlst_->size();
      }
      edges_ = nodes_ - 1;
      break;
    }
    case IndexKind::cdawg:
    case IndexKind::simlcdawg: {
      Cdawg c = Cdawg::build(text);
      simlcdawg_ = SimLCdawg::build(c, text);
      if (kind_ == IndexKind::cdawg) {
        nodes_ = c.node_count();
        edges_ = c.edge_count();
        cdawg_ = std::move(c);
      } else {
        nodes_ = simlcdawg_->node_count();
        edges_ = simlcdawg_->edge_count();
      }
      break;
    }
  }
}

std::string IndexFile::summary() const {
  std::ostringstream out;
  out << "nodes=" << nodes_ << " edges=" << edges_;
  const std::uint64_t n = n_;
  switch (kind_) {
    case IndexKind::stree:
      out << " bound=2n-1:" << bound_flag(nodes_ <= 2 * n - 1);
      break;
    case IndexKind::lstrie:
      out << " bound=3n-3:" << (n >= 3 ? bound_flag(nodes_ <= 3 * n - 3) : "n/a");
      break;
    case IndexKind::simlst:
      out << " bound=2n:" << bound_flag(nodes_ <= 2 * n && edges_ <= 2 * n - 1);
      break;
    case IndexKind::cdawg:
      out << " primary=" << cdawg_->primary_count();
      break;
    case IndexKind::simlcdawg: {
      const std::size_t type2 = simlcdawg_->type2_count();
      const std::size_t sigma = alphabet_.size();
      const bool ok = nodes_ <= (nodes_ - type2) + sigma && edges_ <= (edges_ - type2) + sigma;
      out << " type2=" << type2 << " bound=e_R+sigma:" << bound_flag(ok);
      break;
    }
  }
  return out.str();
}

void IndexFile::save(std::ostream& out) const {
  json doc;
  doc["format"] = "simidx";
  doc["version"] = kVersion;
  doc["kind"] = std::string(kind_name(kind_));
  doc["n"] = n_;
  doc["terminated"] = terminated_;
  doc["alphabet"] = alphabet_.codes();
  if (text_) doc["text"] = text_->codes();

  json nodes;
  json edges;
  json fastlinks = json::array();
  auto tree_columns = [&](const LinkedTree& t) {
    std::vector<std::uint32_t> kind(t.size());
    std::transform(t.kind.begin(), t.kind.end(), kind.begin(), [](NodeKind k) { return static_cast<std::uint32_t>(k); });
    nodes["parent"] = ids(t.parent);
    nodes["depth"] = ids(t.depth);
    nodes["kind"] = ids(kind);
    nodes["suffix"] = ids(t.suffix_start);
    // Edge e enters node e; column entry 0 belongs to the root and is unused.
    std::vector<std::uint32_t> plus(t.plus.begin(), t.plus.end());
    edges["first"] = ids(t.first);
    edges["plus"] = ids(plus);
    for (NodeId v = 1; v < t.size(); ++v)
      if (t.plus[v] != 0) fastlinks.push_back({v, t.fast_link[v].top, t.fast_link[v].bottom});
  };

  switch (kind_) {
    case IndexKind::stree: {
      std::vector<std::uint32_t> parent(stree_->size()), depth(stree_->size()), suffix(stree_->size());
      for (NodeId v = 0; v < stree_->size(); ++v) {
        parent[v] = stree_->parent(v);
        depth[v] = stree_->depth(v);
        suffix[v] = stree_->suffix_start(v);
      }
      nodes["parent"] = ids(parent);
      nodes["depth"] = ids(depth);
      nodes["suffix"] = ids(suffix);
      break;
    }
    case IndexKind::lstrie:
      tree_columns(lstrie_->tree());
      break;
    case IndexKind::simlst:
      tree_columns(simlst_->tree());
      doc["euler"] = {{"entry", ids(simlst_->ancestry().entries())}, {"exit", ids(simlst_->ancestry().exits())}};
      break;
    case IndexKind::cdawg: {
      std::vector<std::uint32_t> length, slink, src, dest, first, len, primary;
      for (NodeId v = 0; v < cdawg_->node_count(); ++v) {
        length.push_back(cdawg_->length(v));
        slink.push_back(cdawg_->slink(v));
      }
      for (const CdawgEdge& e : cdawg_->edges()) {
        src.push_back(e.src);
        dest.push_back(e.dest);
        first.push_back(e.first);
        len.push_back(e.length);
        primary.push_back(e.primary ? 1 : 0);
      }
      nodes["length"] = ids(length);
      nodes["slink"] = ids(slink);
      edges = {{"src", ids(src)}, {"dest", ids(dest)}, {"first", ids(first)}, {"length", ids(len)}, {"primary", ids(primary)}};
      break;
    }
    case IndexKind::simlcdawg: {
      const SimLCdawg& s = *simlcdawg_;
      std::vector<std::uint32_t> length, type2, src, dest, first, len, primary;
      for (NodeId v = 0; v < s.node_count(); ++v) {
        length.push_back(s.length(v));
        type2.push_back(s.is_type2(v) ? 1 : 0);
      }
      for (EdgeId e = 0; e < s.edge_count(); ++e) {
        const SimEdge& x = s.edge(e);
        src.push_back(x.src);
        dest.push_back(x.dest);
        first.push_back(x.first);
        len.push_back(x.length);
        primary.push_back(x.primary ? 1 : 0);
        if (x.plus()) fastlinks.push_back({e, x.fast_link.top, x.fast_link.bottom});
      }
      nodes["length"] = ids(length);
      nodes["type2"] = ids(type2);
      edges = {{"src", ids(src)}, {"dest", ids(dest)}, {"first", ids(first)}, {"length", ids(len)}, {"primary", ids(primary)}};
      doc["euler"] = {{"entry", ids(s.ancestry().entries())}, {"exit", ids(s.ancestry().exits())}};
      break;
    }
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  doc["fastlinks"] = std::move(fastlinks);
  out << doc.dump() << '\n';
}

IndexFile IndexFile::load(std::istream& in) {
  try {
    const json doc = json::parse(in);
    if (doc.at("format") != "simidx") throw CorruptIndex("not a simidx index file");
    if (doc.at("version") != kVersion) throw CorruptIndex("unsupported index version");
    const auto kind = parse_kind(doc.at("kind").get<std::string>());
    if (!kind) throw CorruptIndex("unknown index kind");

    IndexFile f;
    f.kind_ = *kind;
    f.n_ = doc.at("n").get<Index>();
    f.terminated_ = doc.at("terminated").get<bool>();
    const auto codes = doc.at("alphabet").get<std::vector<std::int32_t>>();
    if (!std::is_sorted(codes.begin(), codes.end()) ||
        std::adjacent_find(codes.begin(), codes.end()) != codes.end())
      throw CorruptIndex("alphabet is not strictly increasing");
    f.alphabet_ = Alphabet::of(codes);
    const json& nodes = doc.at("nodes");
    const json& edges = doc.at("edges");

    if (*kind == IndexKind::stree || *kind == IndexKind::lstrie || *kind == IndexKind::cdawg) {
      if (!doc.contains("text")) throw CorruptIndex("index kind needs its text");
      const auto text_codes = doc.at("text").get<std::vector<std::int32_t>>();
      f.text_ = Text::from_codes(text_codes, false);
      if (f.text_->size() != f.n_ || !(f.text_->alphabet() == f.alphabet_) || f.text_->terminated() != f.terminated_)
        throw CorruptIndex("stored text disagrees with the header");
      f.rebuild_from_text();
      const std::size_t stored = read_ids(nodes.at(*kind == IndexKind::cdawg ? "length" : "parent")).size();
      if (stored != f.nodes_) throw CorruptIndex("stored structure disagrees with its text");
      return f;
    }
    if (doc.contains("text")) throw CorruptIndex("text-free index carries text");

    const auto& euler = doc.at("euler");
    auto ancestry = AncestryIndex::from_numbers(read_ids(euler.at("entry")), read_ids(euler.at("exit")));
    const json& links = doc.at("fastlinks");
    if (*kind == IndexKind::simlst) {
      LinkedTree t;
      t.parent = read_ids(nodes.at("parent"));
      const std::size_t size = t.parent.size();
      t.depth = column(nodes, "depth", size);
      for (std::uint32_t k : column(nodes, "kind", size)) {
        if (k != 1 && k != 2) throw CorruptIndex("bad node kind");
        t.kind.push_back(static_cast<NodeKind>(k));
      }
      t.suffix_start = column(nodes, "suffix", size);
      t.first = column(edges, "first", size);
      for (std::uint32_t p : column(edges, "plus", size)) t.plus.push_back(p != 0 ? 1 : 0);
      t.fast_link.assign(size, FastLink{});
      for (const auto& l : links) {
        const auto e = l.at(0).get<std::uint32_t>();
        if (e == 0 || e >= size) throw CorruptIndex("fast link on an unknown edge");
        t.fast_link[e] = {l.at(1).get<NodeId>(), l.at(2).get<NodeId>()};
      }
      f.simlst_ = SimLSTrie::from_parts(std::move(t), f.n_, std::move(ancestry));
      f.nodes_ = f.simlst_->size();
      f.edges_ = f.nodes_ - 1;
    } else {
      auto length = read_ids(nodes.at("length"));
      std::vector<std::uint8_t> type2;
      for (std::uint32_t x : column(nodes, "type2", length.size())) type2.push_back(x != 0 ? 1 : 0);
      const auto src = read_ids(edges.at("src"));
      const std::size_t m = src.size();
      const auto dest = column(edges, "dest", m);
      const auto first = column(edges, "first", m);
      const auto len = column(edges, "length", m);
      const auto primary = column(edges, "primary", m);
      std::vector<SimEdge> list(m);
      for (std::size_t e = 0; e < m; ++e) list[e] = {src[e], dest[e], first[e], len[e], primary[e] != 0, {}};
      for (const auto& l : links) {
        const auto e = l.at(0).get<std::uint32_t>();
        if (e >= m) throw CorruptIndex("fast link on an unknown edge");
        list[e].fast_link = {l.at(1).get<NodeId>(), l.at(2).get<NodeId>()};
      }
      f.simlcdawg_ = SimLCdawg::from_parts(std::move(length), std::move(type2), std::move(list), f.n_,
                                           std::move(ancestry));
      f.nodes_ = f.simlcdawg_->node_count();
      f.edges_ = f.simlcdawg_->edge_count();
    }
    return f;
  } catch (const json::exception& err) {
    throw CorruptIndex(std::string("malformed index file: ") + err.what());
  } catch (const InvalidArgument& err) {
    throw CorruptIndex(std::string("malformed index file: ") + err.what());
  }
}

QueryResult IndexFile::query(std::string_view pattern, QueryMode mode) const {
  if (kind_ == IndexKind::lstrie && mode != QueryMode::exists)
    throw InvalidArgument("an lstrie index answers existence queries only");
  QueryResult r;
  const auto p = alphabet_.encode(pattern);
  if (!p) return r;
  const auto m = static_cast<Index>(p->size());
  switch (kind_) {
    case IndexKind::lstrie:
      r.found = lstrie_->contains(*p);
      r.count = r.found ? 1 : 0;
      return r;
    case IndexKind::simlst: {
      const auto loc = simlst_->locate(*p);
      if (!loc) return r;
      r.found = true;
      if (mode != QueryMode::exists) {
        r.positions = simlst_->report(*loc);
        r.count = r.positions.size();
      }
      break;
    }
    case IndexKind::cdawg:
    case IndexKind::simlcdawg: {
      const auto loc = simlcdawg_->locate(*p);
      if (!loc) return r;
      r.found = true;
      r.count = simlcdawg_->count(*loc);
      if (mode == QueryMode::positions) r.positions = simlcdawg_->report(*loc, m);
      break;
    }
    case IndexKind::stree: {
      const auto loc = locate_with_text(*stree_, *text_, *p);
      if (!loc) return r;
      r.found = true;
      std::vector<NodeId> stack{loc->node};
      while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        if (stree_->suffix_start(v) != kNone) r.positions.push_back(stree_->suffix_start(v) + 1);
        for (NodeId c : stree_->children(v)) stack.push_back(c);
      }
      std::sort(r.positions.begin(), r.positions.end());
      r.count = r.positions.size();
      break;
    }
  }
  if (mode != QueryMode::positions) r.positions.clear();
  return r;
}

}  // namespace simidx
