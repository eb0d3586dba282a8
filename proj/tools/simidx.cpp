// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

// simidx command-line front end.
//
// Exit codes: 0 success (query: found), 1 query not found or verification
// failure, 2 usage or runtime error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "simidx/cdawg.hpp"
#include "simidx/index_file.hpp"
#include "simidx/sim_lcdawg.hpp"
#include "simidx/sim_lstrie.hpp"
#include "simidx/stats.hpp"
#include "simidx/text.hpp"
#include "simidx/verify.hpp"

namespace {

using namespace simidx;

constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Source {
  std::string input;
  std::string family;
  std::size_t param = 0;
  std::size_t sigma = 2;
  std::size_t period = 3;
  std::uint64_t seed = 1;
  bool no_terminator = false;

  void add_options(CLI::App* cmd) {
    auto* in = cmd->add_option("--input", input, "text file read as raw bytes");
    auto* fam = cmd->add_option("--family", family, "generator family")
                    ->check(CLI::IsMember({"lemma52", "fibonacci", "thue_morse", "unary", "all_distinct", "random",
                                           "periodic"}));
    in->excludes(fam);
    cmd->add_option("--param", param, "k for lemma52, length otherwise")->needs(fam);
    cmd->add_option("--sigma", sigma, "alphabet size (random, periodic)");
    cmd->add_option("--period", period, "period length (periodic)");
    cmd->add_option("--gen-seed", seed, "generator seed (random, periodic)");
    cmd->add_flag("--no-terminator", no_terminator, "do not append the end-marker");
  }

  [[nodiscard]] Text text() const {
    if (!input.empty()) return ingest(read_file(input), !no_terminator);
    if (family.empty()) throw InvalidArgument("one of --input or --family is required");
    FamilyParams p;
    p.size = param;
    p.sigma = sigma;
    p.period = period;
    p.seed = seed;
    p.terminate = !no_terminator && family != "lemma52";
    return gen_family(*parse_family(family), p);
  }
};

int cmd_build(const std::string& algo, const Source& src, const std::string& output) {
  const auto kind = parse_kind(algo);
  if (!kind) {
    std::cerr << "error: unknown algo '" << algo << "'\n";
    return kExitError;
  }
  const IndexFile index = IndexFile::build(*kind, src.text());
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << output << '\n';
    return kExitError;
  }
  index.save(out);
  out.close();
  if (!out) {
    std::cerr << "error: write failed for " << output << '\n';
    return kExitError;
  }
  std::cout << index.summary() << '\n';
  return 0;
}

int cmd_query(const std::string& path, const std::string& pattern, const std::string& mode_name) {
  QueryMode mode = QueryMode::exists;
  if (mode_name == "count") mode = QueryMode::count;
  else if (mode_name == "positions") mode = QueryMode::positions;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  const IndexFile index = IndexFile::load(in);
  const QueryResult r = index.query(pattern, mode);
  switch (mode) {
    case QueryMode::exists:
      std::cout << (r.found ? "found" : "not found") << '\n';
      break;
    case QueryMode::count:
      std::cout << r.count << '\n';
      break;
    case QueryMode::positions:
      for (std::size_t i = 0; i < r.positions.size(); ++i) std::cout << (i ? " " : "") << r.positions[i];
      std::cout << '\n';
      break;
  }
  return r.found ? 0 : 1;
}

nlohmann::json row_json(const StatsRow& r) {
  nlohmann::json j = {{"structure", r.structure}, {"n", r.n},         {"sigma", r.sigma},
                      {"nodes", r.nodes},         {"edges", r.edges}, {"bound_ok", r.bound_ok}};
  j["e_l"] = r.e_l ? nlohmann::json(*r.e_l) : nlohmann::json(nullptr);
  j["e_r"] = r.e_r ? nlohmann::json(*r.e_r) : nlohmann::json(nullptr);
  return j;
}

int cmd_stats(const Source& src, const std::string& format) {
  const auto rows = structure_stats(src.text());
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) out.push_back(row_json(r));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << kStatsCsvHeader << '\n';
    for (const auto& r : rows) std::cout << to_csv(r) << '\n';
  }
  return std::all_of(rows.begin(), rows.end(), [](const StatsRow& r) { return r.bound_ok; }) ? 0 : 1;
}

int cmd_verify(const Source& src, const VerifyOptions& options) {
  const Text text = src.text();
  const VerifyReport report = verify_text(text, options);
  if (report.ok()) {
    std::cout << "PASS checks=" << report.checks << " n=" << text.size() << '\n';
    return 0;
  }
  std::cout << "FAIL checks=" << report.checks << " failures=" << report.failures.size() << '\n';
  std::cout << "text: " << text.render() << '\n';
  std::cout << "seed: " << options.seed << '\n';
  for (const auto& f : report.failures) std::cout << "  " << f << '\n';
  return 1;
}

struct WorkStats {
  double mean = 0;
  std::uint64_t max = 0;
  double max_ratio = 0;  // fast-link applications / pattern length
};

template <class Locate>
WorkStats measure(const std::vector<SymbolString>& patterns, Locate locate) {
  WorkStats s;
  if (patterns.empty()) return s;
  std::uint64_t total = 0;
  for (const auto& p : patterns) {
    WorkCounter work;
    (void)locate(p, work);
    total += work.fast_link_applications;
    s.max = std::max(s.max, work.fast_link_applications);
    if (!p.empty()) s.max_ratio = std::max(s.max_ratio, double(work.fast_link_applications) / double(p.size()));
  }
  s.mean = double(total) / double(patterns.size());
  return s;
}

int cmd_bench(const std::string& family, const std::string& params, std::size_t sigma, std::uint64_t seed,
              std::size_t queries) {
  const auto fam = parse_family(family);
  if (!fam) throw InvalidArgument("unknown family '" + family + "'");
  std::vector<std::size_t> values;
  std::stringstream list(params);
  for (std::string item; std::getline(list, item, ',');) {
    if (item.empty()) continue;
    values.push_back(static_cast<std::size_t>(std::stod(item)));
  }
  if (values.empty()) throw InvalidArgument("--params needs at least one value");

  std::cout << "family,param,n,sigma,stree_nodes,simlst_nodes,simlst_edges,cdawg_nodes,e_l,e_r,"
               "simlcdawg_nodes,simlcdawg_edges,queries,simlst_fl_mean,simlst_fl_max,simlcdawg_fl_mean,"
               "simlcdawg_fl_max,fl_per_symbol_max\n";
  for (const std::size_t v : values) {
    FamilyParams p;
    p.size = v;
    p.sigma = sigma;
    p.seed = seed;
    p.terminate = *fam != Family::lemma52;
    const Text text = gen_family(*fam, p);
    const SuffixTree st = SuffixTree::build(text);
    const LeftExtensions ext = left_extensions(st, text);
    const SimLSTrie sim = SimLSTrie::build_direct(st, text);
    const Cdawg c = Cdawg::build(st, text, ext);
    const SimLCdawg s = SimLCdawg::build(c, text);
    const ECounts ec = e_counts(text);

    std::mt19937_64 rng(seed ^ v);
    std::vector<SymbolString> patterns;
    for (std::size_t i = 0; i < queries; ++i) patterns.push_back(sample_pattern(text, rng, 64));
    const WorkStats ws = measure(patterns, [&](const SymbolString& q, WorkCounter& w) { return sim.locate(q, &w); });
    const WorkStats wc = measure(patterns, [&](const SymbolString& q, WorkCounter& w) { return s.locate(q, &w); });

    std::cout << family << ',' << v << ',' << text.size() << ',' << text.sigma() << ',' << st.size() << ','
              << sim.size() << ',' << sim.edge_count() << ',' << c.node_count() << ',' << ec.e_l << ',' << ec.e_r
              << ',' << s.node_count() << ',' << s.edge_count() << ',' << queries << ',' << ws.mean << ','
              << ws.max << ',' << wc.mean << ',' << wc.max << ',' << std::max(ws.max_ratio, wc.max_ratio) << '\n';
  }
  return 0;
}

int cmd_gen(Source src, const std::string& output) {
  // The end-marker is added again when the file is read back with --input.
  src.no_terminator = true;
  const std::string bytes = src.text().to_bytes();
  if (output.empty() || output == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return 0;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << output << '\n';
    return kExitError;
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  return out ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simidx: text-free suffix trie and CDAWG indexes"};
  app.require_subcommand(1);

  std::string algo, output, index_path, pattern, mode = "exists", format = "csv", params;
  Source build_src, stats_src, verify_src, gen_src;
  VerifyOptions verify_opts;
  std::size_t bench_sigma = 2, bench_queries = 1000;
  std::uint64_t bench_seed = 1;
  std::string bench_family;

  auto* build = app.add_subcommand("build", "build an index and write it to a file");
  build->add_option("--algo", algo, "stree|lstrie|simlst|cdawg|simlcdawg")->required();
  build_src.add_options(build);
  build->add_option("--output", output, "index file")->required();

  auto* query = app.add_subcommand("query", "query a stored index");
  query->add_option("--index", index_path, "index file")->required();
  query->add_option("--pattern", pattern, "pattern bytes")->required();
  query->add_option("--mode", mode, "exists|count|positions")
      ->check(CLI::IsMember({"exists", "count", "positions"}));

  auto* stats = app.add_subcommand("stats", "node and edge counts of every structure");
  stats_src.add_options(stats);
  stats->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run every cross-check on one text");
  verify_src.add_options(verify);
  verify->add_option("--trials", verify_opts.trials, "randomized matching trials");
  verify->add_option("--seed", verify_opts.seed, "trial seed");
  verify->add_flag("--inject-fault", verify_opts.inject_fault, "corrupt one fast link before checking");

  auto* bench = app.add_subcommand("bench", "sizes and fast-link work over a family");
  bench->add_option("--family", bench_family, "generator family")->required();
  bench->add_option("--params", params, "comma-separated parameter list")->required();
  bench->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));
  bench->add_option("--sigma", bench_sigma, "alphabet size (random, periodic)");
  bench->add_option("--seed", bench_seed, "generator and query seed");
  bench->add_option("--queries", bench_queries, "patterns per instance");

  auto* gen = app.add_subcommand("gen", "write a generated family string");
  gen_src.add_options(gen);
  gen->get_option("--no-terminator")->description("ignored; generated files never carry the end-marker");
  gen->add_option("--output", output, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*build) return cmd_build(algo, build_src, output);
    if (*query) return cmd_query(index_path, pattern, mode);
    if (*stats) return cmd_stats(stats_src, format);
    if (*verify) return cmd_verify(verify_src, verify_opts);
    if (*bench) return cmd_bench(bench_family, params, bench_sigma, bench_seed, bench_queries);
    if (*gen) return cmd_gen(gen_src, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
