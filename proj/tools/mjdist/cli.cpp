// Copyright 2026 The mjdist Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mjdist/aut_search.hpp"
#include "mjdist/certificate_json.hpp"
#include "mjdist/combinatorics.hpp"
#include "mjdist/dist_engine.hpp"
#include "mjdist/errors.hpp"
#include "mjdist/graph.hpp"
#include "mjdist/group_actions.hpp"

namespace mjdist::cli {

namespace {

struct SpecFlags {
  int n = 0;
  int k = 0;
  std::string set;

  void add_to(CLI::App* app) {
    app->add_option("--n", n, "Ground set size")->required();
    app->add_option("--k", k, "Subset size")->required();
    app->add_option("--set", set, "Index set I as a comma list, e.g. 1,3")->required();
  }

  std::vector<int> index_set() const {
    std::vector<int> out;
    std::stringstream in(set);
    std::string item;
    while (std::getline(in, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
      if (item.empty()) continue;
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw InvalidArgument("bad index set entry '" + item + "'");
      out.push_back(value);
    }
    return out;
  }

  MergedJohnsonSpec spec() const { return canonicalize(n, k, index_set()); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line.substr(first));
  }
  return out;
}

std::vector<long long> numbers_in(const std::string& line) {
  std::vector<long long> out;
  std::string cleaned = line;
  for (char& ch : cleaned) {
    if (ch == ',' || ch == '{' || ch == '}' || ch == '[' || ch == ']') ch = ' ';
  }
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError("bad number '" + token + "'");
    out.push_back(value);
  }
  return out;
}

// Edge list ("u v" per line) or DIMACS ("p edge V E", "e u v"), 1-based.
Graph read_graph(const std::string& path) {
  std::size_t declared = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t largest = 0;
  for (const std::string& line : content_lines(read_file(path))) {
    if (line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream in(line);
      std::string p, kind;
      long long v = -1;
      long long e = -1;
      in >> p >> kind >> v >> e;
      if (kind != "edge" || v < 0) throw ParseError("bad DIMACS header: " + line);
      declared = static_cast<std::size_t>(v);
      continue;
    }
    const auto nums = numbers_in(line[0] == 'e' ? line.substr(1) : line);
    if (nums.size() != 2 || nums[0] < 1 || nums[1] < 1 || nums[0] == nums[1]) {
      throw ParseError("bad edge line: " + line);
    }
    const auto u = static_cast<std::size_t>(nums[0]);
    const auto v = static_cast<std::size_t>(nums[1]);
    largest = std::max({largest, u, v});
    edges.emplace_back(u - 1, v - 1);
  }
  if (declared != 0 && largest > declared) throw ParseError("edge endpoint exceeds V");
  return Graph::from_edges(std::max(declared, largest), edges);
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

int run_dist(const SpecFlags& flags, const std::string& certificate_path,
             const DistOptions& options, bool stats, std::ostream& out,
             std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Certificate cert = distinguishing_number(flags.n, flags.k, flags.index_set(), options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << "Dist(" << cert.spec.to_string() << ") = " << cert.dist << ", case "
      << to_string(cert.dist_case) << "\n";
  if (stats) {
    err << "upper: " << cert.upper_method << ", lower: " << cert.lower_method << " ("
        << cert.lower_detail << ")\n";
    if (!cert.detset.empty()) err << "determining set size: " << cert.detset.size() << "\n";
    err << "seconds: " << seconds << "\n";
  }
  if (!certificate_path.empty()) {
    std::ofstream file(certificate_path, std::ios::binary);
    if (!file) throw ParseError("cannot write " + certificate_path);
    file << to_json(cert);
  }
  return kOk;
}

int run_verify(const std::string& path, const DistOptions& options, std::ostream& out,
               std::ostream& err) {
  Certificate cert;
  try {
    cert = certificate_from_json(read_file(path));
  } catch (const ParseError& e) {
    err << "malformed certificate: " << e.what() << "\n";
    return kUsageError;
  }
  const Verification result = verify_certificate(cert, options);
  if (!result.ok) {
    out << "verification failed: " << result.reason << "\n";
    return kVerificationFailed;
  }
  out << "verified: Dist(" << cert.spec.to_string() << ") = " << cert.dist << "\n";
  return kOk;
}

int run_detset(const SpecFlags& flags, bool have_spec, const std::string& family,
               const std::string& vertices_path, const std::string& graph_path,
               const SearchOptions& search, std::ostream& out) {
  Graph g;
  std::vector<std::size_t> set;
  if (!graph_path.empty()) {
    g = read_graph(graph_path);
    if (vertices_path.empty()) throw InvalidArgument("--graph needs --vertices");
    for (const std::string& line : content_lines(read_file(vertices_path))) {
      for (long long v : numbers_in(line)) {
        if (v < 1 || static_cast<std::size_t>(v) > g.num_vertices()) {
          throw InvalidArgument("vertex index " + std::to_string(v) + " out of range");
        }
        set.push_back(static_cast<std::size_t>(v - 1));
      }
    }
  } else {
    if (!have_spec) throw InvalidArgument("give --n, --k and --set, or --graph");
    const MergedJohnsonSpec spec = flags.spec();
    if (flags.k != spec.k()) throw InvalidArgument("use k <= n/2 for determining sets");
    g = build(spec);
    if (family == "builtin") {
      set = determining_set_for(spec).vertices;
    } else if (!family.empty()) {
      throw InvalidArgument("unknown family '" + family + "'");
    } else if (!vertices_path.empty()) {
      for (const std::string& line : content_lines(read_file(vertices_path))) {
        const auto nums = numbers_in(line);
        std::vector<int> elements(nums.begin(), nums.end());
        if (static_cast<int>(elements.size()) != spec.k()) {
          throw InvalidArgument("'" + line + "' is not a " + std::to_string(spec.k()) +
                                "-subset");
        }
        set.push_back(vertex_of(KSubset::from_elements(elements, spec.n())));
      }
    } else {
      throw InvalidArgument("give --family builtin or --vertices FILE");
    }
  }
  std::vector<std::size_t> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const bool determining = is_determining_set(g, sorted, search);
  const bool asymmetric = is_asymmetric(induced_subgraph(g, sorted), search);
  out << "determining: " << yes_no(determining) << ", asymmetric induced: "
      << yes_no(asymmetric) << "\n";
  return kOk;
}

int run_aut(const SpecFlags& flags, bool order_only, bool stats,
            const SearchOptions& search, std::ostream& out, std::ostream& err) {
  const MergedJohnsonSpec spec = flags.spec();
  const Graph g = build(spec);
  const SearchResult result = mjdist::search(g, {}, search);
  if (order_only) {
    out << result.group_order << "\n";
  } else {
    out << "graph: " << spec.to_string() << "\n";
    out << "order: " << result.group_order << "\n";
    out << "generators: " << result.generators.size() << "\n";
    try {
      const AutDescriptor d = classify(spec);
      out << "family: (" << static_cast<int>(d.aut_case) << ") " << d.group_name << "\n";
    } catch (const InvalidArgument&) {
      out << "family: complete or edgeless\n";
    }
  }
  if (stats) {
    err << "nodes: " << result.stats.nodes << ", leaves: " << result.stats.leaves
        << ", depth: " << result.stats.depth << ", seconds: " << result.stats.seconds
        << "\n";
  }
  return kOk;
}

int run_export(const SpecFlags& flags, const std::string& format,
               const std::string& output_path, std::ostream& out) {
  const Graph g = build(flags.spec());
  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path, std::ios::binary);
    if (!file) throw ParseError("cannot write " + output_path);
  }
  std::ostream& sink = output_path.empty() ? out : file;
  const auto edges = g.edges();
  if (format == "dimacs") {
    sink << "p edge " << g.num_vertices() << " " << edges.size() << "\n";
    for (const auto& [u, v] : edges) sink << "e " << u + 1 << " " << v + 1 << "\n";
  } else {
    for (const auto& [u, v] : edges) sink << u + 1 << " " << v + 1 << "\n";
  }
  return kOk;
}

int run_fixed_count(int m, const std::string& perm, std::ostream& out) {
  const Permutation sigma = Permutation::from_cycles(perm, 2 * m);
  out << count_fixed_equipartitions(sigma) << "\n";
  return kOk;
}

int run_bound(int m, std::ostream& out) {
  const LemmaBound bound = lemma_bound(m);
  out << bound.to_string() << (bound.less_than_one() ? " < 1" : " >= 1") << "\n";
  return kOk;
}

int run_oracle(const SpecFlags& flags, bool have_spec, const std::string& graph_path,
               int max_r, const SearchOptions& search, std::ostream& out) {
  if (!graph_path.empty()) {
    out << "Dist = " << brute_force_dist(read_graph(graph_path), max_r, search) << "\n";
    return kOk;
  }
  if (!have_spec) throw InvalidArgument("give --n, --k and --set, or --graph");
  const MergedJohnsonSpec spec = flags.spec();
  out << "Dist(" << spec.to_string() << ") = " << brute_force_dist(build(spec), max_r, search)
      << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinguishing numbers of merged Johnson graphs", "mjdist"};
  app.require_subcommand(1);

  SpecFlags spec_flags;
  DistOptions dist_options;
  std::uint64_t node_budget = dist_options.search.node_budget;
  std::string certificate_path;
  bool stats = false;

  CLI::App* dist = app.add_subcommand("dist", "Compute Dist(J(n,k)_I) with a certificate");
  SpecFlags dist_flags;
  dist->add_option("--n", dist_flags.n, "Ground set size")->required();
  dist->add_option("--k", dist_flags.k, "Subset size")->required();
  dist->add_option("--set", dist_flags.set, "Index set I as a comma list (empty allowed)")
      ->required();
  dist->add_option("--certificate", certificate_path, "Write the certificate JSON here");
  dist->add_option("--seed", dist_options.seed, "Seed for randomized constructions");
  dist->add_option("--budget", node_budget, "Node budget per automorphism search");
  dist->add_option("--max-vertices", dist_options.vertex_budget, "Vertex budget");
  dist->add_option("--attempts", dist_options.max_attempts, "Retries for random searches");
  dist->add_flag("--stats", stats, "Print methods and timing to stderr");

  CLI::App* verify = app.add_subcommand("verify", "Re-check a certificate");
  verify->add_option("--certificate", certificate_path, "Certificate JSON")->required();
  verify->add_option("--seed", dist_options.seed, "Seed for sampled re-checks");

  CLI::App* detset = app.add_subcommand("detset", "Test a vertex set for determining");
  std::string family;
  std::string vertices_path;
  std::string graph_path;
  SpecFlags detset_flags;
  detset->add_option("--n", detset_flags.n, "Ground set size");
  detset->add_option("--k", detset_flags.k, "Subset size");
  detset->add_option("--set", detset_flags.set, "Index set I as a comma list");
  detset->add_option("--family", family, "Use the built-in set for the spec")
      ->check(CLI::IsMember({"builtin"}));
  detset->add_option("--vertices", vertices_path,
                     "Subsets, one per line (or 1-based indices with --graph)");
  detset->add_option("--graph", graph_path, "Edge-list or DIMACS graph file");

  CLI::App* aut = app.add_subcommand("aut", "Automorphism group of J(n,k)_I");
  bool order_only = false;
  spec_flags.add_to(aut);
  aut->add_flag("--order", order_only, "Print only the group order");
  aut->add_flag("--stats", stats, "Print search statistics to stderr");
  aut->add_option("--budget", node_budget, "Node budget");

  CLI::App* exporter = app.add_subcommand("export", "Write the graph");
  SpecFlags export_flags;
  std::string format = "edgelist";
  std::string output_path;
  export_flags.add_to(exporter);
  exporter->add_option("--format", format, "edgelist or dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  exporter->add_option("--output", output_path, "Output file (default stdout)");

  CLI::App* fixed = app.add_subcommand("fixed-count", "Equipartitions fixed by a permutation");
  int m = 0;
  std::string perm;
  fixed->add_option("--m", m, "Half size; the ground set is [2m]")->required();
  fixed->add_option("--perm", perm, "Permutation in cycle notation, e.g. \"(1 2)(3 4)\"")
      ->required();

  CLI::App* bound = app.add_subcommand("bound", "(2m)! * 3^(-x) probability bound");
  int bound_m = 0;
  bound->add_option("--m", bound_m, "Half size, m >= 4")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force distinguishing number");
  SpecFlags oracle_flags;
  int max_r = 4;
  oracle->add_option("--n", oracle_flags.n, "Ground set size");
  oracle->add_option("--k", oracle_flags.k, "Subset size");
  oracle->add_option("--set", oracle_flags.set, "Index set I as a comma list");
  oracle->add_option("--graph", graph_path, "Edge-list or DIMACS graph file");
  oracle->add_option("--max-r", max_r, "Largest color count to try");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  dist_options.search.node_budget = node_budget;
  const SearchOptions& search = dist_options.search;
  try {
    if (dist->parsed()) {
      return run_dist(dist_flags, certificate_path, dist_options, stats, out, err);
    }
    if (verify->parsed()) return run_verify(certificate_path, dist_options, out, err);
    if (detset->parsed()) {
      const bool have_spec = detset->count("--n") > 0;
      return run_detset(detset_flags, have_spec, family, vertices_path, graph_path, search,
                        out);
    }
    if (aut->parsed()) return run_aut(spec_flags, order_only, stats, search, out, err);
    if (exporter->parsed()) return run_export(export_flags, format, output_path, out);
    if (fixed->parsed()) return run_fixed_count(m, perm, out);
    if (bound->parsed()) return run_bound(bound_m, out);
    if (oracle->parsed()) {
      const bool have_spec = oracle->count("--n") > 0;
      return run_oracle(oracle_flags, have_spec, graph_path, max_r, search, out);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsageError;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace mjdist::cli
