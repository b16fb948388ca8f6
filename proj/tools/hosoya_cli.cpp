// Copyright 2026 the hosoya-tools authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Subcommands:
//   poly     distance distribution, Wiener index and Z of an edge-list graph
//   family   members of the palindromic diameter-6 tree family
//   search   exhaustive palindromicity scan over free trees of a given order
//   hamming  closed-form distribution and Z of the hypercube H(m,2)
//   audit    odd-diameter margin minima over a range of orders
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hosoya/hosoya.hpp"
#include "hosoya/report_json.hpp"

namespace {

using nlohmann::ordered_json;

std::string join_alpha(const hosoya::DistanceDistribution& dist) {
  std::ostringstream out;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (k) out << ' ';
    out << hosoya::to_decimal(dist[k]);
  }
  return out.str();
}

ordered_json alpha_json(const hosoya::DistanceDistribution& dist) {
  ordered_json arr = ordered_json::array();
  for (const auto& a : dist.alpha()) arr.push_back(hosoya::to_decimal(a));
  return arr;
}

std::string join_levels(const hosoya::TreeCode& code) {
  std::ostringstream out;
  for (std::size_t i = 0; i < code.levels().size(); ++i) {
    if (i) out << ' ';
    out << code.levels()[i];
  }
  return out.str();
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct PolyArgs {
  std::string path;
  std::string eval;
  bool json = false;
};

void run_poly(const PolyArgs& args) {
  hosoya::ParsedGraph parsed = hosoya::parse_edge_list(read_file(args.path));
  if (!parsed.connected)
    throw std::runtime_error("graph is disconnected; distances are undefined");
  auto dist = hosoya::distance_distribution(parsed.graph);
  auto report = hosoya::palindromicity_distance(dist);
  std::optional<hosoya::BigRational> value;
  if (!args.eval.empty())
    value = hosoya::hosoya_evaluate(dist, hosoya::parse_rational(args.eval));

  if (args.json) {
    ordered_json doc;
    doc["alpha"] = alpha_json(dist);
    doc["diameter"] = report.diameter;
    doc["wiener"] = hosoya::to_decimal(hosoya::wiener_index(dist));
    doc["z"] = hosoya::to_decimal(report.z);
    doc["palindromic"] = report.palindromic;
    if (value) doc["eval"] = hosoya::to_decimal(*value);
    emit(doc);
    return;
  }
  std::cout << "alpha: " << join_alpha(dist) << '\n';
  std::cout << "D: " << report.diameter << '\n';
  std::cout << "W: " << hosoya::to_decimal(hosoya::wiener_index(dist)) << '\n';
  std::cout << "Z: " << hosoya::to_decimal(report.z) << '\n';
  std::cout << "palindromic: " << (report.palindromic ? "yes" : "no") << '\n';
  if (value) std::cout << "eval: " << hosoya::to_decimal(*value) << '\n';
}

struct FamilyArgs {
  int index = -1;
  int pell = 0;
  std::string emit_graph;
  bool json = false;
};

void run_family(const FamilyArgs& args) {
  if (args.pell > 0) {
    auto solutions = hosoya::pell_solutions(args.pell);
    if (args.json) {
      ordered_json doc;
      ordered_json rows = ordered_json::array();
      for (const auto& s : solutions) {
        ordered_json row;
        row["index"] = s.index;
        row["x"] = hosoya::to_decimal(s.x);
        row["y"] = hosoya::to_decimal(s.y);
        rows.push_back(std::move(row));
      }
      doc["solutions"] = std::move(rows);
      emit(doc);
    } else {
      for (const auto& s : solutions)
        std::cout << s.index << ' ' << hosoya::to_decimal(s.x) << ' '
                  << hosoya::to_decimal(s.y) << '\n';
    }
    if (args.index < 0) return;
  }
  if (args.index < 0)
    throw std::runtime_error("family: an index (or --pell COUNT) is required");

  auto [params, alpha] = hosoya::family_member(args.index);
  auto pell = hosoya::pell_solutions(args.index + 1).back();
  if (args.json) {
    ordered_json doc;
    doc["index"] = args.index;
    doc["x"] = hosoya::to_decimal(pell.x);
    doc["y"] = hosoya::to_decimal(pell.y);
    doc["a"] = hosoya::to_decimal(params.a);
    doc["b"] = hosoya::to_decimal(params.b);
    doc["s"] = hosoya::to_decimal(params.s);
    doc["t"] = hosoya::to_decimal(params.t);
    doc["vertices"] = hosoya::to_decimal(alpha.vertex_count());
    doc["alpha"] = alpha_json(alpha);
    emit(doc);
  } else {
    std::cout << "index: " << args.index << '\n';
    std::cout << "pell: x=" << hosoya::to_decimal(pell.x)
              << " y=" << hosoya::to_decimal(pell.y) << '\n';
    std::cout << "params: a=" << hosoya::to_decimal(params.a)
              << " b=" << hosoya::to_decimal(params.b)
              << " s=" << hosoya::to_decimal(params.s)
              << " t=" << hosoya::to_decimal(params.t) << '\n';
    std::cout << "vertices: " << hosoya::to_decimal(alpha.vertex_count()) << '\n';
    std::cout << "alpha: " << join_alpha(alpha) << '\n';
  }
  if (!args.emit_graph.empty()) {
    hosoya::Graph tree = hosoya::build_family_tree(params);
    std::ofstream out(args.emit_graph, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + args.emit_graph);
    out << hosoya::to_edge_list(tree);
  }
}

struct SearchArgs {
  int n = 0;
  int jobs = 1;
  int limit = hosoya::kDefaultEnumerationLimit;
  bool json = false;
};

void print_search_text(const hosoya::SearchReport& report) {
  std::cout << "n: " << report.n << '\n';
  std::cout << "trees examined: " << report.trees_examined << '\n';
  for (const auto& [d, c] : report.per_diameter_counts)
    std::cout << "diameter " << d << ": " << c << '\n';
  std::cout << "palindromic: " << report.palindromic.size() << '\n';
  for (const auto& entry : report.palindromic) {
    std::cout << "  levels: " << join_levels(entry.code) << '\n';
    std::cout << "  alpha: " << join_alpha(entry.alpha) << '\n';
  }
  std::cout << "min odd-diameter margin: ";
  if (report.min_margin_odd_diameter)
    std::cout << *report.min_margin_odd_diameter << '\n';
  else
    std::cout << "none\n";
}

void run_search(const SearchArgs& args) {
  hosoya::SearchOptions options;
  options.jobs = args.jobs;
  options.limit = args.limit;
  hosoya::SearchReport report = hosoya::search_palindromic(args.n, options);
  if (args.json)
    std::cout << hosoya::search_report_json_string(report) << '\n';
  else
    print_search_text(report);
}

struct HammingArgs {
  int m = 0;
  bool materialize = false;
  int limit = hosoya::kDefaultHammingLimit;
  bool json = false;
};

void run_hamming(const HammingArgs& args) {
  auto alpha = hosoya::hamming_alpha(args.m);
  auto report = hosoya::palindromicity_distance(alpha);
  bool checked = false;
  if (args.materialize) {
    auto bfs = hosoya::distance_distribution(
        hosoya::hamming_graph(args.m, args.limit));
    if (bfs.alpha() != alpha.alpha())
      throw std::logic_error("hamming: closed form disagrees with BFS");
    checked = true;
  }
  if (args.json) {
    ordered_json doc;
    doc["m"] = args.m;
    doc["alpha"] = alpha_json(alpha);
    doc["z"] = hosoya::to_decimal(report.z);
    if (args.materialize) doc["materialized_check"] = checked;
    emit(doc);
  } else {
    std::cout << "m: " << args.m << '\n';
    std::cout << "alpha: " << join_alpha(alpha) << '\n';
    std::cout << "Z: " << hosoya::to_decimal(report.z) << '\n';
    if (args.materialize) std::cout << "materialize: ok\n";
  }
}

struct AuditArgs {
  int n_max = 0;
  int jobs = 1;
  int limit = hosoya::kDefaultEnumerationLimit;
  bool json = false;
};

void run_audit(const AuditArgs& args) {
  hosoya::SearchOptions options;
  options.jobs = args.jobs;
  options.limit = args.limit;
  auto entries = hosoya::conjecture_audit(args.n_max, options);
  if (args.json) {
    ordered_json doc;
    doc["n_max"] = args.n_max;
    ordered_json rows = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json row;
      row["n"] = e.n;
      row["odd_diameter_trees"] = e.odd_diameter_trees;
      if (e.min_margin)
        row["min_margin"] = *e.min_margin;
      else
        row["min_margin"] = nullptr;
      if (e.min_margin_tree)
        row["levels"] = e.min_margin_tree->levels();
      else
        row["levels"] = nullptr;
      rows.push_back(std::move(row));
    }
    doc["results"] = std::move(rows);
    emit(doc);
  } else {
    for (const auto& e : entries) {
      std::cout << "n=" << e.n << " odd-diameter-trees=" << e.odd_diameter_trees;
      if (e.min_margin) {
        std::cout << " min-margin=" << *e.min_margin
                  << " levels=" << join_levels(*e.min_margin_tree) << '\n';
      } else {
        std::cout << " min-margin=none\n";
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hosoya polynomial coefficients, Wiener indices and "
               "H-palindromicity of graphs"};
  app.require_subcommand(1);

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand(
      "poly", "Distance distribution, diameter, Wiener index and Z of a graph");
  poly_cmd->add_option("file", poly.path, "edge-list file")->required();
  poly_cmd->add_option("--eval", poly.eval,
                       "evaluate the Hosoya polynomial at an exact rational");
  poly_cmd->add_flag("--json", poly.json, "JSON output");

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand(
      "family", "Palindromic diameter-6 tree family members");
  family_cmd->add_option("index", family.index, "member index (0-based)")
      ->check(CLI::NonNegativeNumber);
  family_cmd->add_option("--pell", family.pell,
                         "print the first COUNT Pell solutions")
      ->check(CLI::PositiveNumber);
  family_cmd->add_option("--emit-graph", family.emit_graph,
                         "write the tree as an edge-list file");
  family_cmd->add_flag("--json", family.json, "JSON output");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand(
      "search", "Exhaustive palindromicity scan over free trees on n vertices");
  search_cmd->add_option("n", search.n, "number of vertices")->required();
  search_cmd->add_option("--jobs", search.jobs, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--limit", search.limit,
                         "maximum order accepted (default 26)");
  search_cmd->add_flag("--json", search.json, "JSON output");

  HammingArgs hamming;
  auto* hamming_cmd =
      app.add_subcommand("hamming", "Distribution and Z of the hypercube H(m,2)");
  hamming_cmd->add_option("m", hamming.m, "word length m")->required();
  hamming_cmd->add_flag("--materialize", hamming.materialize,
                        "cross-check the closed form against graph BFS");
  hamming_cmd->add_option("--limit", hamming.limit,
                          "materialization limit for m (default 14)");
  hamming_cmd->add_flag("--json", hamming.json, "JSON output");

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand(
      "audit", "Minimum odd-diameter margin Z - ceil(n/2) for n = 5..n_max");
  audit_cmd->add_option("n_max", audit.n_max, "largest order to audit")
      ->required();
  audit_cmd->add_option("--jobs", audit.jobs, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  audit_cmd->add_option("--limit", audit.limit,
                        "maximum order accepted (default 26)");
  audit_cmd->add_flag("--json", audit.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*poly_cmd) run_poly(poly);
    if (*family_cmd) run_family(family);
    if (*search_cmd) run_search(search);
    if (*hamming_cmd) run_hamming(hamming);
    if (*audit_cmd) run_audit(audit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
