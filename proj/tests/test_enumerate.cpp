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

#include <catch2/catch.hpp>

#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "hosoya/enumerate.hpp"
#include "hosoya/palindrome.hpp"
#include "hosoya/report_json.hpp"
#include "hosoya/search.hpp"
#include "oracles.hpp"

using hosoya::Graph;
using hosoya::TreeCode;

namespace {

std::uint64_t count_trees(int n) {
  auto cursor = hosoya::free_trees(n);
  std::uint64_t count = 0;
  while (cursor.next()) ++count;
  return count;
}

// Unlabeled free tree counts for n = 1..10, computed once with the
// Prufer-enumeration oracle below (verified live for small n in this file).
const std::vector<std::uint64_t> kFreeTreeCounts = {0, 1, 1,  1,  2,  3,
                                                    6, 11, 23, 47, 106};

}  // namespace

TEST_CASE("tree codes decode by the parent rule") {
  CHECK(hosoya::tree_code_to_graph(TreeCode({0, 1, 2})).neighbors(1) ==
        std::vector<int>{0, 2});
  Graph star = hosoya::tree_code_to_graph(TreeCode({0, 1, 1, 1}));
  CHECK(star.degree(0) == 3);
  CHECK(star.degree(1) == 1);
  // (0,1,2,1) is P4 rooted at its second vertex: 1-0, 1-2, 0-3... the new
  // depth-1 vertex hangs off the root, giving the path 2-1-0-3.
  Graph p4 = hosoya::tree_code_to_graph(TreeCode({0, 1, 2, 1}));
  CHECK(p4.degree(0) == 2);
  CHECK(p4.degree(1) == 2);
  CHECK(p4.degree(2) == 1);
  CHECK(p4.degree(3) == 1);

  SECTION("malformed level sequences are rejected") {
    CHECK_THROWS_AS(TreeCode({}), std::invalid_argument);
    CHECK_THROWS_AS(TreeCode({1}), std::invalid_argument);
    CHECK_THROWS_AS(TreeCode({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(TreeCode({0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(TreeCode({0, 1, 0}), std::invalid_argument);
    CHECK_NOTHROW(TreeCode({0}));
  }
}

TEST_CASE("enumeration counts match the frozen oracle values") {
  for (int n = 1; n <= 10; ++n)
    CHECK(count_trees(n) == kFreeTreeCounts[static_cast<std::size_t>(n)]);
}

TEST_CASE("enumeration matches the Prufer oracle tree-by-tree") {
  // Not just the counts: the sets of isomorphism classes agree.
  for (int n = 1; n <= 8; ++n) {
    auto expected = oracle::free_tree_codes_by_prufer(n);
    std::unordered_set<std::string> produced;
    auto cursor = hosoya::free_trees(n);
    while (cursor.next())
      produced.insert(
          oracle::ahu_canonical(hosoya::tree_code_to_graph(cursor.code())));
    REQUIRE(produced == expected);
  }
}

TEST_CASE("every emitted code decodes to a tree and classes never repeat") {
  for (int n = 1; n <= 12; ++n) {
    std::unordered_set<std::string> seen;
    auto cursor = hosoya::free_trees(n);
    std::uint64_t count = 0;
    while (cursor.next()) {
      ++count;
      Graph g = hosoya::tree_code_to_graph(cursor.code());
      REQUIRE(g.vertex_count() == n);
      REQUIRE(g.edge_count() == static_cast<std::size_t>(n - 1));
      REQUIRE(hosoya::is_connected(g));
      REQUIRE(seen.insert(oracle::ahu_canonical(g)).second);  // isomorph-free
    }
    REQUIRE(count == seen.size());
  }
}

TEST_CASE("enumeration order limit") {
  CHECK_THROWS_AS(hosoya::free_trees(0), std::invalid_argument);
  CHECK_THROWS_AS(hosoya::free_trees(27), std::invalid_argument);
  auto cursor = hosoya::free_trees(27, 30);  // raised limit: first tree only
  CHECK(cursor.next());
  CHECK(cursor.levels()[0] == 0);
}

TEST_CASE("fast tree distribution equals per-vertex BFS for n <= 14") {
  for (int n = 1; n <= 14; ++n) {
    auto cursor = hosoya::free_trees(n);
    while (cursor.next()) {
      TreeCode code = cursor.code();
      auto fast = hosoya::tree_distance_distribution(code);
      auto bfs = hosoya::distance_distribution(hosoya::tree_code_to_graph(code));
      REQUIRE(fast.alpha() == bfs.alpha());
    }
  }
}

TEST_CASE("search over small orders") {
  auto r8 = hosoya::search_palindromic(8);
  CHECK(r8.n == 8);
  CHECK(r8.trees_examined == 23);
  CHECK(r8.palindromic.empty());

  auto r10 = hosoya::search_palindromic(10);
  CHECK(r10.trees_examined == 106);
  CHECK(r10.palindromic.empty());

  std::uint64_t by_diameter = 0;
  for (const auto& [d, c] : r10.per_diameter_counts) {
    CHECK(d >= 2);
    CHECK(d <= 9);
    by_diameter += c;
  }
  CHECK(by_diameter == 106);

  SECTION("single vertex and single edge degenerate cleanly") {
    auto r1 = hosoya::search_palindromic(1);
    CHECK(r1.trees_examined == 1);
    REQUIRE(r1.palindromic.size() == 1);  // D = 0: trivially palindromic
    CHECK_FALSE(r1.min_margin_odd_diameter.has_value());
    auto r2 = hosoya::search_palindromic(2);
    CHECK(r2.trees_examined == 1);
    CHECK(r2.palindromic.empty());  // K2 has Z = 1
    REQUIRE(r2.min_margin_odd_diameter.has_value());
    CHECK(*r2.min_margin_odd_diameter == 0);
  }
}

TEST_CASE("search margins agree with the graph-level operation") {
  for (int n = 4; n <= 11; ++n) {
    auto report = hosoya::search_palindromic(n);
    REQUIRE(report.min_margin_odd_diameter.has_value());
    REQUIRE(report.min_margin_tree.has_value());
    Graph g = hosoya::tree_code_to_graph(*report.min_margin_tree);
    REQUIRE(hosoya::odd_diameter_margin(g) == *report.min_margin_odd_diameter);

    // Independently recompute the minimum over the plain stream.
    std::int64_t best = INT64_MAX;
    auto cursor = hosoya::free_trees(n);
    while (cursor.next()) {
      auto dist =
          hosoya::distance_distribution(hosoya::tree_code_to_graph(cursor.code()));
      if (hosoya::diameter(dist) % 2 == 0) continue;
      auto z = hosoya::palindromicity_distance(dist).z;
      best = std::min(best,
                      (z - hosoya::BigInt((n + 1) / 2)).convert_to<std::int64_t>());
    }
    REQUIRE(best == *report.min_margin_odd_diameter);
  }
}

TEST_CASE("sharded scans merge to the sequential report byte for byte") {
  for (int n : {9, 12, 13}) {
    std::string sequential =
        hosoya::search_report_json_string(hosoya::search_palindromic(n));
    for (int shards : {2, 4, 8}) {
      auto parts = hosoya::make_shards(n, shards);
      REQUIRE(parts.size() == static_cast<std::size_t>(shards));
      hosoya::SearchReport merged;
      bool first = true;
      for (const auto& shard : parts) {
        auto r = hosoya::scan_shard(shard);
        merged = first ? std::move(r) : hosoya::merge_reports(std::move(merged), std::move(r));
        first = false;
      }
      REQUIRE(hosoya::search_report_json_string(merged) == sequential);
    }
    // The threaded entry point takes the same path.
    hosoya::SearchOptions options;
    options.jobs = 3;
    REQUIRE(hosoya::search_report_json_string(hosoya::search_palindromic(n, options)) ==
            sequential);
  }
}

TEST_CASE("prefix blocks partition the stream in order") {
  for (int n : {6, 10, 12}) {
    std::vector<std::vector<int>> sequential;
    auto cursor = hosoya::free_trees(n);
    while (cursor.next()) sequential.push_back(cursor.code().levels());
    for (int prefix_len : {3, 5, 8}) {
      std::vector<std::vector<int>> sharded;
      for (const auto& block : hosoya::prefix_blocks(n, prefix_len)) {
        auto bc = hosoya::FreeTreeCursor::over_block(block);
        while (bc.next()) sharded.push_back(bc.code().levels());
      }
      REQUIRE(sharded == sequential);
    }
  }
}

TEST_CASE("conjecture audit") {
  auto entries = hosoya::conjecture_audit(12);
  REQUIRE(entries.size() == 8);
  for (const auto& e : entries) {
    REQUIRE(e.n >= 5);
    REQUIRE(e.odd_diameter_trees > 0);
    REQUIRE(e.min_margin.has_value());
    REQUIRE(*e.min_margin >= 0);  // the odd-diameter bound, checked not assumed
    REQUIRE(e.min_margin_tree.has_value());
    Graph g = hosoya::tree_code_to_graph(*e.min_margin_tree);
    REQUIRE(hosoya::odd_diameter_margin(g) == *e.min_margin);
  }
  // P6 is an odd-diameter tree on 6 vertices, so the minimum is at most
  // its margin of 6.
  CHECK(entries[1].n == 6);
  CHECK(*entries[1].min_margin <= 6);

  CHECK_THROWS_AS(hosoya::conjecture_audit(4), std::invalid_argument);
  CHECK_THROWS_AS(hosoya::conjecture_audit(27), std::invalid_argument);
}

TEST_CASE("search report JSON shape") {
  auto doc = hosoya::search_report_json(hosoya::search_palindromic(7));
  REQUIRE(doc.contains("n"));
  REQUIRE(doc.contains("trees_examined"));
  REQUIRE(doc.contains("per_diameter_counts"));
  REQUIRE(doc.contains("palindromic"));
  REQUIRE(doc.contains("min_margin_odd_diameter"));
  CHECK(doc["n"] == 7);
  CHECK(doc["trees_examined"] == 11);
  CHECK(doc["palindromic"].is_array());

  // Palindromic entries carry levels as numbers and alpha as decimal strings.
  auto one = hosoya::search_report_json(hosoya::search_palindromic(1));
  REQUIRE(one["palindromic"].size() == 1);
  CHECK(one["palindromic"][0]["levels"] == nlohmann::ordered_json::array({0}));
  CHECK(one["palindromic"][0]["alpha"][0] == "1");
  CHECK(one["min_margin_odd_diameter"].is_null());
}
