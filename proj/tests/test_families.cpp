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

#include <vector>

#include "hosoya/distance.hpp"
#include "hosoya/families.hpp"
#include "hosoya/palindrome.hpp"
#include "oracles.hpp"

using hosoya::BigInt;
using hosoya::FamilyParameters;
using hosoya::Graph;

namespace {

FamilyParameters params_of(long long a, long long b, long long s, long long t) {
  return FamilyParameters{BigInt(a), BigInt(b), BigInt(s), BigInt(t)};
}

bool alpha_equals(const hosoya::DistanceDistribution& dist,
                  const std::vector<long long>& expected) {
  std::vector<std::uint64_t> e;
  for (long long v : expected) e.push_back(static_cast<std::uint64_t>(v));
  return oracle::same_alpha(dist, e);
}

}  // namespace

TEST_CASE("pell solutions on the branch seeded at (2, 7)") {
  auto sols = hosoya::pell_solutions(4);
  REQUIRE(sols.size() == 4);
  CHECK(sols[0].x == 2);
  CHECK(sols[0].y == 7);
  CHECK(sols[1].x == 34);
  CHECK(sols[1].y == 25);
  CHECK(sols[2].x == 202);
  CHECK(sols[2].y == 143);
  CHECK(sols[3].x == 1178);
  CHECK(sols[3].y == 833);

  CHECK_THROWS_AS(hosoya::pell_solutions(0), std::invalid_argument);

  SECTION("curve and parity invariants hold far out") {
    for (const auto& s : hosoya::pell_solutions(51)) {
      REQUIRE(s.x * s.x - 2 * s.y * s.y == -94);
      REQUIRE(s.x % 2 == 0);
      REQUIRE(s.y % 2 == 1);
    }
  }
}

TEST_CASE("family tree construction") {
  Graph t0 = hosoya::build_family_tree(params_of(14, 5, 7, 4));
  CHECK(t0.vertex_count() == 38);
  CHECK(t0.edge_count() == 37);

  SECTION("vertex numbering follows the documented layout") {
    // (a,b,s,t) = (2,1,1,1): path 0..5, pendant 6 on v2=1, u=7 on v5=4,
    // then t block {8} on v4=3, s block {9} on v5=4, a block {10,11} on
    // v6=5, b block {12} on u=7.
    Graph g = hosoya::build_family_tree(params_of(2, 1, 1, 1));
    REQUIRE(g.vertex_count() == 13);
    CHECK(g.neighbors(0) == std::vector<int>{1});
    CHECK(g.neighbors(1) == std::vector<int>{0, 2, 6});
    CHECK(g.neighbors(3) == std::vector<int>{2, 4, 8});
    CHECK(g.neighbors(4) == std::vector<int>{3, 5, 7, 9});
    CHECK(g.neighbors(5) == std::vector<int>{4, 10, 11});
    CHECK(g.neighbors(7) == std::vector<int>{4, 12});
  }
  SECTION("degenerate all-zero parameters give an 8-vertex tree of diameter 5") {
    Graph g = hosoya::build_family_tree(params_of(0, 0, 0, 0));
    REQUIRE(g.vertex_count() == 8);
    CHECK(hosoya::diameter(hosoya::distance_distribution(g)) == 5);
  }
  SECTION("smallest non-degenerate shape has diameter 6") {
    Graph g = hosoya::build_family_tree(params_of(1, 1, 0, 0));
    REQUIRE(g.vertex_count() == 10);
    CHECK(hosoya::diameter(hosoya::distance_distribution(g)) == 6);
  }
  SECTION("materialization limit is enforced") {
    CHECK_THROWS_AS(hosoya::build_family_tree(params_of(100, 0, 0, 0), 50),
                    std::invalid_argument);
    CHECK_THROWS_AS(hosoya::build_family_tree(params_of(-1, 0, 0, 0)),
                    std::invalid_argument);
  }
}

TEST_CASE("closed-form coefficients") {
  CHECK(alpha_equals(hosoya::closed_form_alpha(params_of(14, 5, 7, 4)),
                     {38, 37, 184, 223, 184, 37, 38}));
  CHECK(alpha_equals(hosoya::closed_form_alpha(params_of(73, 14, 41, 38)),
                     {174, 173, 4536, 5459, 4536, 173, 174}));
  CHECK(alpha_equals(hosoya::closed_form_alpha(params_of(0, 0, 0, 0)),
                     {8, 7, 8, 5, 4, 4, 0}));
}

TEST_CASE("closed form equals BFS on a parameter grid") {
  for (long long a = 0; a <= 3; ++a)
    for (long long b = 0; b <= 3; ++b)
      for (long long s = 0; s <= 3; ++s)
        for (long long t = 0; t <= 3; ++t) {
          auto p = params_of(a, b, s, t);
          auto closed = hosoya::closed_form_alpha(p);
          auto bfs = hosoya::distance_distribution(hosoya::build_family_tree(p));
          std::size_t len = std::max(closed.size(), bfs.size());
          for (std::size_t k = 0; k < len; ++k) {
            BigInt lhs = k < closed.size() ? closed[k] : BigInt(0);
            BigInt rhs = k < bfs.size() ? bfs[k] : BigInt(0);
            REQUIRE(lhs == rhs);
          }
        }
}

TEST_CASE("family members reproduce the first four rows exactly") {
  struct Row {
    long long x, y, vertices, a, b, s, t;
    std::vector<long long> alpha;
  };
  const std::vector<Row> rows = {
      {2, 7, 38, 14, 5, 7, 4, {38, 37, 184, 223, 184, 37, 38}},
      {34, 25, 174, 73, 14, 41, 38, {174, 173, 4536, 5459, 4536, 173, 174}},
      {202, 143, 982, 418, 73, 243, 240,
       {982, 981, 149572, 179583, 149572, 981, 982}},
      {1178, 833, 5694, 2429, 418, 1421, 1418,
       {5694, 5693, 5059476, 6071939, 5059476, 5693, 5694}},
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto sol = hosoya::pell_solutions(static_cast<int>(i) + 1).back();
    CHECK(sol.x == rows[i].x);
    CHECK(sol.y == rows[i].y);
    auto [p, alpha] = hosoya::family_member(static_cast<int>(i));
    CHECK(p.a == rows[i].a);
    CHECK(p.b == rows[i].b);
    CHECK(p.s == rows[i].s);
    CHECK(p.t == rows[i].t);
    CHECK(alpha.vertex_count() == rows[i].vertices);
    CHECK(alpha_equals(alpha, rows[i].alpha));
  }
  CHECK_THROWS_AS(hosoya::family_member(-1), std::invalid_argument);
}

TEST_CASE("family invariants hold for the first 51 members") {
  for (int index = 0; index <= 50; ++index) {
    auto [p, alpha] = hosoya::family_member(index);
    REQUIRE(p.admissible());
    BigInt sum = p.a + p.b;
    REQUIRE(sum % 2 == 1);
    REQUIRE(sum >= 19);
    REQUIRE((p.a - 3 * p.b + 3) * (p.a - 3 * p.b + 3) -
                2 * (2 * p.b - 3) * (2 * p.b - 3) + 94 ==
            0);
    auto report = hosoya::palindromicity_distance(alpha);
    REQUIRE(report.z == 0);
    REQUIRE(report.diameter == 6);
    BigInt n = alpha.vertex_count();
    REQUIRE(hosoya::wiener_index(alpha) == 6 * n * (n + 1) / 4);
  }
}

TEST_CASE("admissibility predicate") {
  auto [p0, alpha0] = hosoya::family_member(0);
  CHECK(p0.admissible());
  CHECK_FALSE(params_of(14, 5, 7, 3).admissible());   // s != t + 3
  CHECK_FALSE(params_of(14, 5, 6, 3).admissible());   // 2s != a + b - 5
  CHECK_FALSE(params_of(13, 5, 7, 4).admissible());   // a + b even
  CHECK_FALSE(params_of(15, 4, 7, 4).admissible());   // off the quadratic
  CHECK_FALSE(params_of(0, 0, 0, 0).admissible());
}

TEST_CASE("hamming graphs") {
  Graph k2 = hosoya::hamming_graph(1);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  Graph c4 = hosoya::hamming_graph(2);
  REQUIRE(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.neighbors(0) == std::vector<int>{1, 2});
  CHECK(c4.neighbors(3) == std::vector<int>{1, 2});

  Graph cube = hosoya::hamming_graph(3);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 12);

  CHECK_THROWS_AS(hosoya::hamming_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(hosoya::hamming_graph(15), std::invalid_argument);
  CHECK_NOTHROW(hosoya::hamming_graph(15, 16));
}

TEST_CASE("hamming closed form") {
  CHECK(alpha_equals(hosoya::hamming_alpha(3), {8, 12, 12, 4}));
  CHECK(alpha_equals(hosoya::hamming_alpha(1), {2, 1}));
  auto h4 = hosoya::hamming_alpha(4);
  CHECK(alpha_equals(h4, {16, 32, 48, 32, 8}));
  CHECK(hosoya::palindromicity_distance(h4).z == 8);

  SECTION("closed form equals BFS for m = 1..6") {
    for (int m = 1; m <= 6; ++m) {
      auto closed = hosoya::hamming_alpha(m);
      auto bfs = hosoya::distance_distribution(hosoya::hamming_graph(m));
      REQUIRE(closed.alpha() == bfs.alpha());
    }
  }
  SECTION("Z is half the vertex count for m = 1..30") {
    for (int m = 1; m <= 30; ++m)
      REQUIRE(hosoya::palindromicity_distance(hosoya::hamming_alpha(m)).z ==
              BigInt(1) << (m - 1));
  }
}
