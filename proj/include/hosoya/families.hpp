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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/distance.hpp"
#include "hosoya/graph.hpp"

namespace hosoya {

/// Shape parameters of the pendant tree T(a, b, s, t): a path v1..v6, one
/// pendant vertex on v2, a pendant vertex u on v5, and t, s, a, b extra
/// pendants on v4, v5, v6, u respectively. Order is a + b + s + t + 8 and the
/// diameter is 6 whenever a + b >= 1.
struct FamilyParameters {
  BigInt a, b, s, t;

  /// True for the parameter sets whose tree is palindromic: s = t + 3 =
  /// (a + b - 5)/2 with a + b odd and >= 11, and the quadratic relation
  /// (a - 3b + 3)^2 - 2(2b - 3)^2 + 94 = 0.
  bool admissible() const {
    if (a < 0 || b < 0 || s < 0 || t < 0) return false;
    BigInt sum = a + b;
    if (sum % 2 != 1 || sum < 11) return false;
    if (s != t + 3 || 2 * s != sum - 5) return false;
    BigInt x = a - 3 * b + 3;
    BigInt y = 2 * b - 3;
    return x * x - 2 * y * y + 94 == 0;
  }

  BigInt order() const { return a + b + s + t + 8; }
};

/// One solution of x^2 - 2y^2 = -94 on the branch seeded at (2, 7).
struct PellSolution {
  int index;
  BigInt x, y;
};

/// First `count` solutions of x^2 - 2y^2 = -94 via the recurrence
/// x' = 3x + 4y, y' = 3y + 2x from (x0, y0) = (2, 7). Every emitted pair is
/// re-checked against the curve; x is always even and y odd on this branch.
inline std::vector<PellSolution> pell_solutions(int count) {
  if (count < 1) throw std::invalid_argument("pell_solutions: count must be >= 1");
  std::vector<PellSolution> out;
  out.reserve(static_cast<std::size_t>(count));
  BigInt x = 2, y = 7;
  for (int n = 0; n < count; ++n) {
    if (x * x - 2 * y * y != -94)
      throw std::logic_error("pell_solutions: recurrence left the curve");
    out.push_back(PellSolution{n, x, y});
    BigInt nx = 3 * x + 4 * y;
    y = 3 * y + 2 * x;
    x = nx;
  }
  return out;
}

inline constexpr std::size_t kDefaultMaterializeLimit = 2'000'000;

/// Materializes T(a, b, s, t) as an explicit graph. Vertex numbering:
/// v1..v6 = 0..5, the pendant on v2 = 6, u = 7, then the t, s, a, b pendant
/// blocks in that order.
inline Graph build_family_tree(
    const FamilyParameters& p,
    std::size_t max_vertices = kDefaultMaterializeLimit) {
  if (p.a < 0 || p.b < 0 || p.s < 0 || p.t < 0)
    throw std::invalid_argument("build_family_tree: parameters must be >= 0");
  BigInt order = p.order();
  if (order > max_vertices)
    throw std::invalid_argument("build_family_tree: " + order.str() +
                                " vertices exceeds limit of " +
                                std::to_string(max_vertices));
  int n = order.convert_to<int>();
  Graph g(n);
  for (int i = 0; i < 5; ++i) g.add_edge(i, i + 1);  // path v1..v6
  g.add_edge(1, 6);                                  // pendant on v2
  g.add_edge(4, 7);                                  // u on v5
  int next = 8;
  auto attach = [&](int anchor, const BigInt& count) {
    for (BigInt i = 0; i < count; ++i) g.add_edge(anchor, next++);
  };
  attach(3, p.t);  // t pendants on v4
  attach(4, p.s);  // s pendants on v5
  attach(5, p.a);  // a pendants on v6
  attach(7, p.b);  // b pendants on u
  return g;
}

/// Closed-form distance distribution of T(a, b, s, t), always 7 entries
/// (alpha6 = 0 in the degenerate a = b = 0 case). alpha3 is not independent:
/// it is forced by the identity sum_{k>=1} alpha[k] = n(n-1)/2.
inline DistanceDistribution closed_form_alpha(const FamilyParameters& p) {
  if (p.a < 0 || p.b < 0 || p.s < 0 || p.t < 0)
    throw std::invalid_argument("closed_form_alpha: parameters must be >= 0");
  const BigInt &a = p.a, &b = p.b, &s = p.s, &t = p.t;
  BigInt n = p.order();
  std::vector<BigInt> alpha(7);
  alpha[0] = n;
  alpha[1] = n - 1;
  alpha[2] = choose2(a + 1) + choose2(b + 1) + choose2(s + 3) + choose2(t + 2) + 4;
  alpha[4] = (s + 2) + (a + b + 2) * (t + 1) + a * b;
  alpha[5] = a + b + 2 * (s + 2);
  alpha[6] = 2 * (a + b);
  alpha[3] = n + choose2(n) -
             (alpha[0] + alpha[1] + alpha[2] + alpha[4] + alpha[5] + alpha[6]);
  if (alpha[3] < 0)
    throw std::logic_error("closed_form_alpha: negative alpha3");
  return DistanceDistribution(std::move(alpha));
}

/// The n-th palindromic member of the diameter-6 family: parameters derived
/// from the n-th Pell solution as a = x + (3y + 3)/2, b = (y + 3)/2,
/// s = (a + b - 5)/2, t = s - 3, together with its coefficient vector.
/// The returned distribution always has Z = 0.
inline std::pair<FamilyParameters, DistanceDistribution> family_member(
    int index) {
  if (index < 0) throw std::invalid_argument("family_member: index must be >= 0");
  PellSolution sol = pell_solutions(index + 1).back();
  FamilyParameters p;
  p.a = sol.x + (3 * sol.y + 3) / 2;
  p.b = (sol.y + 3) / 2;
  p.s = (p.a + p.b - 5) / 2;
  p.t = p.s - 3;
  if (!p.admissible())
    throw std::logic_error("family_member: derived parameters not admissible");
  return {p, closed_form_alpha(p)};
}

inline constexpr int kDefaultHammingLimit = 14;

/// Hypercube H(m,2): vertices are the m-bit words (index = binary value),
/// adjacent when they differ in exactly one bit. 2^m vertices and m*2^(m-1)
/// edges; only for materialization, closed forms go through hamming_alpha.
inline Graph hamming_graph(int m, int max_m = kDefaultHammingLimit) {
  if (m < 1) throw std::invalid_argument("hamming_graph: m must be >= 1");
  if (m > max_m)
    throw std::invalid_argument("hamming_graph: m = " + std::to_string(m) +
                                " exceeds materialization limit " +
                                std::to_string(max_m));
  int n = 1 << m;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < m; ++k) {
      int w = v ^ (1 << k);
      if (v < w) g.add_edge(v, w);
    }
  return g;
}

/// Closed-form distance distribution of H(m,2): alpha[0] = 2^m and
/// alpha[k] = 2^(m-1) * C(m,k) for 1 <= k <= m. Z of this vector is 2^(m-1).
inline DistanceDistribution hamming_alpha(int m) {
  if (m < 1) throw std::invalid_argument("hamming_alpha: m must be >= 1");
  std::vector<BigInt> alpha(static_cast<std::size_t>(m) + 1);
  BigInt half = BigInt(1) << (m - 1);
  alpha[0] = half * 2;
  for (int k = 1; k <= m; ++k)
    alpha[static_cast<std::size_t>(k)] = half * binomial(m, static_cast<unsigned>(k));
  return DistanceDistribution(std::move(alpha));
}

}  // namespace hosoya
