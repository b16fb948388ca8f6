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

#include <stdexcept>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/distance.hpp"
#include "hosoya/graph.hpp"

namespace hosoya {

/// Palindromicity audit of one distance distribution. A distribution of
/// diameter D is palindromic when alpha[k] = alpha[D-k] for every
/// k <= floor(D/2); z is the accumulated deviation
/// Z = sum_{k=0}^{floor(D/2)} |alpha[k] - alpha[D-k]|, so palindromic <=> z = 0.
struct PalindromeReport {
  BigInt z;
  bool palindromic;
  int diameter;
  std::vector<BigInt> per_k_gaps;  // |alpha[k] - alpha[D-k]| for k = 0..D/2
};

inline PalindromeReport palindromicity_distance(
    const DistanceDistribution& dist) {
  int d = diameter(dist);
  PalindromeReport report;
  report.diameter = d;
  report.z = 0;
  report.per_k_gaps.reserve(static_cast<std::size_t>(d / 2) + 1);
  for (int k = 0; k <= d / 2; ++k) {
    BigInt gap = abs(dist[static_cast<std::size_t>(k)] -
                     dist[static_cast<std::size_t>(d - k)]);
    report.z += gap;
    report.per_k_gaps.push_back(std::move(gap));
  }
  report.palindromic = report.z == 0;
  return report;
}

/// (sum of alpha[k] over even k including k = 0, sum over odd k). In a
/// bipartite graph with parts of sizes a and b these are (a^2+a+b^2+b)/2 and
/// a*b respectively: pairs within a part sit at even distance, pairs across
/// at odd distance.
inline std::pair<BigInt, BigInt> parity_sums(const DistanceDistribution& dist) {
  std::pair<BigInt, BigInt> sums{0, 0};
  for (std::size_t k = 0; k < dist.size(); ++k)
    (k % 2 == 0 ? sums.first : sums.second) += dist[k];
  return sums;
}

/// Z(G) - ceil(n/2) for a connected bipartite graph of odd diameter; the
/// result is guaranteed non-negative. Cross-checks the part-size identities
/// odd_sum = a*b and even_sum = (a^2+a+b^2+b)/2 on the way and throws
/// std::logic_error if either fails.
inline BigInt odd_diameter_margin(const Graph& g) {
  auto parts = bipartition(g);  // throws on disconnected input
  if (!parts)
    throw std::invalid_argument("odd_diameter_margin: graph is not bipartite");
  DistanceDistribution dist = distance_distribution(g);
  int d = diameter(dist);
  if (d % 2 == 0)
    throw std::invalid_argument("odd_diameter_margin: diameter is even");

  BigInt a = parts->first.size();
  BigInt b = parts->second.size();
  auto [even_sum, odd_sum] = parity_sums(dist);
  if (odd_sum != a * b || even_sum != (a * a + a + b * b + b) / 2)
    throw std::logic_error(
        "odd_diameter_margin: bipartite parity identities violated");

  BigInt n = dist.vertex_count();
  return palindromicity_distance(dist).z - (n + 1) / 2;
}

}  // namespace hosoya
