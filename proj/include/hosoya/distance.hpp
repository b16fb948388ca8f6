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

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/graph.hpp"

namespace hosoya {

/// The distance distribution (alpha(G,0), ..., alpha(G,D)) of a connected
/// graph: entry k counts unordered vertex pairs at distance k, with
/// alpha[0] = n. These are exactly the coefficients of the Hosoya polynomial
/// H(G, x) = sum_k alpha[k] x^k. Entries are exact integers of arbitrary
/// size. Closed-form constructors may carry trailing zeros beyond the true
/// diameter; diameter() always reports the last nonzero index.
class DistanceDistribution {
 public:
  explicit DistanceDistribution(std::vector<BigInt> alpha)
      : alpha_(std::move(alpha)) {
    if (alpha_.empty())
      throw std::invalid_argument("distance distribution must be non-empty");
    if (alpha_[0] < 1)
      throw std::invalid_argument("alpha[0] must equal the vertex count (>= 1)");
    BigInt pairs = 0;
    for (std::size_t k = 1; k < alpha_.size(); ++k) {
      if (alpha_[k] < 0)
        throw std::invalid_argument("negative distance count");
      pairs += alpha_[k];
    }
    if (pairs != choose2(alpha_[0]))
      throw std::invalid_argument(
          "distance counts do not sum to n(n-1)/2 unordered pairs");
  }

  const std::vector<BigInt>& alpha() const { return alpha_; }
  const BigInt& operator[](std::size_t k) const { return alpha_[k]; }
  std::size_t size() const { return alpha_.size(); }
  const BigInt& vertex_count() const { return alpha_[0]; }

 private:
  std::vector<BigInt> alpha_;
};

/// Largest k with alpha[k] > 0 (trailing zeros from closed forms ignored).
inline int diameter(const DistanceDistribution& dist) {
  for (std::size_t k = dist.size(); k-- > 0;)
    if (dist[k] > 0) return static_cast<int>(k);
  return 0;  // unreachable: alpha[0] >= 1
}

/// Wiener index: sum over k >= 1 of k * alpha[k], i.e. the sum of all
/// pairwise distances. Equals H'(G, 1).
inline BigInt wiener_index(const DistanceDistribution& dist) {
  BigInt w = 0;
  for (std::size_t k = 1; k < dist.size(); ++k) w += BigInt(k) * dist[k];
  return w;
}

/// Exact evaluation of the Hosoya polynomial at a rational point.
inline BigRational hosoya_evaluate(const DistanceDistribution& dist,
                                   const BigRational& lambda) {
  BigRational acc = 0;
  for (std::size_t k = dist.size(); k-- > 0;)
    acc = acc * lambda + BigRational(dist[k]);
  return acc;
}

/// Distance distribution of a connected graph, one breadth-first search per
/// source vertex; each ordered pair is seen twice, so per-distance totals are
/// halved for k >= 1. Rejects empty and disconnected inputs.
inline DistanceDistribution distance_distribution(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1)
    throw std::invalid_argument("distance distribution needs >= 1 vertex");

  std::vector<std::uint64_t> ordered(static_cast<std::size_t>(n), 0);
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));

  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(src);
    dist[static_cast<std::size_t>(src)] = 0;
    std::size_t reached = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      int dv = dist[static_cast<std::size_t>(v)];
      for (int w : g.neighbors(v))
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dv + 1;
          ++ordered[static_cast<std::size_t>(dv + 1)];
          ++reached;
          queue.push_back(w);
        }
    }
    if (reached != static_cast<std::size_t>(n))
      throw std::invalid_argument(
          "distance distribution undefined for disconnected graphs");
  }

  int d_max = 0;
  for (int k = n - 1; k >= 1; --k)
    if (ordered[static_cast<std::size_t>(k)]) {
      d_max = k;
      break;
    }
  std::vector<BigInt> alpha(static_cast<std::size_t>(d_max) + 1);
  alpha[0] = n;
  for (int k = 1; k <= d_max; ++k)
    alpha[static_cast<std::size_t>(k)] =
        ordered[static_cast<std::size_t>(k)] / 2;
  return DistanceDistribution(std::move(alpha));
}

}  // namespace hosoya
