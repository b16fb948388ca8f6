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
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/distance.hpp"
#include "hosoya/enumerate.hpp"

namespace hosoya {

namespace detail {

// Reusable per-thread scratch for the all-pairs distance histogram of a
// tree given as a level sequence. Works bottom-up over the rooted
// representation: each vertex keeps the depth profile of its subtree, and
// merging a child profile into its parent counts every pair whose paths
// meet at that parent exactly once. No allocation after construction.
struct TreeScanScratch {
  int n;
  std::vector<int> parent, last_at_depth, profile_len;
  std::vector<std::uint32_t> profile;  // n rows of stride n, mostly zero
  std::vector<std::uint32_t> hist;     // hist[k] = unordered pairs at distance k

  explicit TreeScanScratch(int order)
      : n(order),
        parent(static_cast<std::size_t>(order)),
        last_at_depth(static_cast<std::size_t>(order)),
        profile_len(static_cast<std::size_t>(order)),
        profile(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0),
        hist(static_cast<std::size_t>(order), 0) {}

  void distance_histogram(const LevelSeq& levels) {
    std::fill(hist.begin(), hist.end(), 0u);
    last_at_depth[0] = 0;
    for (int i = 1; i < n; ++i) {
      parent[static_cast<std::size_t>(i)] =
          last_at_depth[static_cast<std::size_t>(levels[static_cast<std::size_t>(i)] - 1)];
      last_at_depth[static_cast<std::size_t>(levels[static_cast<std::size_t>(i)])] = i;
    }
    for (int v = 0; v < n; ++v) {
      profile_len[static_cast<std::size_t>(v)] = 1;
      profile[static_cast<std::size_t>(v) * static_cast<std::size_t>(n)] = 1;
    }
    // Preorder puts children after parents, so a reverse sweep merges each
    // finished subtree into its parent's partial profile.
    for (int i = n - 1; i >= 1; --i) {
      int p = parent[static_cast<std::size_t>(i)];
      std::uint32_t* prof_p = &profile[static_cast<std::size_t>(p) * static_cast<std::size_t>(n)];
      std::uint32_t* prof_i = &profile[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)];
      int len_p = profile_len[static_cast<std::size_t>(p)];
      int len_i = profile_len[static_cast<std::size_t>(i)];
      for (int x = 0; x < len_p; ++x) {
        std::uint32_t c = prof_p[x];
        if (!c) continue;
        for (int y = 0; y < len_i; ++y) hist[static_cast<std::size_t>(x + y + 1)] += c * prof_i[y];
      }
      for (int y = 0; y < len_i; ++y) prof_p[y + 1] += prof_i[y];
      profile_len[static_cast<std::size_t>(p)] = std::max(len_p, len_i + 1);
      std::fill(prof_i, prof_i + len_i, 0u);  // leave the row clean for reuse
    }
    std::fill(&profile[0], &profile[0] + profile_len[0], 0u);
    hist[0] = static_cast<std::uint32_t>(n);
  }
};

}  // namespace detail

/// Exact distance distribution of a tree from its level sequence, via the
/// subtree-profile merge. Agrees with distance_distribution of the decoded
/// graph; this path avoids building the graph at all.
inline DistanceDistribution tree_distance_distribution(const TreeCode& code) {
  int n = code.order();
  detail::TreeScanScratch scratch(n);
  detail::LevelSeq seq(code.levels().begin(), code.levels().end());
  scratch.distance_histogram(seq);
  int d = 0;
  for (int k = n - 1; k >= 1; --k)
    if (scratch.hist[static_cast<std::size_t>(k)]) {
      d = k;
      break;
    }
  std::vector<BigInt> alpha(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    alpha[static_cast<std::size_t>(k)] = scratch.hist[static_cast<std::size_t>(k)];
  return DistanceDistribution(std::move(alpha));
}

/// A palindromic tree found by the search, with its coefficient vector and
/// its position in the enumeration stream (order_key is monotone in
/// generation order within one search, so merged reports can be re-sorted
/// into the sequential order).
struct PalindromicTree {
  TreeCode code;
  DistanceDistribution alpha;
  std::uint64_t order_key;
};

/// Outcome of scanning every free tree on n vertices.
struct SearchReport {
  int n = 0;
  std::uint64_t trees_examined = 0;
  std::map<int, std::uint64_t> per_diameter_counts;
  std::vector<PalindromicTree> palindromic;  // in generation order
  std::optional<std::int64_t> min_margin_odd_diameter;
  std::optional<TreeCode> min_margin_tree;  // first tree attaining the minimum
};

namespace detail {

struct MarginWitness {
  std::int64_t margin;
  std::uint64_t order_key;
  LevelSeq levels;
};

struct ScanAccumulator {
  int n;
  std::uint64_t trees = 0;
  std::vector<std::uint64_t> diameter_counts;  // indexed by diameter
  std::vector<PalindromicTree> palindromic;
  std::optional<MarginWitness> margin;

  explicit ScanAccumulator(int order)
      : n(order), diameter_counts(static_cast<std::size_t>(order), 0) {}

  void consume(const LevelSeq& levels, TreeScanScratch& scratch,
               std::uint64_t order_key) {
    scratch.distance_histogram(levels);
    ++trees;
    int d = 0;
    for (int k = n - 1; k >= 1; --k)
      if (scratch.hist[static_cast<std::size_t>(k)]) {
        d = k;
        break;
      }
    ++diameter_counts[static_cast<std::size_t>(d)];
    std::int64_t z = 0;
    for (int k = 0; k <= d / 2; ++k) {
      std::int64_t lo = scratch.hist[static_cast<std::size_t>(k)];
      std::int64_t hi = scratch.hist[static_cast<std::size_t>(d - k)];
      z += lo > hi ? lo - hi : hi - lo;
    }
    if (z == 0) {
      std::vector<BigInt> alpha(static_cast<std::size_t>(d) + 1);
      for (int k = 0; k <= d; ++k)
        alpha[static_cast<std::size_t>(k)] = scratch.hist[static_cast<std::size_t>(k)];
      palindromic.push_back(PalindromicTree{
          TreeCode(std::vector<int>(levels.begin(), levels.end())),
          DistanceDistribution(std::move(alpha)), order_key});
    }
    if (d % 2 == 1) {
      std::int64_t m = z - (n + 1) / 2;
      if (!margin || m < margin->margin ||
          (m == margin->margin && order_key < margin->order_key))
        margin = MarginWitness{m, order_key, levels};
    }
  }

  void merge_from(ScanAccumulator&& other) {
    trees += other.trees;
    for (std::size_t d = 0; d < diameter_counts.size(); ++d)
      diameter_counts[d] += other.diameter_counts[d];
    for (auto& p : other.palindromic) palindromic.push_back(std::move(p));
    if (other.margin &&
        (!margin || other.margin->margin < margin->margin ||
         (other.margin->margin == margin->margin &&
          other.margin->order_key < margin->order_key)))
      margin = std::move(other.margin);
  }

  SearchReport finalize() {
    SearchReport report;
    report.n = n;
    report.trees_examined = trees;
    for (std::size_t d = 0; d < diameter_counts.size(); ++d)
      if (diameter_counts[d])
        report.per_diameter_counts[static_cast<int>(d)] = diameter_counts[d];
    std::sort(palindromic.begin(), palindromic.end(),
              [](const PalindromicTree& a, const PalindromicTree& b) {
                return a.order_key < b.order_key;
              });
    report.palindromic = std::move(palindromic);
    if (margin) {
      report.min_margin_odd_diameter = margin->margin;
      report.min_margin_tree =
          TreeCode(std::vector<int>(margin->levels.begin(), margin->levels.end()));
    }
    return report;
  }
};

}  // namespace detail

/// A static shard of the enumeration: the blocks whose index is congruent to
/// the shard number modulo the shard count. Disjoint shards cover the stream.
struct TreeShard {
  int n;
  std::vector<PrefixBlock> blocks;
};

inline std::vector<TreeShard> make_shards(int n, int shard_count,
                                          int prefix_len = 0) {
  if (shard_count < 1)
    throw std::invalid_argument("make_shards: shard count must be >= 1");
  auto blocks = prefix_blocks(n, prefix_len);
  std::vector<TreeShard> shards(static_cast<std::size_t>(shard_count));
  for (auto& s : shards) s.n = n;
  for (auto& b : blocks)
    shards[b.index % static_cast<std::uint32_t>(shard_count)].blocks.push_back(b);
  return shards;
}

/// Scans one shard. Order keys embed the block index, so merging shard
/// reports reproduces the sequential stream order exactly.
inline SearchReport scan_shard(const TreeShard& shard) {
  detail::ScanAccumulator acc(shard.n);
  detail::TreeScanScratch scratch(shard.n);
  for (const auto& block : shard.blocks) {
    FreeTreeCursor cursor = FreeTreeCursor::over_block(block);
    std::uint64_t key = static_cast<std::uint64_t>(block.index) << 32;
    while (cursor.next()) acc.consume(cursor.levels(), scratch, key++);
  }
  return acc.finalize();
}

/// Commutative merge of shard reports: counts add, palindromic lists union
/// (re-sorted into generation order), margins take the minimum with the
/// earliest witness.
inline SearchReport merge_reports(SearchReport a, SearchReport b) {
  if (a.n != b.n) throw std::invalid_argument("merge_reports: order mismatch");
  SearchReport out;
  out.n = a.n;
  out.trees_examined = a.trees_examined + b.trees_examined;
  out.per_diameter_counts = std::move(a.per_diameter_counts);
  for (const auto& [d, c] : b.per_diameter_counts)
    out.per_diameter_counts[d] += c;
  out.palindromic = std::move(a.palindromic);
  for (auto& p : b.palindromic) out.palindromic.push_back(std::move(p));
  std::sort(out.palindromic.begin(), out.palindromic.end(),
            [](const PalindromicTree& x, const PalindromicTree& y) {
              return x.order_key < y.order_key;
            });
  bool take_b = b.min_margin_odd_diameter &&
                (!a.min_margin_odd_diameter ||
                 *b.min_margin_odd_diameter < *a.min_margin_odd_diameter);
  if (take_b) {
    out.min_margin_odd_diameter = b.min_margin_odd_diameter;
    out.min_margin_tree = std::move(b.min_margin_tree);
  } else {
    out.min_margin_odd_diameter = a.min_margin_odd_diameter;
    out.min_margin_tree = std::move(a.min_margin_tree);
  }
  return out;
}

struct SearchOptions {
  int jobs = 1;
  int limit = kDefaultEnumerationLimit;
  int prefix_len = 0;  // 0 = default block granularity
};

/// Exhaustive palindromicity scan over all free trees on n vertices.
/// jobs = 1 runs a single pass over the plain stream; jobs > 1 shards the
/// stream by canonical prefix and scans shards on worker threads. The report
/// is identical either way, byte for byte once serialized.
inline SearchReport search_palindromic(int n, const SearchOptions& options = {}) {
  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    FreeTreeCursor cursor = free_trees(n, options.limit);
    detail::ScanAccumulator acc(n);
    detail::TreeScanScratch scratch(n);
    std::uint64_t key = 0;
    while (cursor.next()) acc.consume(cursor.levels(), scratch, key++);
    return acc.finalize();
  }
  FreeTreeCursor::over_all(n, options.limit);  // validate n against the limit
  auto shards = make_shards(n, jobs, options.prefix_len);
  std::vector<SearchReport> reports(shards.size());
  std::vector<std::thread> workers;
  workers.reserve(shards.size());
  for (std::size_t i = 0; i < shards.size(); ++i)
    workers.emplace_back(
        [&shards, &reports, i] { reports[i] = scan_shard(shards[i]); });
  for (auto& w : workers) w.join();
  SearchReport merged = std::move(reports[0]);
  for (std::size_t i = 1; i < reports.size(); ++i)
    merged = merge_reports(std::move(merged), std::move(reports[i]));
  return merged;
}

/// Per-order summary of the odd-diameter margin audit.
struct AuditEntry {
  int n;
  std::uint64_t odd_diameter_trees;
  std::optional<std::int64_t> min_margin;   // Z - ceil(n/2); absent when no odd-D tree
  std::optional<TreeCode> min_margin_tree;  // the minimizing tree
};

/// For each n in 5..n_max, the minimum of Z - ceil(n/2) over all odd-diameter
/// trees on n vertices, with the minimizing tree. Every reported minimum is
/// non-negative; the audit recomputes rather than assumes this.
inline std::vector<AuditEntry> conjecture_audit(int n_max,
                                                const SearchOptions& options = {}) {
  if (n_max < 5)
    throw std::invalid_argument("conjecture_audit: n_max must be >= 5");
  if (n_max > options.limit || n_max > kMaxEnumerationOrder)
    throw std::invalid_argument("conjecture_audit: n_max exceeds the limit");
  std::vector<AuditEntry> entries;
  for (int n = 5; n <= n_max; ++n) {
    SearchReport report = search_palindromic(n, options);
    AuditEntry entry{n, 0, report.min_margin_odd_diameter,
                     std::move(report.min_margin_tree)};
    for (const auto& [d, c] : report.per_diameter_counts)
      if (d % 2 == 1) entry.odd_diameter_trees += c;
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace hosoya
