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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/graph.hpp"

namespace hosoya {

/// Enumeration is bounded by default at the order where exhaustive runs stop
/// being a desk-scale exercise; callers may raise the limit explicitly.
inline constexpr int kDefaultEnumerationLimit = 26;

/// Hard cap imposed by the 8-bit depth representation of level sequences.
inline constexpr int kMaxEnumerationOrder = 120;

/// Canonical level sequence of one unlabeled free tree: the depths of the
/// vertices of a rooted representation in preorder, levels[0] = 0 and
/// levels[i] <= levels[i-1] + 1. The parent of vertex i is the nearest j < i
/// with levels[j] = levels[i] - 1. The generator emits exactly one TreeCode
/// per isomorphism class.
class TreeCode {
 public:
  explicit TreeCode(std::vector<int> levels) : levels_(std::move(levels)) {
    if (levels_.empty())
      throw std::invalid_argument("level sequence must be non-empty");
    if (levels_[0] != 0)
      throw std::invalid_argument("level sequence must start at depth 0");
    for (std::size_t i = 1; i < levels_.size(); ++i)
      if (levels_[i] < 1 || levels_[i] > levels_[i - 1] + 1)
        throw std::invalid_argument("malformed level sequence at index " +
                                    std::to_string(i));
  }

  const std::vector<int>& levels() const { return levels_; }
  int order() const { return static_cast<int>(levels_.size()); }

  bool operator==(const TreeCode& other) const {
    return levels_ == other.levels_;
  }

 private:
  std::vector<int> levels_;
};

/// Decodes a level sequence into its tree: n vertices, n-1 edges, connected.
inline Graph tree_code_to_graph(const TreeCode& code) {
  const auto& levels = code.levels();
  int n = code.order();
  Graph g(n);
  std::vector<int> last_at_depth(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    int parent = last_at_depth[static_cast<std::size_t>(levels[i] - 1)];
    g.add_edge(parent, i);
    last_at_depth[static_cast<std::size_t>(levels[i])] = i;
  }
  return g;
}

namespace detail {

// Compact level sequence used inside the generator.
using LevelSeq = std::vector<std::int8_t>;

// Center-rooted path on n vertices: the lexicographically largest canonical
// sequence, where the enumeration starts.
inline LevelSeq initial_layout(int n) {
  LevelSeq s;
  s.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n / 2 + 1; ++i) s.push_back(static_cast<std::int8_t>(i));
  for (int i = 1; i < (n + 1) / 2; ++i) s.push_back(static_cast<std::int8_t>(i));
  return s;
}

// Successor of a canonical rooted sequence with the decrement forced at
// position p: find the parent position q of p, then fill the tail with
// cyclic copies of [q, p). Requires p >= 1 and s[p] >= 1.
inline void next_rooted_at(LevelSeq& s, int p) {
  int q = p - 1;
  while (s[static_cast<std::size_t>(q)] != s[static_cast<std::size_t>(p)] - 1) --q;
  for (std::size_t i = static_cast<std::size_t>(p); i < s.size(); ++i)
    s[i] = s[i - static_cast<std::size_t>(p) + static_cast<std::size_t>(q)];
}

// In-place rooted successor; false when the sequence was the last one
// (the star: all depths 1 after the root).
inline bool next_rooted(LevelSeq& s) {
  int p = static_cast<int>(s.size()) - 1;
  while (p > 0 && s[static_cast<std::size_t>(p)] == 1) --p;
  if (p == 0) return false;
  next_rooted_at(s, p);
  return true;
}

// Decomposition of a rooted sequence at the root: the subtree of the first
// child ("left", spanning indices [1, m)) versus the root plus everything
// from the second child on ("rest"). m is the index of the second depth-1
// vertex, or n when the root has a single child.
struct RootSplit {
  int m;
  int left_len, left_height;
  int rest_len, rest_height;
};

inline RootSplit root_split(const LevelSeq& s) {
  int n = static_cast<int>(s.size());
  int m = n;
  bool seen_one = false;
  for (int i = 1; i < n; ++i)
    if (s[static_cast<std::size_t>(i)] == 1) {
      if (seen_one) {
        m = i;
        break;
      }
      seen_one = true;
    }
  RootSplit sp;
  sp.m = m;
  sp.left_len = m - 1;
  sp.rest_len = n - m + 1;
  int lh = 0;
  for (int i = 1; i < m; ++i) lh = std::max(lh, static_cast<int>(s[static_cast<std::size_t>(i)]));
  sp.left_height = lh - 1;  // measured from the first child
  int rh = 0;
  for (int i = m; i < n; ++i) rh = std::max(rh, static_cast<int>(s[static_cast<std::size_t>(i)]));
  sp.rest_height = rh;
  return sp;
}

// Free-tree canonicity test of Wright, Richmond, Odlyzko and McKay: the
// first subtree of the root must not dominate the rest of the tree, in
// height first, then length, then lexicographic order.
inline bool is_free_canonical(const LevelSeq& s) {
  if (s.size() == 1) return true;
  RootSplit sp = root_split(s);
  if (sp.rest_height != sp.left_height) return sp.rest_height > sp.left_height;
  if (sp.left_len != sp.rest_len) return sp.left_len < sp.rest_len;
  // left[i] = s[1+i] - 1 against rest = (0, s[m], s[m+1], ...); index 0 ties.
  for (int i = 1; i < sp.left_len; ++i) {
    int li = s[static_cast<std::size_t>(1 + i)] - 1;
    int ri = s[static_cast<std::size_t>(sp.m + i - 1)];
    if (li != ri) return li < ri;
  }
  return true;
}

// Jump rule for non-canonical candidates: skip every completion of the
// current first subtree by decrementing at its last position, and when the
// removed depth was > 2, re-plant a path tall enough at the tail so the
// next candidate can satisfy the height condition. Lands on the next
// canonical free tree without visiting the sequences in between.
inline void skip_noncanonical(LevelSeq& s) {
  RootSplit sp = root_split(s);
  int p = sp.left_len;
  int removed = s[static_cast<std::size_t>(p)];
  next_rooted_at(s, p);
  if (removed > 2) {
    RootSplit ns = root_split(s);
    int len = ns.left_height + 1;
    std::size_t n = s.size();
    for (int i = 0; i < len; ++i)
      s[n - static_cast<std::size_t>(len) + static_cast<std::size_t>(i)] =
          static_cast<std::int8_t>(i + 1);
  }
}

}  // namespace detail

/// A contiguous slice of the enumeration stream: all trees whose canonical
/// sequence begins with a fixed prefix. Blocks are produced in stream order
/// and partition the stream, which makes them the unit of parallel sharding.
struct PrefixBlock {
  detail::LevelSeq start;   // lexicographically largest sequence in the block
  int prefix_len;
  std::uint32_t index;      // position of the block in stream order
};

/// Partitions the enumeration of order-n trees into prefix blocks.
/// prefix_len = 0 picks a default granularity.
inline std::vector<PrefixBlock> prefix_blocks(int n, int prefix_len = 0) {
  if (n < 1) throw std::invalid_argument("prefix_blocks: order must be >= 1");
  if (prefix_len <= 0) prefix_len = 12;
  prefix_len = std::min(prefix_len, n);
  std::vector<PrefixBlock> blocks;
  if (n == 1) {
    blocks.push_back(PrefixBlock{detail::LevelSeq{0}, 1, 0});
    return blocks;
  }
  detail::LevelSeq s = detail::initial_layout(n);
  std::uint32_t index = 0;
  for (;;) {
    blocks.push_back(PrefixBlock{s, prefix_len, index++});
    int p = -1;
    for (int i = 0; i < prefix_len; ++i)
      if (s[static_cast<std::size_t>(i)] > 1) p = i;
    if (p < 0) break;  // prefix is all ones: last block
    detail::next_rooted_at(s, p);
  }
  return blocks;
}

/// Streaming generator of canonical free trees on n vertices, in descending
/// lexicographic order of level sequences, each isomorphism class exactly
/// once. Amortized constant work per tree: successor steps plus the
/// skip_noncanonical jump. A cursor over a PrefixBlock yields exactly the
/// trees of that block, so disjoint blocks give disjoint sub-streams.
class FreeTreeCursor {
 public:
  static FreeTreeCursor over_all(int n, int limit = kDefaultEnumerationLimit) {
    check_order(n, limit);
    FreeTreeCursor c;
    c.seq_ = n == 1 ? detail::LevelSeq{0} : detail::initial_layout(n);
    return c;
  }

  static FreeTreeCursor over_block(const PrefixBlock& block) {
    FreeTreeCursor c;
    c.seq_ = block.start;
    c.prefix_len_ = std::min<std::size_t>(
        static_cast<std::size_t>(block.prefix_len), block.start.size());
    c.prefix_.assign(block.start.begin(),
                     block.start.begin() + static_cast<std::ptrdiff_t>(c.prefix_len_));
    return c;
  }

  /// Advances to the next tree; false when the (sub-)stream is exhausted.
  /// After a true return, levels() is the current canonical sequence.
  bool next() {
    if (done_) return false;
    if (seq_.size() == 1) {
      if (started_) {
        done_ = true;
        return false;
      }
      started_ = true;
      return true;
    }
    if (!started_) {
      started_ = true;  // the start candidate itself is examined first
    } else if (!detail::next_rooted(seq_)) {
      done_ = true;
      return false;
    }
    while (!detail::is_free_canonical(seq_)) detail::skip_noncanonical(seq_);
    if (prefix_len_ > 0 &&
        !std::equal(prefix_.begin(), prefix_.end(), seq_.begin())) {
      done_ = true;  // left the block; the stream never re-enters a prefix
      return false;
    }
    return true;
  }

  const detail::LevelSeq& levels() const { return seq_; }

  TreeCode code() const {
    return TreeCode(std::vector<int>(seq_.begin(), seq_.end()));
  }

 private:
  static void check_order(int n, int limit) {
    if (n < 1) throw std::invalid_argument("free tree order must be >= 1");
    if (n > limit || n > kMaxEnumerationOrder)
      throw std::invalid_argument("free tree order " + std::to_string(n) +
                                  " exceeds enumeration limit " +
                                  std::to_string(std::min(limit, kMaxEnumerationOrder)));
  }

  detail::LevelSeq seq_;
  detail::LevelSeq prefix_;
  std::size_t prefix_len_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// The stream of all unlabeled free trees on n vertices.
inline FreeTreeCursor free_trees(int n, int limit = kDefaultEnumerationLimit) {
  return FreeTreeCursor::over_all(n, limit);
}

}  // namespace hosoya
