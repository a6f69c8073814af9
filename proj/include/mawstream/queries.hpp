// Copyright 2026 The mawstream Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAWSTREAM_QUERIES_HPP_
#define MAWSTREAM_QUERIES_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mawstream/suffix_tree.hpp"

namespace mawstream {

// Walks a suffix tree one letter at a time, with a suffix-link step to drop
// the leading letter. With a node mask the walk stays inside the subtrees
// whose mask bit is set (used to match against a subset of the indexed texts;
// the mask must be closed under ancestors and under suffix links).
class MatchCursor {
 public:
  explicit MatchCursor(const SuffixTree& tree, const std::vector<bool>* mask = nullptr)
      : tree_(tree), mask_(mask) {}
  MatchCursor(const SuffixTree& tree, Locus at, const std::vector<bool>* mask = nullptr)
      : tree_(tree), mask_(mask), at_(at) {}

  const Locus& locus() const { return at_; }
  std::uint32_t depth() const { return at_.depth; }

  // Moves to L . c if that is a factor (of the masked texts); false otherwise.
  bool extend(char c);
  // Moves from the locus of aw to the locus of w. No-op at the root.
  void drop_first();

 private:
  const SuffixTree& tree_;
  const std::vector<bool>* mask_;
  Locus at_{0, 0};
};

struct MatchingStatistics {
  // length[i]: longest prefix of x[i..] that is a factor of the indexed text.
  std::vector<std::uint32_t> length;
  // position[i]: an occurrence of that prefix in the indexed text.
  std::vector<std::uint32_t> position;
  // locus[i]: where the match from i ends in the tree.
  std::vector<Locus> locus;
};

MatchingStatistics matching_statistics(std::string_view x, const SuffixTree& tree,
                                       const std::vector<bool>* mask = nullptr);

struct WeightedAncestorQuery {
  NodeId node = 0;
  std::uint32_t weight = 0;
};

// Answers every query with the locus at depth `weight` on the root path of
// `node`, i.e. {highest ancestor u with depth(u) >= weight, weight}. One DFS
// over the tree with the root path kept on a stack; per query a binary
// search over at most weight+1 stack entries.
std::vector<Locus> batch_weighted_ancestors(const SuffixTree& tree,
                                            std::span<const WeightedAncestorQuery> queries);

// Reference implementation: climbs parent pointers.
Locus weighted_ancestor_naive(const SuffixTree& tree, const WeightedAncestorQuery& query);

// leaf_of[p - from] for every suffix start p in [from, to).
std::vector<NodeId> leaves_by_suffix(const SuffixTree& tree, std::uint32_t from, std::uint32_t to);

// Locus of text[i..j] (inclusive).
Locus locate_factor_locus(const SuffixTree& tree, std::uint32_t i, std::uint32_t j);

}  // namespace mawstream

#endif  // MAWSTREAM_QUERIES_HPP_
