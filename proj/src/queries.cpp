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

#include "mawstream/queries.hpp"

#include <algorithm>
#include <string>

#include "mawstream/error.hpp"

namespace mawstream {

bool MatchCursor::extend(char c) {
  if (c == tree_.sentinel()) return false;
  if (at_.depth == tree_.depth(at_.node)) {
    NodeId ch = tree_.child(at_.node, c);
    if (ch == kNoNode || (mask_ != nullptr && !(*mask_)[ch])) return false;
    at_ = Locus{ch, at_.depth + 1};
    return true;
  }
  if (tree_.next_letter(at_) != c) return false;
  ++at_.depth;
  return true;
}

void MatchCursor::drop_first() {
  if (at_.depth == 0) return;
  const NodeId v = at_.node;
  if (at_.depth == tree_.depth(v) && !tree_.is_leaf(v)) {
    at_ = Locus{tree_.suffix_link(v), at_.depth - 1};
    return;
  }
  // Re-spell the part of the edge into v below the nearest explicit ancestor,
  // starting from that ancestor's suffix link (skip/count: one child lookup
  // per edge).
  const NodeId p = tree_.parent(v);
  std::uint32_t rest = at_.depth - tree_.depth(p);
  std::uint32_t pos = tree_.edge_start(v);
  NodeId cur;
  std::uint32_t depth;
  if (p == tree_.root()) {
    cur = tree_.root();
    depth = 0;
    ++pos;
    --rest;
  } else {
    cur = tree_.suffix_link(p);
    depth = tree_.depth(p) - 1;
  }
  const std::string& text = tree_.text();
  while (rest > 0) {
    NodeId ch = tree_.child(cur, text[pos]);
    const std::uint32_t len = tree_.edge_length(ch);
    if (rest < len) {
      at_ = Locus{ch, depth + rest};
      return;
    }
    cur = ch;
    depth += len;
    pos += len;
    rest -= len;
  }
  at_ = Locus{cur, depth};
}

MatchingStatistics matching_statistics(std::string_view x, const SuffixTree& tree,
                                       const std::vector<bool>* mask) {
  MatchingStatistics ms;
  ms.length.resize(x.size());
  ms.position.resize(x.size());
  ms.locus.resize(x.size());
  MatchCursor cursor(tree, mask);
  for (std::size_t i = 0; i < x.size(); ++i) {
    while (i + cursor.depth() < x.size() && cursor.extend(x[i + cursor.depth()])) {
    }
    ms.length[i] = cursor.depth();
    ms.locus[i] = cursor.locus();
    ms.position[i] = cursor.depth() == 0 ? 0 : tree.occurrence(cursor.locus().node);
    cursor.drop_first();
  }
  return ms;
}

std::vector<Locus> batch_weighted_ancestors(const SuffixTree& tree,
                                            std::span<const WeightedAncestorQuery> queries) {
  std::vector<Locus> answers(queries.size());
  if (queries.empty()) return answers;

  std::vector<std::pair<NodeId, std::uint32_t>> order;
  order.reserve(queries.size());
  for (std::uint32_t q = 0; q < queries.size(); ++q) {
    const auto& query = queries[q];
    if (query.node >= tree.node_count() || query.weight > tree.depth(query.node)) {
      throw Error(ErrorCode::kWeightOutOfRange,
                  "weight " + std::to_string(query.weight) + " exceeds node depth");
    }
    order.emplace_back(query.node, q);
  }
  std::sort(order.begin(), order.end());
  std::vector<bool> queried(tree.node_count(), false);
  for (const auto& [node, q] : order) queried[node] = true;

  // Root path as parallel node/depth stacks; depths strictly increase.
  std::vector<NodeId> path_nodes;
  std::vector<std::uint32_t> path_depths;
  tree.dfs(
      tree.root(),
      [&](NodeId v) {
        path_nodes.push_back(v);
        path_depths.push_back(tree.depth(v));
        if (!queried[v]) return;
        auto it = std::lower_bound(order.begin(), order.end(), std::make_pair(v, std::uint32_t{0}));
        for (; it != order.end() && it->first == v; ++it) {
          const std::uint32_t w = queries[it->second].weight;
          // Depths start at 0 and strictly increase, so entry w has depth >= w.
          const std::size_t limit = std::min<std::size_t>(path_depths.size(), std::size_t{w} + 1);
          auto first = path_depths.begin();
          auto at = std::lower_bound(first, first + static_cast<std::ptrdiff_t>(limit), w);
          answers[it->second] = Locus{path_nodes[static_cast<std::size_t>(at - first)], w};
        }
      },
      [&](NodeId) {
        path_nodes.pop_back();
        path_depths.pop_back();
      });
  return answers;
}

Locus weighted_ancestor_naive(const SuffixTree& tree, const WeightedAncestorQuery& query) {
  if (query.weight > tree.depth(query.node)) {
    throw Error(ErrorCode::kWeightOutOfRange, "weight exceeds node depth");
  }
  NodeId u = query.node;
  while (u != tree.root() && tree.depth(tree.parent(u)) >= query.weight) u = tree.parent(u);
  return Locus{u, query.weight};
}

std::vector<NodeId> leaves_by_suffix(const SuffixTree& tree, std::uint32_t from, std::uint32_t to) {
  std::vector<NodeId> out(to > from ? to - from : 0, kNoNode);
  if (out.empty()) return out;
  tree.preorder(tree.root(), [&](NodeId v) {
    if (tree.is_leaf(v)) {
      const std::uint32_t s = tree.suffix_start(v);
      if (s >= from && s < to) out[s - from] = v;
    }
    return true;
  });
  return out;
}

Locus locate_factor_locus(const SuffixTree& tree, std::uint32_t i, std::uint32_t j) {
  if (i > j || j >= tree.text().size() || tree.text_index(i) != tree.text_index(j)) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "factor [" + std::to_string(i) + ".." + std::to_string(j) + "] out of range");
  }
  const NodeId leaf = leaves_by_suffix(tree, i, i + 1)[0];
  return weighted_ancestor_naive(tree, WeightedAncestorQuery{leaf, j - i + 1});
}

}  // namespace mawstream
