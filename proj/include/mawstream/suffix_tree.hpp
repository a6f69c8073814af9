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

// Compact suffix tree with suffix links, built online left to right.
//
// A tree indexes one text, or several texts each terminated by the same
// sentinel byte. Sentinel occurrences never compare equal to anything,
// including each other, so every text is closed off by its own terminator
// without needing one distinct byte per text. Leaf edges are cut right after
// the sentinel that ends their text.
//
// Nodes live in parallel arrays indexed by NodeId. For a node v,
// text()[edge_start(v) - depth(parent(v)) ..] spells L(v); that gives every
// node an occurrence position for free.

#ifndef MAWSTREAM_SUFFIX_TREE_HPP_
#define MAWSTREAM_SUFFIX_TREE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mawstream {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// An explicit or implicit node: `node` is the explicit node at or below the
// point, `depth` the number of letters spelled (depth(parent) < depth <=
// depth(node); the root is {root, 0}).
struct Locus {
  NodeId node = 0;
  std::uint32_t depth = 0;
  friend bool operator==(const Locus&, const Locus&) = default;
};

class SuffixTree {
 public:
  // Indexes `content` + sentinel.
  static SuffixTree build(std::string_view content, char sentinel = '$');
  // Indexes t_0 + sentinel + t_1 + sentinel + ... (each text non-empty).
  static SuffixTree build_generalized(const std::vector<std::string_view>& texts,
                                      char sentinel = '$');

  NodeId root() const { return 0; }
  std::size_t node_count() const { return start_.size(); }
  std::size_t leaf_count() const { return leaf_count_; }

  const std::string& text() const { return text_; }
  char sentinel() const { return sentinel_; }
  bool is_sentinel_at(std::size_t pos) const { return text_[pos] == sentinel_; }

  std::size_t text_count() const { return text_starts_.size(); }
  // Offset of text t inside text().
  std::uint32_t text_start(std::size_t t) const { return text_starts_[t]; }
  std::uint32_t text_length(std::size_t t) const {
    return sentinel_pos_[t] - text_starts_[t];
  }
  // Index of the text containing position pos (sentinel included).
  std::size_t text_index(std::size_t pos) const;

  std::uint32_t depth(NodeId v) const { return depth_[v]; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  NodeId suffix_link(NodeId v) const { return slink_[v]; }
  NodeId first_child(NodeId v) const { return child_[v]; }
  NodeId next_sibling(NodeId v) const { return sibling_[v]; }
  bool is_leaf(NodeId v) const { return v != 0 && child_[v] == kNoNode; }

  std::uint32_t edge_start(NodeId v) const { return start_[v]; }
  std::uint32_t edge_length(NodeId v) const { return v == 0 ? 0 : depth_[v] - depth_[parent_[v]]; }
  char first_letter(NodeId v) const { return text_[start_[v]]; }
  // True for leaf edges that consist of the sentinel only.
  bool is_terminator_edge(NodeId v) const { return text_[start_[v]] == sentinel_; }

  // Some position where L(v) occurs; for a leaf this is its suffix start.
  std::uint32_t occurrence(NodeId v) const { return start_[v] - depth_[parent_[v]]; }
  std::uint32_t suffix_start(NodeId leaf) const { return occurrence(leaf); }

  // Child whose edge starts with `c`, kNoNode if none. Never matches the
  // sentinel.
  NodeId child(NodeId v, char c) const;

  // Letter following the locus, or the sentinel at the end of a leaf edge.
  // Requires locus.depth < depth(locus.node).
  char next_letter(const Locus& locus) const {
    return text_[start_[locus.node] + (locus.depth - depth_[parent_[locus.node]])];
  }

  bool is_explicit(const Locus& l) const { return l.depth == depth_[l.node]; }

  // Locus of L(from) . c, if that word is a factor.
  std::optional<Locus> spell(const Locus& from, char c) const;
  // Locus of `word`, if it is a factor.
  std::optional<Locus> locate(std::string_view word) const;
  // Path label of a locus.
  std::string label(const Locus& l) const;

  // Pre-order walk; `enter(v)` returning false skips v's subtree.
  template <typename Enter>
  void preorder(NodeId from, Enter&& enter) const;

  // Walk with enter/exit callbacks (exit after all children).
  template <typename Enter, typename Exit>
  void dfs(NodeId from, Enter&& enter, Exit&& exit) const;

  // Leaves (suffix starts) below v.
  std::vector<std::uint32_t> leaves_below(NodeId v) const;

  // Graphviz rendering; only sensible for small trees.
  std::string to_dot() const;

 private:
  SuffixTree() = default;
  void construct();
  void finalize();

  NodeId new_node(std::uint32_t start, std::uint32_t depth, NodeId parent);
  void add_child(NodeId parent, NodeId c);
  void replace_child(NodeId parent, NodeId old_child, NodeId new_child);
  std::uint32_t build_edge_length(NodeId v, std::uint32_t end) const;

  std::string text_;
  char sentinel_ = '$';
  std::vector<std::uint32_t> text_starts_;
  std::vector<std::uint32_t> sentinel_pos_;
  // Sentinel positions as a bit vector with per-word prefix counts, so
  // text_index() is O(1) even with millions of texts.
  std::vector<std::uint64_t> sentinel_bits_;
  std::vector<std::uint32_t> sentinel_rank_;
  std::size_t leaf_count_ = 0;

  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> depth_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> slink_;
  std::vector<NodeId> child_;
  std::vector<NodeId> sibling_;
};

// Smallest and largest starting position of L(v), for every node v.
struct NodeAggregates {
  std::vector<std::uint32_t> min_start;
  std::vector<std::uint32_t> max_start;
};

NodeAggregates compute_aggregates(const SuffixTree& tree);

enum class PrefixFreeCheck { kTrust, kVerify };

// Starting positions of every occurrence of each pattern. Patterns must be
// pairwise prefix-free (duplicates are allowed), which keeps the visited
// subtrees disjoint. kVerify raises PatternsNotPrefixFree otherwise.
std::vector<std::vector<std::uint32_t>> locate_prefix_free_patterns(
    const SuffixTree& tree, const std::vector<std::string_view>& patterns,
    PrefixFreeCheck check = PrefixFreeCheck::kTrust);

// ---------------------------------------------------------------------------

template <typename Enter>
void SuffixTree::preorder(NodeId from, Enter&& enter) const {
  std::vector<NodeId> stack{from};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (!enter(v)) continue;
    for (NodeId c = child_[v]; c != kNoNode; c = sibling_[c]) stack.push_back(c);
  }
}

template <typename Enter, typename Exit>
void SuffixTree::dfs(NodeId from, Enter&& enter, Exit&& exit) const {
  // Each frame holds the next child still to visit.
  std::vector<std::pair<NodeId, NodeId>> stack;
  enter(from);
  stack.emplace_back(from, child_[from]);
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.second == kNoNode) {
      NodeId done = top.first;
      stack.pop_back();
      exit(done);
      continue;
    }
    NodeId c = top.second;
    top.second = sibling_[c];
    enter(c);
    stack.emplace_back(c, child_[c]);
  }
}

}  // namespace mawstream

#endif  // MAWSTREAM_SUFFIX_TREE_HPP_
