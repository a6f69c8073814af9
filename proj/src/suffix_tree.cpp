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

#include "mawstream/suffix_tree.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <unordered_map>

#include "mawstream/error.hpp"

namespace mawstream {

namespace {

constexpr std::uint32_t kOpen = std::numeric_limits<std::uint32_t>::max();
// Positions are 32-bit; keep one value free for kOpen arithmetic.
constexpr std::size_t kMaxText = std::numeric_limits<std::uint32_t>::max() - 2;

unsigned char u8(char c) { return static_cast<unsigned char>(c); }

}  // namespace

SuffixTree SuffixTree::build(std::string_view content, char sentinel) {
  if (content.empty()) throw Error(ErrorCode::kInvalidArgument, "cannot index an empty text");
  return build_generalized({content}, sentinel);
}

SuffixTree SuffixTree::build_generalized(const std::vector<std::string_view>& texts,
                                         char sentinel) {
  if (texts.empty()) throw Error(ErrorCode::kInvalidArgument, "no texts to index");
  std::size_t total = 0;
  for (auto t : texts) {
    if (t.empty()) throw Error(ErrorCode::kInvalidArgument, "cannot index an empty text");
    total += t.size() + 1;
  }
  if (total > kMaxText) {
    throw Error(ErrorCode::kTooManyTexts, "indexed text exceeds 32-bit positions");
  }
  SuffixTree tree;
  tree.sentinel_ = sentinel;
  tree.text_.reserve(total);
  tree.text_starts_.reserve(texts.size());
  tree.sentinel_pos_.reserve(texts.size());
  for (auto t : texts) {
    if (t.find(sentinel) != std::string_view::npos) {
      throw Error(ErrorCode::kSentinelCollision, "sentinel byte occurs inside a text");
    }
    tree.text_starts_.push_back(static_cast<std::uint32_t>(tree.text_.size()));
    tree.text_ += t;
    tree.sentinel_pos_.push_back(static_cast<std::uint32_t>(tree.text_.size()));
    tree.text_.push_back(sentinel);
  }

  const std::size_t words = (total + 63) / 64;
  tree.sentinel_bits_.assign(words, 0);
  for (auto p : tree.sentinel_pos_) tree.sentinel_bits_[p / 64] |= std::uint64_t{1} << (p % 64);
  tree.sentinel_rank_.resize(words + 1);
  std::uint32_t acc = 0;
  for (std::size_t w = 0; w < words; ++w) {
    tree.sentinel_rank_[w] = acc;
    acc += static_cast<std::uint32_t>(std::popcount(tree.sentinel_bits_[w]));
  }
  tree.sentinel_rank_[words] = acc;

  tree.construct();
  tree.finalize();
  return tree;
}

std::size_t SuffixTree::text_index(std::size_t pos) const {
  const std::size_t w = pos / 64;
  const std::uint64_t below = sentinel_bits_[w] & ((std::uint64_t{1} << (pos % 64)) - 1);
  return sentinel_rank_[w] + static_cast<std::size_t>(std::popcount(below));
}

NodeId SuffixTree::new_node(std::uint32_t start, std::uint32_t depth, NodeId parent) {
  NodeId id = static_cast<NodeId>(start_.size());
  start_.push_back(start);
  depth_.push_back(depth);
  parent_.push_back(parent);
  slink_.push_back(depth == kOpen ? kNoNode : 0);
  child_.push_back(kNoNode);
  sibling_.push_back(kNoNode);
  return id;
}

NodeId SuffixTree::child(NodeId v, char c) const {
  if (c == sentinel_) return kNoNode;
  for (NodeId ch = child_[v]; ch != kNoNode; ch = sibling_[ch]) {
    char f = text_[start_[ch]];
    if (f == sentinel_) break;  // terminator edges are kept after regular ones
    if (f == c) return ch;
    if (u8(f) > u8(c)) break;
  }
  return kNoNode;
}

void SuffixTree::add_child(NodeId p, NodeId c) {
  const char f = text_[start_[c]];
  NodeId prev = kNoNode;
  NodeId cur = child_[p];
  if (f == sentinel_) {
    while (cur != kNoNode && text_[start_[cur]] != sentinel_) {
      prev = cur;
      cur = sibling_[cur];
    }
  } else {
    while (cur != kNoNode && text_[start_[cur]] != sentinel_ && u8(text_[start_[cur]]) < u8(f)) {
      prev = cur;
      cur = sibling_[cur];
    }
  }
  sibling_[c] = cur;
  if (prev == kNoNode) {
    child_[p] = c;
  } else {
    sibling_[prev] = c;
  }
}

void SuffixTree::replace_child(NodeId p, NodeId old_child, NodeId new_child) {
  sibling_[new_child] = sibling_[old_child];
  sibling_[old_child] = kNoNode;
  if (child_[p] == old_child) {
    child_[p] = new_child;
    return;
  }
  NodeId cur = child_[p];
  while (sibling_[cur] != old_child) cur = sibling_[cur];
  sibling_[cur] = new_child;
}

std::uint32_t SuffixTree::build_edge_length(NodeId v, std::uint32_t end) const {
  if (depth_[v] == kOpen) return end - start_[v];
  return depth_[v] - depth_[parent_[v]];
}

void SuffixTree::construct() {
  const auto n = static_cast<std::uint32_t>(text_.size());
  start_.reserve(2 * static_cast<std::size_t>(n));
  depth_.reserve(2 * static_cast<std::size_t>(n));
  parent_.reserve(2 * static_cast<std::size_t>(n));
  slink_.reserve(2 * static_cast<std::size_t>(n));
  child_.reserve(2 * static_cast<std::size_t>(n));
  sibling_.reserve(2 * static_cast<std::size_t>(n));

  new_node(0, 0, 0);  // root is its own parent

  NodeId active_node = 0;
  std::uint32_t active_edge = 0;
  std::uint32_t active_length = 0;
  std::uint32_t remainder = 0;

  for (std::uint32_t i = 0; i < n; ++i) {
    const char c = text_[i];
    const bool is_sentinel = c == sentinel_;
    NodeId pending = kNoNode;  // internal node still waiting for its suffix link
    ++remainder;
    while (remainder > 0) {
      if (active_length == 0) active_edge = i;
      NodeId next = child(active_node, text_[active_edge]);
      if (next == kNoNode) {
        NodeId leaf = new_node(i, kOpen, active_node);
        add_child(active_node, leaf);
        if (pending != kNoNode) {
          slink_[pending] = active_node;
          pending = kNoNode;
        }
      } else {
        const std::uint32_t len = build_edge_length(next, i + 1);
        if (active_length >= len) {
          active_edge += len;
          active_length -= len;
          active_node = next;
          continue;
        }
        if (!is_sentinel && text_[start_[next] + active_length] == c) {
          if (pending != kNoNode) slink_[pending] = active_node;
          ++active_length;
          break;
        }
        NodeId split = new_node(start_[next], depth_[active_node] + active_length, active_node);
        replace_child(active_node, next, split);
        start_[next] += active_length;
        parent_[next] = split;
        add_child(split, next);
        NodeId leaf = new_node(i, kOpen, split);
        add_child(split, leaf);
        if (pending != kNoNode) slink_[pending] = split;
        pending = split;
      }
      --remainder;
      if (active_node == 0 && active_length > 0) {
        --active_length;
        active_edge = i - remainder + 1;
      } else if (active_node != 0) {
        active_node = slink_[active_node];
      }
    }
  }
}

void SuffixTree::finalize() {
  leaf_count_ = 0;
  for (NodeId v = 1; v < start_.size(); ++v) {
    if (depth_[v] != kOpen) continue;
    const std::uint32_t end = sentinel_pos_[text_index(start_[v])] + 1;
    depth_[v] = depth_[parent_[v]] + (end - start_[v]);
    ++leaf_count_;
  }
}

std::optional<Locus> SuffixTree::spell(const Locus& from, char c) const {
  if (c == sentinel_) return std::nullopt;
  if (from.depth == depth_[from.node]) {
    NodeId ch = child(from.node, c);
    if (ch == kNoNode) return std::nullopt;
    return Locus{ch, from.depth + 1};
  }
  if (next_letter(from) != c) return std::nullopt;
  return Locus{from.node, from.depth + 1};
}

std::optional<Locus> SuffixTree::locate(std::string_view word) const {
  Locus at{0, 0};
  std::size_t i = 0;
  while (i < word.size()) {
    if (at.depth == depth_[at.node]) {
      NodeId ch = child(at.node, word[i]);
      if (ch == kNoNode) return std::nullopt;
      at = Locus{ch, at.depth + 1};
      ++i;
      continue;
    }
    // Compare the rest of the current edge in one go.
    const std::uint32_t edge_left = depth_[at.node] - at.depth;
    const std::size_t take = std::min<std::size_t>(edge_left, word.size() - i);
    const std::size_t from = start_[at.node] + (at.depth - depth_[parent_[at.node]]);
    if (text_.compare(from, take, word, i, take) != 0) return std::nullopt;
    at.depth += static_cast<std::uint32_t>(take);
    i += take;
  }
  return at;
}

std::string SuffixTree::label(const Locus& l) const {
  if (l.depth == 0) return {};
  return text_.substr(occurrence(l.node), l.depth);
}

std::vector<std::uint32_t> SuffixTree::leaves_below(NodeId v) const {
  std::vector<std::uint32_t> out;
  preorder(v, [&](NodeId u) {
    if (is_leaf(u)) out.push_back(suffix_start(u));
    return true;
  });
  return out;
}

std::string SuffixTree::to_dot() const {
  std::string out = "digraph suffix_tree {\n  node [shape=circle,label=\"\"];\n";
  auto escape = [&](std::string_view s) {
    std::string e;
    for (char c : s) {
      if (c == sentinel_) {
        e += "$";
      } else if (c == '"' || c == '\\') {
        e += '\\';
        e += c;
      } else if (u8(c) < 32 || u8(c) > 126) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "\\\\x%02x", u8(c));
        e += buf;
      } else {
        e += c;
      }
    }
    return e;
  };
  for (NodeId v = 0; v < start_.size(); ++v) {
    if (is_leaf(v)) {
      out += "  n" + std::to_string(v) + " [shape=box,label=\"" +
             std::to_string(suffix_start(v)) + "\"];\n";
    }
    if (v != 0) {
      out += "  n" + std::to_string(parent_[v]) + " -> n" + std::to_string(v) + " [label=\"" +
             escape(std::string_view(text_).substr(start_[v], edge_length(v))) + "\"];\n";
    }
    if (v != 0 && !is_leaf(v) && slink_[v] != kNoNode) {
      out += "  n" + std::to_string(v) + " -> n" + std::to_string(slink_[v]) +
             " [style=dotted,arrowsize=0.5];\n";
    }
  }
  out += "}\n";
  return out;
}

NodeAggregates compute_aggregates(const SuffixTree& tree) {
  NodeAggregates agg;
  agg.min_start.assign(tree.node_count(), std::numeric_limits<std::uint32_t>::max());
  agg.max_start.assign(tree.node_count(), 0);
  // Split nodes get ids after their children, so id order is not a
  // topological order; fold in post-order instead.
  tree.dfs(
      tree.root(), [](NodeId) {},
      [&](NodeId v) {
        if (tree.is_leaf(v)) {
          agg.min_start[v] = agg.max_start[v] = tree.suffix_start(v);
        }
        if (v != tree.root()) {
          NodeId p = tree.parent(v);
          agg.min_start[p] = std::min(agg.min_start[p], agg.min_start[v]);
          agg.max_start[p] = std::max(agg.max_start[p], agg.max_start[v]);
        }
      });
  return agg;
}

std::vector<std::vector<std::uint32_t>> locate_prefix_free_patterns(
    const SuffixTree& tree, const std::vector<std::string_view>& patterns, PrefixFreeCheck check) {
  if (check == PrefixFreeCheck::kVerify && patterns.size() > 1) {
    std::vector<std::string_view> sorted(patterns);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      const auto& a = sorted[i - 1];
      const auto& b = sorted[i];
      if (a != b && b.substr(0, a.size()) == a) {
        throw Error(ErrorCode::kPatternsNotPrefixFree,
                    "'" + std::string(a) + "' is a prefix of '" + std::string(b) + "'");
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> out(patterns.size());
  // Identical patterns share a node; collect that subtree once.
  std::unordered_map<NodeId, std::size_t> first_for_node;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    auto locus = tree.locate(patterns[i]);
    if (!locus) continue;
    auto [it, inserted] = first_for_node.emplace(locus->node, i);
    if (inserted) {
      out[i] = tree.leaves_below(locus->node);
    } else {
      out[i] = out[it->second];
    }
  }
  return out;
}

}  // namespace mawstream
