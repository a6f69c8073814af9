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

// aub is a MAW of y iff au and ub occur and aub does not. Then u is followed
// by two distinct letters (b, and whatever follows au), so u labels an
// explicit node v. For each such v we know
//   - the letters a with au a factor, plus one occurrence of each (collected
//     from the leaves' left letters);
//   - the letters that can follow au: the children of the node reached by
//     the reverse suffix link (v, a) when au is explicit, otherwise the single
//     letter after the known occurrence of au.
// Only nodes with depth <= ell - 2 can contribute, so witness arrays are kept
// for at most ell - 1 nodes of the current root path.

#include "mawstream/maw_single.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <utility>

namespace mawstream {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::vector<MawOccurrence> enumerate_maws(const SuffixTree& tree, const Alphabet& alphabet,
                                          std::size_t ell) {
  std::vector<MawOccurrence> out;
  if (ell < 2) return out;
  const std::size_t max_u = ell - 2;
  const std::string& text = tree.text();
  const std::size_t sigma = alphabet.size();

  // Reverse suffix links, restricted to the nodes that can play the role of
  // au (depth <= ell - 1).
  std::vector<NodeId> wl_head(tree.node_count(), kNoNode);
  std::vector<NodeId> wl_next(tree.node_count(), kNoNode);
  for (NodeId w = 1; w < tree.node_count(); ++w) {
    if (tree.is_leaf(w) || tree.depth(w) > max_u + 1) continue;
    NodeId v = tree.suffix_link(w);
    wl_next[w] = wl_head[v];
    wl_head[v] = w;
  }

  auto shallow = [&](NodeId v) { return !tree.is_leaf(v) && tree.depth(v) <= max_u; };

  // witnesses[level][r]: a suffix start s with text[s-1] == letters[r], below
  // the shallow node at that level of the current path.
  std::vector<std::vector<std::uint32_t>> witnesses;
  std::size_t level = 0;

  std::array<bool, 256> follows{};
  std::vector<std::pair<char, NodeId>> children;

  auto process = [&](NodeId v, const std::vector<std::uint32_t>& wit) {
    const std::uint32_t u_len = tree.depth(v);
    // Labels containing a non-letter (a separator) produce nothing.
    if (u_len > 0) {
      const std::uint32_t occ = tree.occurrence(v);
      for (std::uint32_t k = 0; k < u_len; ++k) {
        if (!alphabet.contains(text[occ + k])) return;
      }
    }
    children.clear();
    for (NodeId c = tree.first_child(v); c != kNoNode; c = tree.next_sibling(c)) {
      char f = tree.first_letter(c);
      if (alphabet.contains(f)) children.emplace_back(f, c);
    }
    if (children.empty()) return;
    for (std::size_t r = 0; r < sigma; ++r) {
      const std::uint32_t s = wit[r];
      if (s == kNone) continue;
      const char a = alphabet.letters()[r];
      NodeId w = wl_head[v];
      while (w != kNoNode && text[tree.occurrence(w)] != a) w = wl_next[w];
      follows.fill(false);
      if (w != kNoNode) {
        for (NodeId c = tree.first_child(w); c != kNoNode; c = tree.next_sibling(c)) {
          follows[static_cast<unsigned char>(tree.first_letter(c))] = true;
        }
      } else {
        follows[static_cast<unsigned char>(text[s + u_len])] = true;
      }
      for (const auto& [b, c] : children) {
        if (!follows[static_cast<unsigned char>(b)]) {
          out.push_back(MawOccurrence{a, b, s, u_len, tree.occurrence(c)});
        }
      }
    }
  };

  tree.dfs(
      tree.root(),
      [&](NodeId v) {
        if (shallow(v)) {
          if (witnesses.size() <= level) witnesses.emplace_back();
          witnesses[level].assign(sigma, kNone);
          ++level;
        } else if (tree.is_leaf(v)) {
          const std::uint32_t s = tree.suffix_start(v);
          if (s > 0) {
            const int r = alphabet.rank(text[s - 1]);
            if (r >= 0 && witnesses[level - 1][r] == kNone) witnesses[level - 1][r] = s;
          }
        }
      },
      [&](NodeId v) {
        if (!shallow(v)) return;
        --level;
        process(v, witnesses[level]);
        if (level > 0) {
          auto& up = witnesses[level - 1];
          const auto& mine = witnesses[level];
          for (std::size_t r = 0; r < sigma; ++r) {
            if (up[r] == kNone) up[r] = mine[r];
          }
        }
      });
  return out;
}

std::string absent_letters(std::string_view data, const Alphabet& alphabet) {
  std::array<bool, 256> seen{};
  for (char c : data) seen[static_cast<unsigned char>(c)] = true;
  std::string out;
  for (char c : alphabet.letters()) {
    if (!seen[static_cast<unsigned char>(c)]) out.push_back(c);
  }
  return out;
}

SingleMawOutput compute_maws(const Block& block, const SuffixTree& tree, const Alphabet& alphabet,
                             std::size_t ell) {
  SingleMawOutput out;
  if (ell >= 1) out.absent_letters = absent_letters(block.data, alphabet);
  for (const auto& m : enumerate_maws(tree, alphabet, ell)) {
    out.tuples.push_back(MawTupleRef{block.id, m.u_start - 1, m.u_start - 1 + m.u_length, m.b});
  }
  std::sort(out.tuples.begin(), out.tuples.end(), [](const MawTupleRef& x, const MawTupleRef& y) {
    if (x.i1 != y.i1) return x.i1 < y.i1;
    if (x.i2 != y.i2) return x.i2 < y.i2;
    return static_cast<unsigned char>(x.alpha) < static_cast<unsigned char>(y.alpha);
  });
  return out;
}

SingleMawOutput compute_maws(const Block& block, const Alphabet& alphabet, std::size_t ell) {
  const SuffixTree tree = SuffixTree::build(block.data, alphabet.sentinel());
  return compute_maws(block, tree, alphabet, ell);
}

std::vector<std::string> materialize_all(const SingleMawOutput& out, const Block& block) {
  std::vector<std::string> words;
  words.reserve(out.size());
  for (char c : out.absent_letters) words.emplace_back(1, c);
  for (const auto& t : out.tuples) words.push_back(materialize(t, block));
  return words;
}

}  // namespace mawstream
