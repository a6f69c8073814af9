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

// One incremental step: from M(P) for P = y_1 # ... # y_{N-1} and a new
// block Y = y_N, compute M(P # Y), all sets cut at length ell.
//
// Case 1 keeps the elements of M(P) u M(Y) that are superwords of an element
// of the other set. The rest form the reduced sets R(P) and R(Y). Case 2
// words come from M(y_i # y_N) for each earlier block y_i: aub is kept when
// au starts with a word of one reduced set and ub ends with a word of the
// other, both no longer than |u| + 1.

#ifndef MAWSTREAM_MERGE_HPP_
#define MAWSTREAM_MERGE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mawstream/maw_single.hpp"
#include "mawstream/space_meter.hpp"
#include "mawstream/suffix_tree.hpp"
#include "mawstream/text_model.hpp"

namespace mawstream {

// Read access to the blocks of a corpus by 1-based id. Reads may be
// repeated.
class BlockStore {
 public:
  virtual ~BlockStore() = default;
  virtual std::size_t size() const = 0;
  virtual Block read(std::uint32_t id) const = 0;
  // Length of block `id` without reading its data.
  virtual std::size_t length(std::uint32_t id) const = 0;
};

// Aho-Corasick automaton over an antifactorial word set. Since no word is a
// factor of another, at most one word ends at any position of a scanned
// text, which is what word_ending() reports.
class WordAutomaton {
 public:
  using State = std::uint32_t;
  static constexpr std::uint32_t kNoWord = 0xffffffffu;

  WordAutomaton(const std::vector<std::string_view>& words, const Alphabet& alphabet);

  State start() const { return 0; }
  // Letters outside the alphabet reset to the start state.
  State next(State q, char c) const {
    const int r = alphabet_.rank(c);
    return r < 0 ? 0 : delta_[std::size_t{q} * sigma_ + static_cast<std::size_t>(r)];
  }
  // Index of the word that is a suffix of the text read so far, or kNoWord.
  std::uint32_t word_ending(State q) const { return out_[q]; }
  std::size_t word_length(std::uint32_t w) const { return lengths_[w]; }
  std::size_t state_count() const { return out_.size(); }

 private:
  const Alphabet& alphabet_;
  std::size_t sigma_;
  std::vector<State> delta_;
  std::vector<std::uint32_t> out_;
  std::vector<std::uint32_t> lengths_;
};

// For every position e of the new block: the previous-set word ending there,
// and the automaton state after reading y_N[0..e].
struct PrevScan {
  std::vector<std::uint32_t> word_at_end;
  std::vector<WordAutomaton::State> state;
};

PrevScan scan_block(const WordAutomaton& automaton, std::string_view block);

// marks[j]: prev[j] is a superword of some element of M(Y). For words of
// length <= ell this holds exactly when prev[j] is not a factor of y_N, which
// is what is tested on the tree of y_N.
std::vector<bool> mark_prev_superwords(const MawSet& prev, const SuffixTree& new_tree);
std::vector<bool> mark_prev_superwords(const MawSet& prev, const Block& new_block,
                                       const Alphabet& alphabet);

// marks[t]: tuple t (materialized against the new block) contains an element
// of prev as a factor. Tuples may come in any order.
std::vector<bool> mark_new_superwords(const MawSet& prev, const Block& new_block,
                                      const std::vector<MawTupleRef>& tuples,
                                      const Alphabet& alphabet);
// Same, reusing a scan of the new block against the automaton of prev.
std::vector<bool> mark_new_superwords(const WordAutomaton& automaton, const PrevScan& scan,
                                      const std::vector<MawTupleRef>& tuples);

struct ReducedSets {
  std::vector<MawEntry> prev;        // R(P), explicit
  std::vector<MawTupleRef> tuples;   // R(Y), words of length >= 2
  std::string letters;               // R(Y), single letters
};

struct Case1Result {
  MawSet kept;
  ReducedSets reduced;
};

Case1Result build_case1(const MawSet& prev, const SingleMawOutput& fresh, const Block& new_block,
                        const std::vector<bool>& prev_marks, const std::vector<bool>& new_marks);

// M(x) for x = y_i # y_N, words of length 2..ell over the alphabet.
std::vector<MawOccurrence> compute_pair_maws(const SuffixTree& x_tree, const Alphabet& alphabet,
                                             std::size_t ell);
std::vector<MawOccurrence> compute_pair_maws(std::string_view x, const Alphabet& alphabet,
                                             std::size_t ell);

// Lengths of reduced-set words starting or ending at each position of one
// side of x (0 when none; at most one word per position since the sets are
// prefix-free and suffix-free).
struct SideOccurrences {
  std::vector<std::uint32_t> start_len;
  std::vector<std::uint32_t> end_len;
};

// One side from a list of (start, length) occurrences.
SideOccurrences side_occurrences(std::size_t side_length,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& occ);

// Keeps the pair MAWs of x = y_i # y_N that are Case-2 MAWs of the whole
// concatenation. `in_yi` holds occurrences of R(Y) words in y_i, `in_yn`
// occurrences of R(P) words in y_N. The loci of au and ub are found with one
// batch of weighted ancestor queries and the side(s) they occur on is read
// from the min/max start aggregates.
std::vector<MawOccurrence> classify_and_filter_case2(const SuffixTree& x_tree,
                                                     std::size_t yi_length,
                                                     const std::vector<MawOccurrence>& pair_maws,
                                                     const SideOccurrences& in_yi,
                                                     const SideOccurrences& in_yn,
                                                     const NodeAggregates& aggregates);

// Optional record of the intermediate sets of one merge step.
struct MergeTrace {
  MawSet kept;
  MawSet reduced_prev;
  MawSet reduced_new;
  MawSet case2;
};

struct MergeInputs {
  const Block& new_block;
  // Blocks 1..new_block.id - 1.
  const BlockStore& earlier;
  const Alphabet& alphabet;
  std::size_t ell;
  // Letters occurring in y_1..y_{N-1}; cross-checked against the single
  // letters of prev when given.
  const std::string* seen_letters = nullptr;
};

// `prev` is taken by value so it can be released once Case 1 is done.
MawSet merge_step(MawSet prev, const MergeInputs& in, MergeTrace* trace = nullptr,
                  SpaceMeter* meter = nullptr);

}  // namespace mawstream

#endif  // MAWSTREAM_MERGE_HPP_
