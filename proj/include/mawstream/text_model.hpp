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

// Input model: alphabets, blocks, corpora, and the two representations of a
// minimal absent word (explicit letters, or a <block, i1, i2, alpha> tuple
// pointing into the block that contains its longest proper prefix).

#ifndef MAWSTREAM_TEXT_MODEL_HPP_
#define MAWSTREAM_TEXT_MODEL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mawstream {

class Alphabet {
 public:
  // `letters` may be given in any order but must be distinct; they are stored
  // sorted by byte value, which is the alphabet order used everywhere.
  Alphabet(std::string_view letters, char separator);

  // A,C,G,T with separator 0x00.
  static Alphabet dna();
  // 0,1 with separator '#'.
  static Alphabet binary();

  const std::string& letters() const { return letters_; }
  char separator() const { return separator_; }
  std::size_t size() const { return letters_.size(); }

  bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }
  // Position of `c` in the sorted letter list, or -1.
  int rank(char c) const { return rank_[static_cast<unsigned char>(c)]; }

  // A byte that is neither a letter nor the separator; '$' when available.
  char sentinel() const { return sentinel_; }

 private:
  std::string letters_;
  char separator_;
  char sentinel_;
  std::array<int, 256> rank_{};
};

struct Block {
  std::uint32_t id = 0;  // 1-based ordinal within its corpus
  std::string data;
};

struct Corpus {
  Alphabet alphabet;
  std::vector<Block> blocks;
};

// Denotes block[i1..i2] . alpha (i2 inclusive).
struct MawTupleRef {
  std::uint32_t block_id = 0;
  std::uint32_t i1 = 0;
  std::uint32_t i2 = 0;
  char alpha = 0;

  std::size_t length() const { return static_cast<std::size_t>(i2 - i1) + 2; }
  friend bool operator==(const MawTupleRef&, const MawTupleRef&) = default;
};

// (length, then byte-lexicographic) ordering.
bool canonical_less(std::string_view a, std::string_view b);

// One element of a MawSet. `origin` optionally records where the word's
// longest proper prefix occurs; origin.block_id == 0 means "not recorded"
// (always the case for single letters).
struct MawEntry {
  std::string word;
  MawTupleRef origin;
};

// A deduplicated set of words kept in canonical order.
class MawSet {
 public:
  MawSet() = default;
  explicit MawSet(std::vector<MawEntry> entries);
  static MawSet from_words(std::vector<std::string> words);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Sum of word lengths.
  std::size_t total_length() const { return total_length_; }

  const std::vector<MawEntry>& entries() const { return entries_; }
  const std::string& operator[](std::size_t i) const { return entries_[i].word; }
  std::vector<std::string> words() const;

  bool contains(std::string_view word) const;

  friend bool operator==(const MawSet& a, const MawSet& b);

 private:
  std::vector<MawEntry> entries_;
  std::size_t total_length_ = 0;
};

// Raw input: whitespace is dropped, every other byte must be a letter.
Block ingest_raw(std::string_view bytes, const Alphabet& alphabet);

struct FastaOptions {
  // When set, bytes outside the alphabet (typically runs of 'N') end the
  // current block instead of raising ByteOutsideAlphabet.
  bool split_on_unknown = false;
};

// One block per record (or per maximal alphabet run with split_on_unknown).
// Sequence letters are upper-cased before validation.
Corpus ingest_fasta(std::string_view bytes, const Alphabet& alphabet,
                    const FastaOptions& options = {});

// k contiguous blocks whose lengths differ by at most one; the first
// |data| mod k blocks are the longer ones.
std::vector<Block> split_into_blocks(const Block& block, std::size_t k);

std::string materialize(const MawTupleRef& ref, const Block& block);
std::string materialize(const MawTupleRef& ref, std::string_view data);

std::vector<std::string> canonical_order(std::vector<std::string> words);
std::vector<std::string> canonical_order(const MawSet& set);

// Joins blocks with the alphabet separator.
std::string concatenate(const std::vector<Block>& blocks, char separator);

}  // namespace mawstream

#endif  // MAWSTREAM_TEXT_MODEL_HPP_
