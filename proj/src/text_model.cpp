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

#include "mawstream/text_model.hpp"

#include <algorithm>
#include <cctype>

#include "mawstream/error.hpp"

namespace mawstream {

Alphabet::Alphabet(std::string_view letters, char separator)
    : letters_(letters), separator_(separator), sentinel_(0) {
  if (letters_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet must contain at least one letter");
  }
  std::sort(letters_.begin(), letters_.end(), [](char a, char b) {
    return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
  });
  if (std::adjacent_find(letters_.begin(), letters_.end()) != letters_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet letters must be distinct");
  }
  rank_.fill(-1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    rank_[static_cast<unsigned char>(letters_[i])] = static_cast<int>(i);
  }
  if (contains(separator_)) {
    throw Error(ErrorCode::kInvalidArgument, "separator must not be an alphabet letter");
  }
  auto is_free = [&](int c) {
    return rank_[c] < 0 && c != static_cast<unsigned char>(separator_);
  };
  if (is_free('$')) {
    sentinel_ = '$';
  } else {
    int c = 255;
    while (c >= 0 && !is_free(c)) --c;
    if (c < 0) {
      throw Error(ErrorCode::kInvalidArgument, "no byte left for the sentinel");
    }
    sentinel_ = static_cast<char>(c);
  }
}

Alphabet Alphabet::dna() { return Alphabet("ACGT", '\0'); }

Alphabet Alphabet::binary() { return Alphabet("01", '#'); }

bool canonical_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // string_view compares as unsigned bytes via char_traits<char>::compare.
  return a < b;
}

MawSet::MawSet(std::vector<MawEntry> entries) : entries_(std::move(entries)) {
  std::stable_sort(entries_.begin(), entries_.end(), [](const MawEntry& x, const MawEntry& y) {
    return canonical_less(x.word, y.word);
  });
  entries_.erase(std::unique(entries_.begin(), entries_.end(),
                             [](const MawEntry& x, const MawEntry& y) { return x.word == y.word; }),
                 entries_.end());
  for (const auto& e : entries_) total_length_ += e.word.size();
}

MawSet MawSet::from_words(std::vector<std::string> words) {
  std::vector<MawEntry> entries;
  entries.reserve(words.size());
  for (auto& w : words) entries.push_back(MawEntry{std::move(w), {}});
  return MawSet(std::move(entries));
}

std::vector<std::string> MawSet::words() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.word);
  return out;
}

bool MawSet::contains(std::string_view word) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), word,
                             [](const MawEntry& e, std::string_view w) {
                               return canonical_less(e.word, w);
                             });
  return it != entries_.end() && it->word == word;
}

bool operator==(const MawSet& a, const MawSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\v' || c == '\f';
}

}  // namespace

Block ingest_raw(std::string_view bytes, const Alphabet& alphabet) {
  Block block;
  block.id = 1;
  block.data.reserve(bytes.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    char c = bytes[i];
    if (is_space(c)) continue;
    if (!alphabet.contains(c)) throw ByteOutsideAlphabet(i, static_cast<unsigned char>(c));
    block.data.push_back(c);
  }
  if (block.data.empty()) throw Error(ErrorCode::kEmptyInput, "no letters in input");
  return block;
}

Corpus ingest_fasta(std::string_view bytes, const Alphabet& alphabet, const FastaOptions& options) {
  Corpus corpus{alphabet, {}};
  std::string current;
  std::string header;
  bool in_record = false;

  auto close_piece = [&] {
    if (!current.empty()) {
      Block b;
      b.id = static_cast<std::uint32_t>(corpus.blocks.size() + 1);
      b.data = std::move(current);
      corpus.blocks.push_back(std::move(b));
      current.clear();
    }
  };
  auto close_record = [&](std::size_t produced_before) {
    close_piece();
    if (corpus.blocks.size() == produced_before) {
      throw Error(ErrorCode::kEmptyInput, "FASTA record '" + header + "' has no sequence");
    }
  };

  std::size_t produced_before = 0;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t eol = bytes.find('\n', pos);
    if (eol == std::string_view::npos) eol = bytes.size();
    std::string_view line = bytes.substr(pos, eol - pos);
    std::size_t line_start = pos;
    pos = eol + 1;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size()) continue;

    if (line[first] == '>') {
      if (in_record) close_record(produced_before);
      in_record = true;
      produced_before = corpus.blocks.size();
      header = std::string(line.substr(first + 1));
      while (!header.empty() && is_space(header.back())) header.pop_back();
      continue;
    }
    if (line[first] == ';') continue;  // legacy comment line
    if (!in_record) {
      throw Error(ErrorCode::kMalformedFasta, "sequence data before the first '>' header");
    }
    for (std::size_t i = first; i < line.size(); ++i) {
      char c = line[i];
      if (is_space(c)) continue;
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (alphabet.contains(c)) {
        current.push_back(c);
      } else if (options.split_on_unknown) {
        close_piece();
      } else {
        throw ByteOutsideAlphabet(line_start + i, static_cast<unsigned char>(line[i]));
      }
    }
  }
  if (!in_record) throw Error(ErrorCode::kMalformedFasta, "no FASTA header found");
  close_record(produced_before);
  return corpus;
}

std::vector<Block> split_into_blocks(const Block& block, std::size_t k) {
  const std::size_t n = block.data.size();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kBadBlockCount,
                "cannot split " + std::to_string(n) + " letters into " + std::to_string(k) +
                    " blocks");
  }
  std::vector<Block> out;
  out.reserve(k);
  const std::size_t base = n / k;
  const std::size_t extra = n % k;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t len = base + (i < extra ? 1 : 0);
    out.push_back(Block{static_cast<std::uint32_t>(i + 1), block.data.substr(offset, len)});
    offset += len;
  }
  return out;
}

std::string materialize(const MawTupleRef& ref, std::string_view data) {
  if (ref.i1 > ref.i2 || ref.i2 >= data.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "tuple <" + std::to_string(ref.i1) + "," + std::to_string(ref.i2) +
                    "> outside block of length " + std::to_string(data.size()));
  }
  std::string out(data.substr(ref.i1, ref.i2 - ref.i1 + 1));
  out.push_back(ref.alpha);
  return out;
}

std::string materialize(const MawTupleRef& ref, const Block& block) {
  if (ref.block_id != 0 && ref.block_id != block.id) {
    throw Error(ErrorCode::kInvalidArgument,
                "tuple refers to block " + std::to_string(ref.block_id) + ", got block " +
                    std::to_string(block.id));
  }
  return materialize(ref, std::string_view(block.data));
}

std::vector<std::string> canonical_order(std::vector<std::string> words) {
  std::sort(words.begin(), words.end(),
            [](const std::string& a, const std::string& b) { return canonical_less(a, b); });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

std::vector<std::string> canonical_order(const MawSet& set) { return set.words(); }

std::string concatenate(const std::vector<Block>& blocks, char separator) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out.push_back(separator);
    out += blocks[i].data;
  }
  return out;
}

}  // namespace mawstream
