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

#include <gtest/gtest.h>

#include "mawstream/error.hpp"

namespace mawstream {
namespace {

const Alphabet kAb("ab", '#');

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInternalInvariant;
}

std::vector<std::string> data_of(const std::vector<Block>& blocks) {
  std::vector<std::string> out;
  for (const auto& b : blocks) out.push_back(b.data);
  return out;
}

TEST(Alphabet, Validation) {
  Alphabet a("ba", '#');
  EXPECT_EQ(a.letters(), "ab");
  EXPECT_EQ(a.rank('b'), 1);
  EXPECT_EQ(a.rank('#'), -1);
  EXPECT_EQ(a.sentinel(), '$');
  EXPECT_EQ(code_of([] { Alphabet("", '#'); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Alphabet("aa", '#'); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Alphabet("a#", '#'); }), ErrorCode::kInvalidArgument);
  Alphabet dollar("$a", '#');
  EXPECT_NE(dollar.sentinel(), '$');
  EXPECT_NE(dollar.sentinel(), '#');
  EXPECT_FALSE(dollar.contains(dollar.sentinel()));
  EXPECT_EQ(Alphabet::dna().letters(), "ACGT");
  EXPECT_EQ(Alphabet::dna().separator(), '\0');
}

TEST(IngestRaw, Examples) {
  EXPECT_EQ(ingest_raw("abaab\n", kAb).data, "abaab");
  EXPECT_EQ(ingest_raw(" ab\r\n\taa b ", kAb).data, "abaab");
  try {
    ingest_raw("abc", kAb);
    FAIL();
  } catch (const ByteOutsideAlphabet& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_EQ(e.byte(), 'c');
  }
  EXPECT_EQ(code_of([] { ingest_raw("", kAb); }), ErrorCode::kEmptyInput);
  EXPECT_EQ(code_of([] { ingest_raw(" \n", kAb); }), ErrorCode::kEmptyInput);
}

TEST(IngestFasta, Examples) {
  const Alphabet dna = Alphabet::dna();
  Corpus c = ingest_fasta(">c1\nAC\nGT\n>c2\nTT\n", dna);
  EXPECT_EQ(data_of(c.blocks), (std::vector<std::string>{"ACGT", "TT"}));
  EXPECT_EQ(c.blocks[0].id, 1u);
  EXPECT_EQ(c.blocks[1].id, 2u);
  EXPECT_EQ(data_of(ingest_fasta(">c1\nacgt\n", dna).blocks), (std::vector<std::string>{"ACGT"}));
  EXPECT_EQ(data_of(ingest_fasta("\n; comment\n>c1\r\nAC GT\r\n", dna).blocks),
            (std::vector<std::string>{"ACGT"}));
  EXPECT_EQ(code_of([&] { ingest_fasta("ACGT", dna); }), ErrorCode::kMalformedFasta);
  EXPECT_EQ(code_of([&] { ingest_fasta("", dna); }), ErrorCode::kMalformedFasta);
  EXPECT_EQ(code_of([&] { ingest_fasta(">c1\nACNT\n", dna); }), ErrorCode::kByteOutsideAlphabet);
  EXPECT_EQ(code_of([&] { ingest_fasta(">c1\n>c2\nAC\n", dna); }), ErrorCode::kEmptyInput);
}

TEST(IngestFasta, SplitOnUnknown) {
  const Alphabet dna = Alphabet::dna();
  FastaOptions opt{true};
  Corpus c = ingest_fasta(">c1\nNNACNN\nNGTn\n>c2\nT\n", dna, opt);
  EXPECT_EQ(data_of(c.blocks), (std::vector<std::string>{"AC", "GT", "T"}));
  for (std::size_t i = 0; i < c.blocks.size(); ++i) EXPECT_EQ(c.blocks[i].id, i + 1);
}

TEST(SplitIntoBlocks, Examples) {
  EXPECT_EQ(data_of(split_into_blocks(Block{1, "abaab"}, 1)), (std::vector<std::string>{"abaab"}));
  EXPECT_EQ(data_of(split_into_blocks(Block{1, "abaabb"}, 2)), (std::vector<std::string>{"aba", "abb"}));
  EXPECT_EQ(data_of(split_into_blocks(Block{1, "abaab"}, 3)),
            (std::vector<std::string>{"ab", "aa", "b"}));
  EXPECT_EQ(code_of([] { split_into_blocks(Block{1, "abcde"}, 6); }), ErrorCode::kBadBlockCount);
  EXPECT_EQ(code_of([] { split_into_blocks(Block{1, "abcde"}, 0); }), ErrorCode::kBadBlockCount);
  const std::string text(1001, 'a');
  for (std::size_t k : {1u, 2u, 7u, 1001u}) {
    auto blocks = split_into_blocks(Block{1, text}, k);
    ASSERT_EQ(blocks.size(), k);
    std::string joined;
    std::size_t lo = text.size(), hi = 0;
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_EQ(blocks[i].id, i + 1);
      joined += blocks[i].data;
      lo = std::min(lo, blocks[i].data.size());
      hi = std::max(hi, blocks[i].data.size());
    }
    EXPECT_EQ(joined, text);
    EXPECT_LE(hi - lo, 1u);
  }
}

TEST(Materialize, Examples) {
  Block b{1, "abaab"};
  EXPECT_EQ(materialize(MawTupleRef{1, 0, 1, 'a'}, b), "aba");
  EXPECT_EQ(materialize(MawTupleRef{1, 2, 2, 'b'}, b), "ab");
  EXPECT_EQ(code_of([&] { materialize(MawTupleRef{1, 0, 5, 'a'}, b); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of([&] { materialize(MawTupleRef{1, 3, 2, 'a'}, b); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of([&] { materialize(MawTupleRef{2, 0, 1, 'a'}, b); }), ErrorCode::kInvalidArgument);
}

TEST(CanonicalOrder, Examples) {
  EXPECT_EQ(canonical_order(std::vector<std::string>{"aaba", "bab", "bb", "aaa"}),
            (std::vector<std::string>{"bb", "aaa", "bab", "aaba"}));
  EXPECT_TRUE(canonical_order(MawSet{}).empty());
  EXPECT_EQ(canonical_order(MawSet::from_words({"c"})), (std::vector<std::string>{"c"}));
}

TEST(MawSet, DedupAndMeasure) {
  MawSet s = MawSet::from_words({"bab", "bb", "bab", "aaa"});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.total_length(), 8u);
  EXPECT_TRUE(s.contains("bb"));
  EXPECT_FALSE(s.contains("ab"));
  EXPECT_EQ(s, MawSet::from_words({"aaa", "bb", "bab"}));
}

TEST(Concatenate, JoinsWithSeparator) {
  EXPECT_EQ(concatenate({Block{1, "ab"}, Block{2, "b"}}, '#'), "ab#b");
}

}  // namespace
}  // namespace mawstream
