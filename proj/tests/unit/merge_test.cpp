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

#include "mawstream/merge.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mawstream/error.hpp"
#include "mawstream/oracle.hpp"
#include "mawstream/pipeline.hpp"

namespace mawstream {
namespace {

const Alphabet kAb("ab", '#');

std::vector<std::string> sorted(std::vector<std::string> w) { return canonical_order(std::move(w)); }

std::vector<std::string> tuple_words(const std::vector<MawTupleRef>& tuples, const Block& b,
                                     const std::vector<bool>& marks, bool want) {
  std::vector<std::string> out;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    if (marks[t] == want) out.push_back(materialize(tuples[t], b));
  }
  return sorted(out);
}

// Two small blocks: y1 = abaab, y2 = bbaaab, ell = 5.
struct TwoBlocks : ::testing::Test {
  Block y1{1, "abaab"};
  Block y2{2, "bbaaab"};
  MawSet m1 = to_maw_set(compute_maws(y1, kAb, 5), y1);
  SingleMawOutput out2 = compute_maws(y2, kAb, 5);
  MawSet m2 = to_maw_set(out2, y2);
};

TEST_F(TwoBlocks, MarkPrevSuperwords) {
  // Roles swapped: prev = M(y2), new = y1.
  std::vector<bool> marks = mark_prev_superwords(m2, y1, kAb);
  std::vector<std::string> marked;
  for (std::size_t j = 0; j < m2.size(); ++j) {
    if (marks[j]) marked.push_back(m2[j]);
  }
  EXPECT_EQ(sorted(marked), sorted({"bbb", "aaaa", "abb", "bab"}));
  EXPECT_TRUE(mark_prev_superwords(MawSet{}, y1, kAb).empty());
  MawSet aaa = MawSet::from_words({"aaa"});
  EXPECT_EQ(mark_prev_superwords(aaa, Block{1, "aab"}, kAb), std::vector<bool>{true});
}

TEST_F(TwoBlocks, MarkNewSuperwords) {
  std::vector<bool> marks = mark_new_superwords(m1, y2, out2.tuples, kAb);
  EXPECT_EQ(tuple_words(out2.tuples, y2, marks, true), sorted({"bbb", "aaaa", "abb", "bab"}));
  EXPECT_EQ(tuple_words(out2.tuples, y2, marks, false), sorted({"baab", "aba"}));
  std::vector<bool> none = mark_new_superwords(MawSet{}, y2, out2.tuples, kAb);
  EXPECT_EQ(std::count(none.begin(), none.end(), true), 0);
}

TEST_F(TwoBlocks, Case1) {
  std::vector<bool> pm = mark_prev_superwords(m1, y2, kAb);
  std::vector<bool> nm = mark_new_superwords(m1, y2, out2.tuples, kAb);
  Case1Result c1 = build_case1(m1, out2, y2, pm, nm);
  EXPECT_EQ(c1.kept.words(), sorted({"aaaa", "bab", "aaba", "abb", "bbb"}));
  EXPECT_EQ(MawSet(c1.reduced.prev).words(), sorted({"bb", "aaa"}));
  std::vector<std::string> rnew;
  for (const auto& t : c1.reduced.tuples) rnew.push_back(materialize(t, y2));
  EXPECT_EQ(sorted(rnew), sorted({"baab", "aba"}));
  EXPECT_TRUE(c1.reduced.letters.empty());
}

TEST_F(TwoBlocks, IdenticalBlocksKeepEverything) {
  Block again{2, "abaab"};
  SingleMawOutput o = compute_maws(again, kAb, 5);
  Case1Result c1 = build_case1(m1, o, again, mark_prev_superwords(m1, again, kAb),
                               mark_new_superwords(m1, again, o.tuples, kAb));
  EXPECT_EQ(c1.kept, m1);
  EXPECT_TRUE(c1.reduced.prev.empty());
  EXPECT_TRUE(c1.reduced.tuples.empty());
}

TEST_F(TwoBlocks, PairMawsAndCase2) {
  const std::string x = "abaab#bbaaab";
  std::vector<std::string> pair;
  for (const auto& m : compute_pair_maws(x, kAb, 5)) {
    pair.push_back(m.a + x.substr(m.u_start, m.u_length) + m.b);
  }
  EXPECT_NE(std::find(pair.begin(), pair.end(), "abaaa"), pair.end());
  EXPECT_TRUE(compute_pair_maws(x, kAb, 1).empty());
  std::vector<std::string> aa;
  for (const auto& m : compute_pair_maws("a#a", kAb, 2)) aa.push_back(m.a + std::string() + m.b);
  EXPECT_EQ(aa, std::vector<std::string>{"aa"});

  MemoryBlockStore store({y1, y2});
  MergeTrace trace;
  MawSet merged = merge_step(m1, MergeInputs{y2, store, kAb, 5}, &trace);
  EXPECT_TRUE(trace.case2.contains("abaaa"));
  EXPECT_EQ(trace.kept.words(), sorted({"aaaa", "bab", "aaba", "abb", "bbb"}));
  EXPECT_EQ(merged, oracle_concat(std::vector<std::string>{"abaab", "bbaaab"}, 5, kAb));
}

TEST(Case2Filter, EmptyReducedSets) {
  const std::string x = "abaab#bbaaab";
  SuffixTree tree = SuffixTree::build(x);
  auto pm = compute_pair_maws(tree, kAb, 5);
  SideOccurrences yi = side_occurrences(5, {});
  SideOccurrences yn = side_occurrences(6, {});
  EXPECT_TRUE(classify_and_filter_case2(tree, 5, pm, yi, yn, compute_aggregates(tree)).empty());
}

TEST(MergeStep, SecondBlockEqualsFirst) {
  Block y1{1, "abaab"}, y2{2, "abaab"};
  MemoryBlockStore store({y1, y2});
  MawSet m1 = to_maw_set(compute_maws(y1, kAb, 5), y1);
  EXPECT_EQ(merge_step(m1, MergeInputs{y2, store, kAb, 5}),
            oracle_concat(std::vector<std::string>{"abaab", "abaab"}, 5, kAb));
}

TEST(MergeStep, LetterBookkeepingMismatchIsAnInvariantViolation) {
  Block y1{1, "aaa"}, y2{2, "ab"};
  MemoryBlockStore store({y1, y2});
  MawSet m1 = to_maw_set(compute_maws(y1, kAb, 3), y1);
  const std::string wrong = "ab";
  try {
    merge_step(m1, MergeInputs{y2, store, kAb, 3, &wrong});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInternalInvariant);
  }
}

TEST(WordAutomaton, ReportsTheWordEndingAtEachPosition) {
  std::vector<std::string_view> words{"bb", "aaa", "bab"};
  WordAutomaton ac(words, kAb);
  PrevScan scan = scan_block(ac, "aaabbab");
  std::vector<std::uint32_t> want{WordAutomaton::kNoWord, WordAutomaton::kNoWord, 1, WordAutomaton::kNoWord, 0,
                                  WordAutomaton::kNoWord, 2};
  EXPECT_EQ(scan.word_at_end, want);
}

// Random two-block merges against the oracle, with the intermediate sets
// checked against their definitions.
TEST(MergeStep, RandomAgainstOracle) {
  std::mt19937 rng(4242);
  const Alphabet alphabets[] = {kAb, Alphabet("acgt", '#')};
  for (int round = 0; round < 1500; ++round) {
    const Alphabet& al = alphabets[round % 2];
    auto word = [&] {
      std::string w;
      const std::size_t n = 1 + rng() % 30;
      for (std::size_t i = 0; i < n; ++i) w.push_back(al.letters()[rng() % al.size()]);
      return w;
    };
    const std::size_t ell = 2 + rng() % 7;
    Block y1{1, word()}, y2{2, word()};
    MemoryBlockStore store({y1, y2});
    MawSet m1 = oracle_maws(y1.data, ell, al);
    MawSet m2 = oracle_maws(y2.data, ell, al);
    MergeTrace trace;
    MawSet got = merge_step(m1, MergeInputs{y2, store, al, ell}, &trace);
    const MawSet want = oracle_concat(std::vector<std::string>{y1.data, y2.data}, ell, al);
    ASSERT_EQ(got, want) << y1.data << " | " << y2.data << " ell=" << ell;

    auto has_factor_in = [](const std::string& w, const MawSet& s) {
      for (const auto& v : s.words()) {
        if (w.find(v) != std::string::npos) return true;
      }
      return false;
    };
    for (const auto& w : trace.reduced_prev.words()) ASSERT_FALSE(has_factor_in(w, m2)) << w;
    for (const auto& w : trace.reduced_new.words()) ASSERT_FALSE(has_factor_in(w, m1)) << w;
    for (const auto& w : trace.case2.words()) ASSERT_FALSE(trace.kept.contains(w)) << w;
  }
}

}  // namespace
}  // namespace mawstream
