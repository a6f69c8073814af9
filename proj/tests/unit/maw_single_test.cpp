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

#include "mawstream/maw_single.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mawstream/oracle.hpp"

namespace mawstream {
namespace {

MawSet run(const std::string& data, std::size_t ell, const Alphabet& alphabet) {
  Block b{1, data};
  return MawSet::from_words(materialize_all(compute_maws(b, alphabet, ell), b));
}

std::vector<std::string> sorted(std::vector<std::string> w) { return canonical_order(std::move(w)); }

TEST(ComputeMaws, ReferenceFixtures) {
  const Alphabet ab("ab", '#');
  EXPECT_EQ(run("abaab", 3, ab).words(), sorted({"aaa", "bab", "bb"}));
  EXPECT_EQ(run("abaab", 5, ab).words(), sorted({"bb", "aaa", "bab", "aaba"}));
  EXPECT_EQ(run("bbaaab", 5, ab).words(), sorted({"bbb", "aaaa", "baab", "aba", "bab", "abb"}));
  EXPECT_EQ(run("ab", 2, Alphabet("abc", '#')).words(), sorted({"aa", "bb", "ba", "c"}));
}

TEST(ComputeMaws, EllOneHasOnlyLetters) {
  const Alphabet ab("ab", '#');
  SingleMawOutput out = compute_maws(Block{1, "aaaa"}, ab, 1);
  EXPECT_TRUE(out.tuples.empty());
  EXPECT_EQ(out.absent_letters, "b");
}

TEST(AbsentLetters, Basic) {
  const Alphabet abc("abc", '#');
  EXPECT_EQ(absent_letters("ab", abc), "c");
  EXPECT_EQ(absent_letters("abc", abc), "");
  EXPECT_EQ(absent_letters("aaaa", Alphabet("ab", '#')), "b");
}

TEST(ComputeMaws, MatchesOracleOnRandomBlocks) {
  std::mt19937 rng(12345);
  const Alphabet alphabets[] = {Alphabet("ab", '#'), Alphabet::dna()};
  for (int round = 0; round < 2000; ++round) {
    const Alphabet& al = alphabets[round % 2];
    const std::size_t n = 1 + rng() % 300;
    std::string data;
    for (std::size_t i = 0; i < n; ++i) data.push_back(al.letters()[rng() % al.size()]);
    const std::size_t ell = 1 + rng() % 10;
    Block b{1, data};
    SingleMawOutput out = compute_maws(b, al, ell);
    std::vector<std::string> words = materialize_all(out, b);
    ASSERT_EQ(MawSet::from_words(words).size(), words.size()) << "duplicate output";
    ASSERT_LE(out.size(), 2 * al.size() * n);
    ASSERT_EQ(MawSet::from_words(words), oracle_maws(data, ell, al)) << data << " ell=" << ell;
    for (const auto& t : out.tuples) {
      ASSERT_LE(t.length(), ell);
      ASSERT_NE(data.substr(t.i1, t.i2 - t.i1 + 1).size(), 0u);
    }
  }
}

// Separated texts: the enumerator on a tree over x = y1 # y2 agrees with the
// oracle once single letters are set aside.
TEST(EnumerateMaws, SeparatedText) {
  std::mt19937 rng(99);
  const Alphabet al("ab", '#');
  for (int round = 0; round < 1000; ++round) {
    std::string x;
    const int parts = 1 + static_cast<int>(rng() % 3);
    for (int p = 0; p < parts; ++p) {
      if (p > 0) x.push_back('#');
      const int n = 1 + static_cast<int>(rng() % 25);
      for (int i = 0; i < n; ++i) x.push_back("ab"[rng() % 2]);
    }
    const std::size_t ell = 2 + rng() % 7;
    SuffixTree tree = SuffixTree::build(x, al.sentinel());
    std::vector<std::string> got;
    for (const auto& m : enumerate_maws(tree, al, ell)) {
      got.push_back(m.a + x.substr(m.u_start, m.u_length) + m.b);
      ASSERT_EQ(x[m.u_start - 1], m.a);
      ASSERT_EQ(x.substr(m.ub_start, m.u_length + 1), x.substr(m.u_start, m.u_length) + m.b);
    }
    std::vector<std::string> want;
    for (const auto& w : oracle_maws(x, ell, al).words()) {
      if (w.size() >= 2) want.push_back(w);
    }
    ASSERT_EQ(canonical_order(got), canonical_order(want)) << x;
  }
}

}  // namespace
}  // namespace mawstream
