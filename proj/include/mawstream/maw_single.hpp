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

#ifndef MAWSTREAM_MAW_SINGLE_HPP_
#define MAWSTREAM_MAW_SINGLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mawstream/suffix_tree.hpp"
#include "mawstream/text_model.hpp"

namespace mawstream {

// The word a . text[u_start .. u_start+u_length-1] . b, with a occurring
// right before u_start (text[u_start-1] == a). ub_start is an occurrence of
// ub.
struct MawOccurrence {
  char a = 0;
  char b = 0;
  std::uint32_t u_start = 0;
  std::uint32_t u_length = 0;
  std::uint32_t ub_start = 0;

  std::size_t length() const { return std::size_t{u_length} + 2; }
};

// Every minimal absent word of length 2..ell of the tree's text whose letters
// (a, u and b) all belong to the alphabet. Bytes outside the alphabet (the
// separator, the sentinel) act as barriers that no reported word crosses.
// Each word is reported once.
std::vector<MawOccurrence> enumerate_maws(const SuffixTree& tree, const Alphabet& alphabet,
                                          std::size_t ell);

std::string absent_letters(std::string_view data, const Alphabet& alphabet);

struct SingleMawOutput {
  // Sorted by (i1, i2, alpha).
  std::vector<MawTupleRef> tuples;
  std::string absent_letters;

  std::size_t size() const { return tuples.size() + absent_letters.size(); }
};

SingleMawOutput compute_maws(const Block& block, const Alphabet& alphabet, std::size_t ell);
// Same, reusing a tree already built over block.data.
SingleMawOutput compute_maws(const Block& block, const SuffixTree& tree, const Alphabet& alphabet,
                             std::size_t ell);

// Explicit words of an output (letters first, then tuples materialized).
std::vector<std::string> materialize_all(const SingleMawOutput& out, const Block& block);

}  // namespace mawstream

#endif  // MAWSTREAM_MAW_SINGLE_HPP_
