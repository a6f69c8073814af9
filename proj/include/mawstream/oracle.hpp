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

// Brute-force reference: enumerate every factor of length <= ell and test
// the definition directly. Quadratic-ish; for tests and small inputs only.

#ifndef MAWSTREAM_ORACLE_HPP_
#define MAWSTREAM_ORACLE_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "mawstream/text_model.hpp"

namespace mawstream {

// MAWs of `text` of length <= ell whose letters are all in the alphabet.
// `text` may contain the separator; no factor crosses it.
MawSet oracle_maws(std::string_view text, std::size_t ell, const Alphabet& alphabet);

// oracle_maws of the blocks joined by the separator.
MawSet oracle_concat(const std::vector<Block>& blocks, std::size_t ell, const Alphabet& alphabet);

// Same for plain strings.
MawSet oracle_concat(const std::vector<std::string>& blocks, std::size_t ell,
                     const Alphabet& alphabet);

}  // namespace mawstream

#endif  // MAWSTREAM_ORACLE_HPP_
