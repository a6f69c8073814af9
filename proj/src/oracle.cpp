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

#include "mawstream/oracle.hpp"

#include <string>
#include <unordered_set>

namespace mawstream {

MawSet oracle_maws(std::string_view text, std::size_t ell, const Alphabet& alphabet) {
  std::unordered_set<std::string_view> factors;
  for (std::size_t i = 0; i < text.size(); ++i) {
    for (std::size_t len = 1; len <= ell && i + len <= text.size(); ++len) {
      if (!alphabet.contains(text[i + len - 1])) break;
      factors.insert(text.substr(i, len));
    }
  }
  auto occurs = [&](const std::string& w) { return factors.count(std::string_view(w)) > 0; };

  std::vector<std::string> out;
  if (ell == 0) return MawSet::from_words(out);
  for (char c : alphabet.letters()) {
    if (!occurs(std::string(1, c))) out.emplace_back(1, c);
  }
  std::vector<std::string> middles;
  if (ell >= 2) middles.emplace_back();
  for (auto f : factors) {
    if (f.size() + 2 <= ell) middles.emplace_back(f);
  }
  for (const auto& u : middles) {
    for (char a : alphabet.letters()) {
      const std::string au = a + u;
      if (!occurs(au)) continue;
      for (char b : alphabet.letters()) {
        const std::string aub = au + b;
        if (occurs(u + b) && !occurs(aub)) out.push_back(aub);
      }
    }
  }
  return MawSet::from_words(std::move(out));
}

MawSet oracle_concat(const std::vector<Block>& blocks, std::size_t ell, const Alphabet& alphabet) {
  return oracle_maws(concatenate(blocks, alphabet.separator()), ell, alphabet);
}

MawSet oracle_concat(const std::vector<std::string>& blocks, std::size_t ell,
                     const Alphabet& alphabet) {
  std::string joined;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) joined.push_back(alphabet.separator());
    joined += blocks[i];
  }
  return oracle_maws(joined, ell, alphabet);
}

}  // namespace mawstream
