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

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

#include "mawstream/error.hpp"
#include "mawstream/queries.hpp"

namespace mawstream {

namespace {

constexpr std::uint32_t kMissing = std::numeric_limits<std::uint32_t>::max();

bool within(std::uint32_t len, std::uint32_t limit) { return len != 0 && len <= limit; }

}  // namespace

WordAutomaton::WordAutomaton(const std::vector<std::string_view>& words, const Alphabet& alphabet)
    : alphabet_(alphabet), sigma_(alphabet.size()) {
  std::vector<std::uint32_t> terminal;
  auto add_state = [&] {
    delta_.resize(delta_.size() + sigma_, kMissing);
    terminal.push_back(kNoWord);
    return static_cast<State>(terminal.size() - 1);
  };
  add_state();
  lengths_.reserve(words.size());
  for (std::uint32_t j = 0; j < words.size(); ++j) {
    State q = 0;
    for (char c : words[j]) {
      const int r = alphabet.rank(c);
      if (r < 0) throw Error(ErrorCode::kInvalidArgument, "word contains a non-letter");
      const std::size_t slot = std::size_t{q} * sigma_ + static_cast<std::size_t>(r);
      if (delta_[slot] == kMissing) {
        const State fresh = add_state();
        delta_[slot] = fresh;
      }
      q = delta_[slot];
    }
    terminal[q] = j;
    lengths_.push_back(static_cast<std::uint32_t>(words[j].size()));
  }

  // Breadth-first completion into a DFA; a state's failure target is
  // shallower, so its row and output are final when the state is reached.
  std::vector<State> fail(terminal.size(), 0);
  out_.assign(terminal.size(), kNoWord);
  std::deque<State> queue;
  for (std::size_t r = 0; r < sigma_; ++r) {
    State& t = delta_[r];
    if (t == kMissing) {
      t = 0;
    } else {
      fail[t] = 0;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    const State u = queue.front();
    queue.pop_front();
    out_[u] = terminal[u] != kNoWord ? terminal[u] : out_[fail[u]];
    for (std::size_t r = 0; r < sigma_; ++r) {
      State& t = delta_[std::size_t{u} * sigma_ + r];
      const State via_fail = delta_[std::size_t{fail[u]} * sigma_ + r];
      if (t == kMissing) {
        t = via_fail;
      } else {
        fail[t] = via_fail;
        queue.push_back(t);
      }
    }
  }
}

PrevScan scan_block(const WordAutomaton& automaton, std::string_view block) {
  PrevScan scan;
  scan.word_at_end.resize(block.size());
  scan.state.resize(block.size());
  WordAutomaton::State q = automaton.start();
  for (std::size_t e = 0; e < block.size(); ++e) {
    q = automaton.next(q, block[e]);
    scan.state[e] = q;
    scan.word_at_end[e] = automaton.word_ending(q);
  }
  return scan;
}

std::vector<bool> mark_prev_superwords(const MawSet& prev, const SuffixTree& new_tree) {
  std::vector<bool> marks(prev.size());
  for (std::size_t j = 0; j < prev.size(); ++j) marks[j] = !new_tree.locate(prev[j]).has_value();
  return marks;
}

std::vector<bool> mark_prev_superwords(const MawSet& prev, const Block& new_block,
                                       const Alphabet& alphabet) {
  return mark_prev_superwords(prev, SuffixTree::build(new_block.data, alphabet.sentinel()));
}

std::vector<bool> mark_new_superwords(const WordAutomaton& automaton, const PrevScan& scan,
                                      const std::vector<MawTupleRef>& tuples) {
  const std::size_t n = scan.state.size();
  // first_end[s]: smallest end of a prev word lying inside y_N[s..].
  std::vector<std::uint32_t> first_end(n + 1, kMissing);
  for (std::size_t e = 0; e < n; ++e) {
    const std::uint32_t w = scan.word_at_end[e];
    if (w == WordAutomaton::kNoWord) continue;
    const std::size_t s = e + 1 - automaton.word_length(w);
    first_end[s] = std::min(first_end[s], static_cast<std::uint32_t>(e));
  }
  for (std::size_t s = n; s-- > 0;) first_end[s] = std::min(first_end[s], first_end[s + 1]);

  std::vector<bool> marks(tuples.size());
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const MawTupleRef& m = tuples[t];
    if (m.i2 >= n || m.i1 > m.i2) throw Error(ErrorCode::kIndexOutOfRange, "tuple outside block");
    if (first_end[m.i1] <= m.i2) {
      marks[t] = true;
      continue;
    }
    // Otherwise a prev word would have to end on alpha; only the one suffix
    // word of y_N[..i2] . alpha can qualify.
    const std::uint32_t w = automaton.word_ending(automaton.next(scan.state[m.i2], m.alpha));
    marks[t] = w != WordAutomaton::kNoWord && automaton.word_length(w) <= m.length();
  }
  return marks;
}

std::vector<bool> mark_new_superwords(const MawSet& prev, const Block& new_block,
                                      const std::vector<MawTupleRef>& tuples,
                                      const Alphabet& alphabet) {
  std::vector<std::string_view> words;
  words.reserve(prev.size());
  for (const auto& e : prev.entries()) words.push_back(e.word);
  WordAutomaton automaton(words, alphabet);
  return mark_new_superwords(automaton, scan_block(automaton, new_block.data), tuples);
}

Case1Result build_case1(const MawSet& prev, const SingleMawOutput& fresh, const Block& new_block,
                        const std::vector<bool>& prev_marks, const std::vector<bool>& new_marks) {
  Case1Result result;
  std::vector<MawEntry> kept;
  for (std::size_t j = 0; j < prev.size(); ++j) {
    (prev_marks[j] ? kept : result.reduced.prev).push_back(prev.entries()[j]);
  }
  for (std::size_t t = 0; t < fresh.tuples.size(); ++t) {
    const MawTupleRef& m = fresh.tuples[t];
    if (new_marks[t]) {
      kept.push_back(MawEntry{materialize(m, new_block), m});
    } else {
      result.reduced.tuples.push_back(m);
    }
  }
  // A letter of M(Y) is a superword of an element of M(P) only if it is one.
  for (char c : fresh.absent_letters) {
    if (prev.contains(std::string_view(&c, 1))) {
      kept.push_back(MawEntry{std::string(1, c), {}});
    } else {
      result.reduced.letters.push_back(c);
    }
  }
  result.kept = MawSet(std::move(kept));
  return result;
}

std::vector<MawOccurrence> compute_pair_maws(const SuffixTree& x_tree, const Alphabet& alphabet,
                                             std::size_t ell) {
  return enumerate_maws(x_tree, alphabet, ell);
}

std::vector<MawOccurrence> compute_pair_maws(std::string_view x, const Alphabet& alphabet,
                                             std::size_t ell) {
  return compute_pair_maws(SuffixTree::build(x, alphabet.sentinel()), alphabet, ell);
}

SideOccurrences side_occurrences(std::size_t side_length,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& occ) {
  SideOccurrences side;
  side.start_len.assign(side_length, 0);
  side.end_len.assign(side_length, 0);
  for (const auto& [s, len] : occ) {
    const std::size_t e = std::size_t{s} + len - 1;
    if (len == 0 || e >= side_length) {
      throw Error(ErrorCode::kInternalInvariant, "reduced-set occurrence outside its side");
    }
    if ((side.start_len[s] != 0 && side.start_len[s] != len) ||
        (side.end_len[e] != 0 && side.end_len[e] != len)) {
      throw Error(ErrorCode::kInternalInvariant, "reduced set is not prefix/suffix free");
    }
    side.start_len[s] = len;
    side.end_len[e] = len;
  }
  return side;
}

std::vector<MawOccurrence> classify_and_filter_case2(const SuffixTree& x_tree,
                                                     std::size_t yi_length,
                                                     const std::vector<MawOccurrence>& pair_maws,
                                                     const SideOccurrences& in_yi,
                                                     const SideOccurrences& in_yn,
                                                     const NodeAggregates& aggregates) {
  std::vector<MawOccurrence> kept;
  if (pair_maws.empty()) return kept;
  const std::uint32_t sep = static_cast<std::uint32_t>(yi_length);
  const std::uint32_t off = sep + 1;
  const std::uint32_t x_length = static_cast<std::uint32_t>(x_tree.text().size() - 1);
  const std::vector<NodeId> leaf_of = leaves_by_suffix(x_tree, 0, x_length);

  std::vector<WeightedAncestorQuery> queries;
  queries.reserve(2 * pair_maws.size());
  for (const auto& m : pair_maws) {
    queries.push_back({leaf_of[m.u_start - 1], m.u_length + 1});
    queries.push_back({leaf_of[m.ub_start], m.u_length + 1});
  }
  const std::vector<Locus> loci = batch_weighted_ancestors(x_tree, queries);

  for (std::size_t k = 0; k < pair_maws.size(); ++k) {
    const MawOccurrence& m = pair_maws[k];
    const NodeId au = loci[2 * k].node;
    const NodeId ub = loci[2 * k + 1].node;
    const std::uint32_t len = m.u_length + 1;
    // au in y_i starting with an R(Y) word, ub in y_N ending with an R(P)
    // word; any single occurrence decides, since a word with such a prefix
    // (suffix) cannot occur on the other side.
    bool keep = false;
    if (aggregates.min_start[au] < sep && aggregates.max_start[ub] > sep) {
      keep = within(in_yi.start_len[aggregates.min_start[au]], len) &&
             within(in_yn.end_len[aggregates.max_start[ub] - off + len - 1], len);
    }
    // The converse: au in y_N with an R(P) prefix, ub in y_i with an R(Y)
    // suffix.
    if (!keep && aggregates.max_start[au] > sep && aggregates.min_start[ub] < sep) {
      keep = within(in_yn.start_len[aggregates.max_start[au] - off], len) &&
             within(in_yi.end_len[aggregates.min_start[ub] + len - 1], len);
    }
    if (keep) kept.push_back(m);
  }
  return kept;
}

MawSet merge_step(MawSet prev, const MergeInputs& in, MergeTrace* trace, SpaceMeter* meter) {
  const Block& y = in.new_block;
  const Alphabet& alphabet = in.alphabet;
  const std::size_t n = y.data.size();
  auto sample = [&](std::size_t block_bytes, std::size_t nodes, std::size_t elements) {
    if (meter != nullptr) meter->sample(Residency{block_bytes, nodes, elements});
  };

  if (in.seen_letters != nullptr) {
    for (char c : alphabet.letters()) {
      const bool absent_before = prev.contains(std::string_view(&c, 1));
      const bool seen = in.seen_letters->find(c) != std::string::npos;
      if (absent_before == seen) {
        throw Error(ErrorCode::kInternalInvariant,
                    std::string("letter bookkeeping disagrees with the previous set on '") + c +
                        "'");
      }
    }
  }

  // M(Y), and the prev words that are not factors of Y, on one tree.
  SingleMawOutput fresh;
  std::vector<bool> prev_marks;
  {
    const SuffixTree tree = SuffixTree::build(y.data, alphabet.sentinel());
    fresh = compute_maws(y, tree, alphabet, in.ell);
    prev_marks = mark_prev_superwords(prev, tree);
    sample(n, tree.node_count(), prev.total_length() + fresh.size());
  }

  // New words containing a prev word, and where R(P) words occur in y_N.
  std::vector<bool> new_marks;
  SideOccurrences in_yn;
  {
    std::vector<std::string_view> words;
    words.reserve(prev.size());
    for (const auto& e : prev.entries()) words.push_back(e.word);
    const WordAutomaton automaton(words, alphabet);
    const PrevScan scan = scan_block(automaton, y.data);
    sample(n, automaton.state_count(), prev.total_length() + fresh.size());
    new_marks = mark_new_superwords(automaton, scan, fresh.tuples);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> occ;
    for (std::size_t e = 0; e < n; ++e) {
      const std::uint32_t w = scan.word_at_end[e];
      if (w == WordAutomaton::kNoWord || prev_marks[w]) continue;
      const auto len = static_cast<std::uint32_t>(automaton.word_length(w));
      occ.emplace_back(static_cast<std::uint32_t>(e + 1 - len), len);
    }
    in_yn = side_occurrences(n, occ);
  }

  Case1Result case1 = build_case1(prev, fresh, y, prev_marks, new_marks);
  prev = MawSet();
  fresh = SingleMawOutput();

  std::vector<std::string> r_new;
  r_new.reserve(case1.reduced.tuples.size() + case1.reduced.letters.size());
  for (char c : case1.reduced.letters) r_new.emplace_back(1, c);
  for (const auto& t : case1.reduced.tuples) r_new.push_back(materialize(t, y));
  const std::vector<std::string_view> r_new_views(r_new.begin(), r_new.end());
  std::size_t r_new_letters = 0;
  for (const auto& w : r_new) r_new_letters += w.size();
  std::size_t r_prev_letters = 0;
  for (const auto& e : case1.reduced.prev) r_prev_letters += e.word.size();
  const std::size_t case1_elements = case1.kept.total_length() + r_new_letters + r_prev_letters;

  // Case 2, one earlier block at a time. Without both reduced sets there is
  // no Case-2 word.
  std::vector<MawEntry> case2;
  std::size_t case2_letters = 0;
  const bool any_case2 = !case1.reduced.prev.empty() && !r_new.empty();
  for (std::uint32_t i = 1; any_case2 && i < y.id; ++i) {
    std::string x = in.earlier.read(i).data;
    const std::size_t yi_length = x.size();
    x.push_back(alphabet.separator());
    x += y.data;
    const SuffixTree tree = SuffixTree::build(x, alphabet.sentinel());

    std::vector<std::pair<std::uint32_t, std::uint32_t>> occ;
    const auto located = locate_prefix_free_patterns(tree, r_new_views);
    for (std::size_t j = 0; j < located.size(); ++j) {
      for (std::uint32_t s : located[j]) {
        occ.emplace_back(s, static_cast<std::uint32_t>(r_new[j].size()));
      }
    }
    const SideOccurrences in_yi = side_occurrences(yi_length, occ);
    const NodeAggregates aggregates = compute_aggregates(tree);
    const std::vector<MawOccurrence> pair_maws = compute_pair_maws(tree, alphabet, in.ell);
    sample(x.size(), tree.node_count(), case1_elements + case2_letters + pair_maws.size());

    for (const auto& m : classify_and_filter_case2(tree, yi_length, pair_maws, in_yi, in_yn,
                                                   aggregates)) {
      std::string word;
      word.reserve(m.length());
      word.push_back(m.a);
      word.append(x, m.u_start, m.u_length);
      word.push_back(m.b);
      const std::uint32_t p = m.u_start - 1;
      MawTupleRef origin = p < yi_length
                               ? MawTupleRef{i, p, p + m.u_length, m.b}
                               : MawTupleRef{y.id, static_cast<std::uint32_t>(p - yi_length - 1),
                                             static_cast<std::uint32_t>(p - yi_length - 1) +
                                                 m.u_length,
                                             m.b};
      case2_letters += word.size();
      case2.push_back(MawEntry{std::move(word), origin});
    }
  }

  if (trace != nullptr) {
    trace->kept = case1.kept;
    trace->reduced_prev = MawSet(case1.reduced.prev);
    trace->reduced_new = MawSet::from_words(r_new);
    trace->case2 = MawSet(case2);
  }

  std::vector<MawEntry> all = case1.kept.entries();
  case1 = Case1Result();
  all.insert(all.end(), std::make_move_iterator(case2.begin()), std::make_move_iterator(case2.end()));
  MawSet merged(std::move(all));
  sample(n, 0, merged.total_length());
  return merged;
}

}  // namespace mawstream
