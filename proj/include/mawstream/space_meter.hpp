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

#ifndef MAWSTREAM_SPACE_METER_HPP_
#define MAWSTREAM_SPACE_METER_HPP_

#include <algorithm>
#include <cstddef>

namespace mawstream {

// Resident data at one instant, in elements: block bytes, index nodes (tree
// or automaton), and set elements (letters of explicit words plus one per
// tuple).
struct Residency {
  std::size_t block_bytes = 0;
  std::size_t index_nodes = 0;
  std::size_t set_elements = 0;

  std::size_t total() const { return block_bytes + index_nodes + set_elements; }
};

// Peak tracker fed at module boundaries. Peaks are kept per step and over the
// whole run, both for the total and for each component separately.
class SpaceMeter {
 public:
  void sample(const Residency& r) {
    step_peak_ = std::max(step_peak_, r.total());
    run_peak_ = std::max(run_peak_, r.total());
    peak_components_.block_bytes = std::max(peak_components_.block_bytes, r.block_bytes);
    peak_components_.index_nodes = std::max(peak_components_.index_nodes, r.index_nodes);
    peak_components_.set_elements = std::max(peak_components_.set_elements, r.set_elements);
  }

  void begin_step() { step_peak_ = 0; }
  std::size_t step_peak() const { return step_peak_; }
  std::size_t run_peak() const { return run_peak_; }
  // Componentwise maxima; they need not have been reached at the same time.
  const Residency& peak_components() const { return peak_components_; }

 private:
  std::size_t step_peak_ = 0;
  std::size_t run_peak_ = 0;
  Residency peak_components_;
};

}  // namespace mawstream

#endif  // MAWSTREAM_SPACE_METER_HPP_
