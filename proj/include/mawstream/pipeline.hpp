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

#ifndef MAWSTREAM_PIPELINE_HPP_
#define MAWSTREAM_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "mawstream/merge.hpp"
#include "mawstream/space_meter.hpp"
#include "mawstream/text_model.hpp"

namespace mawstream {

class MemoryBlockStore : public BlockStore {
 public:
  explicit MemoryBlockStore(std::vector<Block> blocks);
  std::size_t size() const override { return blocks_.size(); }
  Block read(std::uint32_t id) const override;
  std::size_t length(std::uint32_t id) const override;

 private:
  std::vector<Block> blocks_;
};

// One file per block under `dir` (created if missing). Blocks are appended in
// id order; reads go back to disk every time.
class FileBlockStore : public BlockStore {
 public:
  explicit FileBlockStore(std::filesystem::path dir);
  void append(const Block& block);

  std::size_t size() const override { return lengths_.size(); }
  Block read(std::uint32_t id) const override;
  std::size_t length(std::uint32_t id) const override;

 private:
  std::filesystem::path path_of(std::uint32_t id) const;

  std::filesystem::path dir_;
  std::vector<std::size_t> lengths_;
};

struct StepReport {
  std::uint32_t step = 0;
  std::size_t set_size = 0;
  std::size_t total_length = 0;
  double wall_time_ms = 0;
  std::size_t peak_elements = 0;
};

// Called with each step's set before the next step starts.
using StepSink = std::function<void(std::uint32_t step, const MawSet& set)>;

struct RunOptions {
  std::size_t ell = 0;
  SpaceMeter* meter = nullptr;
  // When set, receives one trace per merge step (index N - 2 for step N).
  std::vector<MergeTrace>* traces = nullptr;
};

// Step 1 computes M(y_1); step N merges y_N into the previous set.
std::vector<StepReport> run(const BlockStore& source, const Alphabet& alphabet,
                            const RunOptions& options, const StepSink& sink);
std::vector<StepReport> run(const Corpus& corpus, const RunOptions& options, const StepSink& sink);

// The single-block set as a MawSet, origins recorded.
MawSet to_maw_set(const SingleMawOutput& out, const Block& block);

// Largest instrumented residency seen so far.
inline std::size_t peak_space_estimate(const SpaceMeter& meter) { return meter.run_peak(); }

}  // namespace mawstream

#endif  // MAWSTREAM_PIPELINE_HPP_
