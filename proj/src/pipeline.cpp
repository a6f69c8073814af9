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

#include "mawstream/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <iterator>
#include <utility>

#include "mawstream/error.hpp"
#include "mawstream/maw_single.hpp"

namespace mawstream {

MemoryBlockStore::MemoryBlockStore(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

Block MemoryBlockStore::read(std::uint32_t id) const {
  if (id == 0 || id > blocks_.size()) throw Error(ErrorCode::kIndexOutOfRange, "no such block");
  return blocks_[id - 1];
}

std::size_t MemoryBlockStore::length(std::uint32_t id) const {
  if (id == 0 || id > blocks_.size()) throw Error(ErrorCode::kIndexOutOfRange, "no such block");
  return blocks_[id - 1].data.size();
}

FileBlockStore::FileBlockStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir_.string() + ": " + ec.message());
}

std::filesystem::path FileBlockStore::path_of(std::uint32_t id) const {
  return dir_ / ("block_" + std::to_string(id) + ".bin");
}

void FileBlockStore::append(const Block& block) {
  if (block.id != lengths_.size() + 1) {
    throw Error(ErrorCode::kInvalidArgument, "blocks must be appended in id order");
  }
  std::ofstream f(path_of(block.id), std::ios::binary | std::ios::trunc);
  f.write(block.data.data(), static_cast<std::streamsize>(block.data.size()));
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + path_of(block.id).string());
  lengths_.push_back(block.data.size());
}

Block FileBlockStore::read(std::uint32_t id) const {
  if (id == 0 || id > lengths_.size()) throw Error(ErrorCode::kIndexOutOfRange, "no such block");
  std::ifstream f(path_of(id), std::ios::binary);
  Block b{id, std::string(lengths_[id - 1], '\0')};
  f.read(b.data.data(), static_cast<std::streamsize>(b.data.size()));
  if (!f) throw Error(ErrorCode::kIo, "cannot read " + path_of(id).string());
  return b;
}

std::size_t FileBlockStore::length(std::uint32_t id) const {
  if (id == 0 || id > lengths_.size()) throw Error(ErrorCode::kIndexOutOfRange, "no such block");
  return lengths_[id - 1];
}

MawSet to_maw_set(const SingleMawOutput& out, const Block& block) {
  std::vector<MawEntry> entries;
  entries.reserve(out.size());
  for (char c : out.absent_letters) entries.push_back(MawEntry{std::string(1, c), {}});
  for (const auto& t : out.tuples) entries.push_back(MawEntry{materialize(t, block), t});
  return MawSet(std::move(entries));
}

std::vector<StepReport> run(const BlockStore& source, const Alphabet& alphabet,
                            const RunOptions& options, const StepSink& sink) {
  if (options.ell < 1) throw Error(ErrorCode::kInvalidArgument, "ell must be >= 1");
  if (source.size() == 0) throw Error(ErrorCode::kEmptyInput, "no blocks");
  SpaceMeter local_meter;
  SpaceMeter& meter = options.meter != nullptr ? *options.meter : local_meter;

  std::vector<StepReport> reports;
  MawSet current;
  std::string seen;
  for (std::uint32_t id = 1; id <= source.size(); ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    meter.begin_step();
    const Block block = source.read(id);
    for (std::size_t p = 0; p < block.data.size(); ++p) {
      if (!alphabet.contains(block.data[p])) {
        throw ByteOutsideAlphabet(p, static_cast<unsigned char>(block.data[p]));
      }
    }
    if (id == 1) {
      const SuffixTree tree = SuffixTree::build(block.data, alphabet.sentinel());
      const SingleMawOutput out = compute_maws(block, tree, alphabet, options.ell);
      meter.sample(Residency{block.data.size(), tree.node_count(), out.size()});
      current = to_maw_set(out, block);
    } else {
      MergeTrace trace;
      current = merge_step(std::move(current),
                           MergeInputs{block, source, alphabet, options.ell, &seen},
                           options.traces != nullptr ? &trace : nullptr, &meter);
      if (options.traces != nullptr) options.traces->push_back(std::move(trace));
    }
    meter.sample(Residency{block.data.size(), 0, current.total_length()});
    for (char c : absent_letters(seen, alphabet)) {
      if (block.data.find(c) != std::string::npos) seen.push_back(c);
    }

    StepReport r;
    r.step = id;
    r.set_size = current.size();
    r.total_length = current.total_length();
    r.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.peak_elements = meter.step_peak();
    sink(id, current);
    reports.push_back(r);
  }
  return reports;
}

std::vector<StepReport> run(const Corpus& corpus, const RunOptions& options, const StepSink& sink) {
  return run(MemoryBlockStore(corpus.blocks), corpus.alphabet, options, sink);
}

}  // namespace mawstream
