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

// mawstream: per-step MAW sets of y_1 # ... # y_k.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mawstream/error.hpp"
#include "mawstream/pipeline.hpp"
#include "mawstream/text_model.hpp"

namespace fs = std::filesystem;
using mawstream::Error;
using mawstream::ErrorCode;

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string format = "raw";
  std::string alphabet = "dna";
  long long ell = 0;
  std::optional<std::size_t> split;
  std::string out = ".";
  std::string stats;
  bool emit_tuples = false;
  bool fasta_split_unknown = false;
};

mawstream::Alphabet parse_alphabet(const std::string& spec) {
  if (spec == "dna") return mawstream::Alphabet::dna();
  if (spec == "binary") return mawstream::Alphabet::binary();
  const std::string prefix = "custom:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string letters = spec.substr(prefix.size());
    const char sep = letters.find('#') == std::string::npos ? '#' : '\0';
    return mawstream::Alphabet(letters, sep);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown alphabet '" + spec + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Blocks in corpus order, ids 1..k.
std::vector<mawstream::Block> load_blocks(const RunConfig& cfg, const mawstream::Alphabet& alphabet) {
  std::vector<mawstream::Block> blocks;
  for (const auto& path : cfg.inputs) {
    const std::string bytes = read_file(path);
    if (cfg.format == "raw") {
      blocks.push_back(mawstream::ingest_raw(bytes, alphabet));
    } else {
      mawstream::Corpus c =
          mawstream::ingest_fasta(bytes, alphabet, mawstream::FastaOptions{cfg.fasta_split_unknown});
      for (auto& b : c.blocks) blocks.push_back(std::move(b));
    }
  }
  if (cfg.split) {
    if (blocks.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "--split needs exactly one input block");
    }
    blocks = mawstream::split_into_blocks(blocks[0], *cfg.split);
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i].id = static_cast<std::uint32_t>(i + 1);
  return blocks;
}

void write_step(const fs::path& path, const mawstream::MawSet& set, bool tuples) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const auto& e : set.entries()) {
    if (!tuples || e.word.size() == 1) {
      f << e.word << '\n';
      continue;
    }
    if (e.origin.block_id == 0) {
      throw Error(ErrorCode::kInternalInvariant, "word '" + e.word + "' has no recorded origin");
    }
    f << e.origin.block_id << ' ' << e.origin.i1 << ' ' << e.origin.i2 << ' ' << e.origin.alpha
      << '\n';
  }
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

int run(const RunConfig& cfg) {
  if (cfg.ell < 1) throw Error(ErrorCode::kInvalidArgument, "ell must be >= 1");
  if (cfg.format != "raw" && cfg.format != "fasta") {
    throw Error(ErrorCode::kInvalidArgument, "format must be raw or fasta");
  }
  if (cfg.split && cfg.inputs.size() > 1) {
    throw Error(ErrorCode::kInvalidArgument, "--split and multiple inputs are mutually exclusive");
  }
  const mawstream::Alphabet alphabet = parse_alphabet(cfg.alphabet);
  const fs::path out(cfg.out);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + out.string());

  // Spill the blocks to disk so that only the blocks a step needs are
  // resident while it runs.
  const fs::path spill = out / ".blocks";
  fs::remove_all(spill, ec);
  mawstream::FileBlockStore store(spill);
  std::size_t max_in = 0;
  {
    auto blocks = load_blocks(cfg, alphabet);
    for (const auto& b : blocks) {
      store.append(b);
      max_in = std::max(max_in, b.data.size());
    }
  }

  mawstream::SpaceMeter meter;
  mawstream::RunOptions options;
  options.ell = static_cast<std::size_t>(cfg.ell);
  options.meter = &meter;
  const auto reports =
      mawstream::run(store, alphabet, options, [&](std::uint32_t step, const mawstream::MawSet& set) {
        write_step(out / ("maws.step" + std::to_string(step) + ".txt"), set, cfg.emit_tuples);
      });
  fs::remove_all(spill, ec);

  nlohmann::ordered_json stats;
  stats["ell"] = cfg.ell;
  stats["blocks"] = reports.size();
  stats["steps"] = nlohmann::ordered_json::array();
  double total_ms = 0;
  std::size_t max_out = 0;
  for (const auto& r : reports) {
    nlohmann::ordered_json s;
    s["N"] = r.step;
    s["setSize"] = r.set_size;
    s["totalLength"] = r.total_length;
    s["wallTimeMs"] = r.wall_time_ms;
    s["peakElements"] = r.peak_elements;
    stats["steps"].push_back(s);
    total_ms += r.wall_time_ms;
    max_out = std::max(max_out, r.total_length);
  }
  const auto& comp = meter.peak_components();
  stats["totals"] = {
      {"wallTimeMs", total_ms},
      {"peakElements", meter.run_peak()},
      {"maxIn", max_in},
      {"maxOut", max_out},
      {"peakBlockBytes", comp.block_bytes},
      {"peakIndexNodes", comp.index_nodes},
      {"peakSetElements", comp.set_elements},
  };
  const fs::path stats_path = cfg.stats.empty() ? out / "stats.json" : fs::path(cfg.stats);
  std::ofstream f(stats_path, std::ios::trunc);
  f << stats.dump(2) << '\n';
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + stats_path.string());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal absent words of a growing block concatenation"};
  RunConfig cfg;
  app.add_option("--input", cfg.inputs, "Input file(s); each raw file is one block")->required();
  app.add_option("--format", cfg.format, "raw or fasta");
  app.add_option("--alphabet", cfg.alphabet, "dna, binary or custom:<letters>");
  app.add_option("--ell", cfg.ell, "Maximum MAW length")->required();
  app.add_option("--split", cfg.split, "Split a single input into k blocks");
  app.add_option("--out", cfg.out, "Output directory");
  app.add_option("--stats", cfg.stats, "Stats file (default <out>/stats.json)");
  app.add_flag("--emit-tuples", cfg.emit_tuples, "Write <block i1 i2 alpha> lines instead of words");
  app.add_flag("--fasta-split-unknown", cfg.fasta_split_unknown,
               "Split FASTA records at bytes outside the alphabet instead of failing");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    return run(cfg);
  } catch (const Error& e) {
    std::cerr << "mawstream: " << e.what() << '\n';
    return e.code() == ErrorCode::kInternalInvariant ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "mawstream: internal error: " << e.what() << '\n';
    return 2;
  }
}
