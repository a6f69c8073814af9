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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mawstream/oracle.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "mawstream_cli_test";

void write(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cli(const std::string& args) {
  const std::string cmd = std::string(MAWSTREAM_CLI) + " " + args + " >" + (kWork / "stdout").string() +
                          " 2>" + (kWork / "stderr").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    fs::remove_all(kWork);
    fs::create_directories(kWork);
    write(kWork / "y1.txt", "abaab\n");
    write(kWork / "y2.txt", "bbaaab\n");
  }
  void TearDown() override { fs::remove_all(kWork); }
};

TEST_F(Cli, WritesStepsAndStats) {
  const fs::path out = kWork / "out";
  ASSERT_EQ(cli("--input " + (kWork / "y1.txt").string() + " " + (kWork / "y2.txt").string() +
                " --alphabet custom:ab --ell 5 --out " + out.string()),
            0);
  EXPECT_EQ(slurp(out / "maws.step1.txt"), "bb\naaa\nbab\naaba\n");
  const mawstream::Alphabet ab("ab", '#');
  const auto want = mawstream::oracle_concat(std::vector<std::string>{"abaab", "bbaaab"}, 5, ab);
  EXPECT_EQ(lines(slurp(out / "maws.step2.txt")), want.words());

  const auto stats = nlohmann::json::parse(slurp(out / "stats.json"));
  ASSERT_EQ(stats["steps"].size(), 2u);
  for (int n = 1; n <= 2; ++n) {
    const auto& s = stats["steps"][n - 1];
    EXPECT_EQ(s["N"], n);
    const auto words = lines(slurp(out / ("maws.step" + std::to_string(n) + ".txt")));
    EXPECT_EQ(s["setSize"].get<std::size_t>(), words.size());
    std::size_t total = 0;
    for (const auto& w : words) total += w.size();
    EXPECT_EQ(s["totalLength"].get<std::size_t>(), total);
    EXPECT_TRUE(s.contains("wallTimeMs"));
    EXPECT_GT(s["peakElements"].get<std::size_t>(), 0u);
  }
  EXPECT_TRUE(stats["totals"].contains("peakElements"));
  EXPECT_FALSE(fs::exists(out / ".blocks"));
}

TEST_F(Cli, EmitTuplesMaterializeToTheSameSet) {
  const fs::path out = kWork / "out";
  ASSERT_EQ(cli("--input " + (kWork / "y1.txt").string() + " " + (kWork / "y2.txt").string() +
                " --alphabet custom:ab --ell 5 --emit-tuples --out " + out.string()),
            0);
  const std::string blocks[] = {"abaab", "bbaaab"};
  std::vector<std::string> words;
  for (const auto& l : lines(slurp(out / "maws.step2.txt"))) {
    if (l.size() == 1) {
      words.push_back(l);
      continue;
    }
    std::istringstream in(l);
    std::size_t id, i1, i2;
    char alpha;
    in >> id >> i1 >> i2 >> alpha;
    words.push_back(blocks[id - 1].substr(i1, i2 - i1 + 1) + alpha);
  }
  const mawstream::Alphabet ab("ab", '#');
  EXPECT_EQ(mawstream::MawSet::from_words(words),
            mawstream::oracle_concat(std::vector<std::string>{"abaab", "bbaaab"}, 5, ab));
}

TEST_F(Cli, SplitAndFasta) {
  write(kWork / "g.fa", ">c1\nacgtac\nGTTA\n");
  const fs::path out = kWork / "out";
  ASSERT_EQ(cli("--input " + (kWork / "g.fa").string() + " --format fasta --ell 4 --split 2 --out " +
                out.string()),
            0);
  const auto want = mawstream::oracle_concat(std::vector<std::string>{"ACGTA", "CGTTA"}, 4,
                                             mawstream::Alphabet::dna());
  EXPECT_EQ(lines(slurp(out / "maws.step2.txt")), want.words());
}

TEST_F(Cli, ConfigErrorsExitOne) {
  const std::string in = " --input " + (kWork / "y1.txt").string();
  EXPECT_EQ(cli(in + " --alphabet custom:ab --ell 0"), 1);
  EXPECT_NE(slurp(kWork / "stderr").find("ell must be >= 1"), std::string::npos);
  EXPECT_EQ(cli(in + " --alphabet custom:ab --ell 3 --format fasta"), 1);
  EXPECT_NE(slurp(kWork / "stderr").find("MalformedFasta"), std::string::npos);
  EXPECT_EQ(cli(in + " --ell 3"), 1);  // 'a' is not DNA
  EXPECT_NE(slurp(kWork / "stderr").find("ByteOutsideAlphabet"), std::string::npos);
  EXPECT_EQ(cli(in + " " + (kWork / "y2.txt").string() + " --alphabet custom:ab --ell 3 --split 2"), 1);
  EXPECT_EQ(cli(in + " --alphabet custom:ab --ell 3 --split 9"), 1);
  EXPECT_EQ(cli(in + " --alphabet nope --ell 3"), 1);
  EXPECT_EQ(cli("--ell 3"), 1);
  EXPECT_EQ(cli("--input " + (kWork / "missing.txt").string() + " --ell 3"), 1);
}

}  // namespace
