// Copyright (c) 2026 The tst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "corpus.hpp"
#include "tst/cli.hpp"

namespace tst {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("tst_cli_" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

TEST(CliEncode, SentenceWithUnpaddedLeadingGroup) {
  const auto r = run({"encode", "--pad-leading", "false"}, "price 100400 usd\n1234567\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "price 100k 400 usd\n1m 234k 567\n");
  EXPECT_EQ(run({"encode"}, "pi is 3.141592653589793\n").out,
            "pi is 3 . 141p 592pp 653ppp 589pppp 793ppppp\n");
}

TEST(CliEncode, ModesAndGroupSize) {
  EXPECT_EQ(run({"encode", "--mode", "digit_marker", "--pad-leading", "false"}, "1234567\n").out,
            "1 m 2 3 4 k 5 6 7\n");
  EXPECT_EQ(run({"encode", "--mode", "marker"}, "-0.0045\n").out, "- 0 . 004 p 500 pp\n");
  EXPECT_EQ(run({"encode", "--group-size", "2"}, "12345\n").out, "01⟨E+4⟩ 23⟨E+2⟩ 45\n");
  EXPECT_EQ(run({"encode", "--preserve-precision"}, "0.10\n").out, "0 . 100p [T2]\n");
}

TEST(CliEncode, OverflowIsADataError) {
  const auto r = run({"encode"}, "ok 1\nbig 1000000000000000000 end\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "ok 1\nbig 1000000000000000000 end\n");
  EXPECT_NE(r.err.find("line 2: "), std::string::npos);
  EXPECT_NE(r.err.find("level_overflow"), std::string::npos);
}

TEST(CliDecode, TokensFormat) {
  EXPECT_EQ(run({"decode"}, "price 1m 234k 567 usd\n").out, "price 1234567 usd\n");
  EXPECT_EQ(run({"decode"}, "3 . 141p 592pp\n").out, "3.141592\n");
  EXPECT_EQ(run({"decode", "--mode", "digit_marker"}, "1 k 2 3 4\n").out, "1234\n");
}

TEST(CliDecode, LenientAcceptsShortGroups) {
  EXPECT_NE(run({"decode"}, "1m 4k 5\n").out, "1004005\n");
  EXPECT_EQ(run({"decode", "--lenient"}, "1m 4k 5\n").out, "1004005\n");
}

TEST(CliRoundTrip, JsonlRestoresTextAndValues) {
  std::mt19937_64 rng(31);
  const auto corpus = corpus::mixed_corpus(rng, 1000);
  for (const auto* mode : {"compound", "marker", "digit_marker"}) {
    const auto enc = run({"encode", "--format", "jsonl", "--mode", mode}, corpus);
    EXPECT_EQ(enc.code, 1);  // the corpus carries out-of-range numerals
    std::istringstream lines(enc.out);
    for (std::string l; std::getline(lines, l);) ASSERT_TRUE(nlohmann::json::accept(l)) << l;
    const auto dec = run({"decode", "--format", "jsonl", "--mode", mode}, enc.out);
    EXPECT_EQ(dec.code, 0) << dec.err;
    EXPECT_EQ(dec.out, corpus::expected_decode(corpus)) << mode;
  }
}

TEST(CliRoundTrip, TokensRestoreSimpleCorpus) {
  std::mt19937_64 rng(37);
  static const std::vector<std::string> words{"price", "usd", "total", "was", "items", "naïve"};
  std::string corpus;
  for (int l = 0; l < 500; ++l) {
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      if (i) corpus += ' ';
      // adjacent digit_marker numerals would merge, so words and numerals alternate
      corpus += i % 2 ? corpus::random_number(rng, true) : words[rng() % words.size()];
    }
    corpus += '\n';
  }
  for (const auto* mode : {"compound", "marker", "digit_marker"}) {
    const auto enc = run({"encode", "--mode", mode}, corpus);
    ASSERT_EQ(enc.code, 0) << enc.err;
    EXPECT_EQ(run({"decode", "--mode", mode}, enc.out).out, corpus::expected_decode(corpus)) << mode;
  }
}

TEST(CliStats, NineDigitNumber) {
  const auto r = run({"stats"}, "123456789\n");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["per_scheme"]["digit_level"]["total_tokens"], 9);
  EXPECT_EQ(j["per_scheme"]["tst_compound"]["total_tokens"], 3);
  EXPECT_EQ(j["per_scheme"]["tst_marker"]["total_tokens"], 5);
  EXPECT_EQ(j["per_scheme"]["comma_grouped"]["total_tokens"], 11);
  EXPECT_EQ(j["numbers_skipped"], 0);
  EXPECT_EQ(j["config"]["group_size"], 3);
}

TEST(CliStats, AgreesWithIndependentCounter) {
  std::mt19937_64 rng(41);
  std::string corpus;
  std::uint64_t numbers = 0, digit_level = 0, compound = 0;
  for (int l = 0; l < 2000; ++l) {
    corpus += "w";
    for (int i = 0; i < 3; ++i) {
      const auto s = corpus::random_number(rng, true);
      corpus += ' ' + s;
      ++numbers;
      std::size_t digits = 0, int_digits = 0, frac_digits = 0;
      bool in_frac = false;
      for (char c : s) {
        if (c == '.') in_frac = true;
        if (c >= '0' && c <= '9') {
          ++digits;
          (in_frac ? frac_digits : int_digits) += 1;
        }
      }
      const std::size_t extras = (in_frac ? 1 : 0) + (s[0] == '-' ? 1 : 0);
      digit_level += digits + extras;
      compound += (int_digits + 2) / 3 + (frac_digits + 2) / 3 + extras;
    }
    corpus += '\n';
  }
  const auto j = nlohmann::json::parse(run({"stats"}, corpus).out);
  EXPECT_EQ(j["per_scheme"]["digit_level"]["numbers_seen"], numbers);
  EXPECT_EQ(j["per_scheme"]["digit_level"]["total_tokens"], digit_level);
  EXPECT_EQ(j["per_scheme"]["tst_compound"]["total_tokens"], compound);
  EXPECT_EQ(j["per_scheme"]["tst_digit_marker"]["numbers_seen"], numbers);
}

TEST(CliValidate, ReportsRuleAndIndex) {
  const auto r = run({"validate"}, "100k 400\n\n100k 400k\nzzz\n");
  EXPECT_EQ(r.code, 1);
  std::istringstream lines(r.out);
  std::vector<std::string> got;
  for (std::string l; std::getline(lines, l);) got.push_back(l);
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0], "1\tok");
  EXPECT_EQ(got[1].rfind("3\tinteger_levels\t1\t", 0), 0u) << got[1];
  EXPECT_EQ(got[2].rfind("4\tunknown_token\t0\t", 0), 0u) << got[2];
  EXPECT_EQ(run({"validate"}, "1m 234k 567\n").code, 1);
  EXPECT_EQ(run({"validate", "--pad-leading", "false"}, "1m 234k 567\n").code, 0);
}

TEST(CliVocab, SubsetAndFormats) {
  const auto r = run({"vocab", "--mode", "marker", "--only", "marker,decimal_point,sign"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, ".\n-\n+\nk\nm\nb\nt\nq\np\npp\nppp\npppp\nppppp\n");
  const auto j = nlohmann::json::parse(run({"vocab", "--format", "json"}).out);
  EXPECT_EQ(j.size(), 11003u);
  EXPECT_EQ(run({"vocab", "--only", "bogus"}).code, 2);
  const auto unit = run({"vocab", "--group-size", "1", "--max-int-levels", "32", "--max-frac-depth", "0"});
  EXPECT_EQ(std::count(unit.out.begin(), unit.out.end(), '\n'), 333);
}

TEST(CliUsage, ExitCodeTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"encode", "--bogus"}).code, 2);
  EXPECT_EQ(run({"encode", "--mode", "bogus"}).code, 2);
  EXPECT_EQ(run({"encode", "--group-size", "4", "--marker-style", "triadic_human"}).code, 2);
  EXPECT_EQ(run({"encode", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"encode", "-i", "/nonexistent/input"}).code, 2);
  EXPECT_EQ(run({"encode", "-j", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliConfig, FileWithFlagOverride) {
  TempDir dir;
  const auto cfg = dir.write("cfg.json", R"({"group_size": 2, "mode": "marker"})");
  EXPECT_EQ(run({"encode", "--config", cfg}, "12345\n").out, "01 ⟨E+4⟩ 23 ⟨E+2⟩ 45\n");
  EXPECT_EQ(run({"encode", "--config", cfg, "--mode", "compound"}, "12345\n").out, "01⟨E+4⟩ 23⟨E+2⟩ 45\n");
  const auto bad = dir.write("bad.json", R"({"group_sise": 2})");
  EXPECT_EQ(run({"encode", "--config", bad}, "1\n").code, 2);
  const auto loc = dir.write("swiss.json", R"({"name": "swiss", "group_pattern": [3], "separator": "'", "decimal_mark": "."})");
  EXPECT_EQ(run({"encode", "--locale", loc}, "1'234'567\n").out, "001m 234k 567\n");
  EXPECT_EQ(run({"encode", "--locale", "indian"}, "12,34,567\n").out, "001m 234k 567\n");
}

TEST(CliIo, InputAndOutputFiles) {
  TempDir dir;
  const auto in = dir.write("in.txt", "a 1000\nb 2.5\n");
  const auto out = dir.file("out.txt");
  const auto r = run({"encode", "-i", in, "-o", out});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(slurp(out), "a 001k 0\nb 2 . 500p\n");
}

TEST(CliParallel, WorkerCountDoesNotChangeOutput) {
  std::mt19937_64 rng(43);
  const auto corpus = corpus::mixed_corpus(rng, 40000);
  for (const std::vector<std::string>& cmd : std::vector<std::vector<std::string>>{
           {"encode"}, {"encode", "--format", "jsonl"}, {"stats"}, {"validate"}}) {
    auto one = cmd, many = cmd;
    one.insert(one.end(), {"-j", "1"});
    many.insert(many.end(), {"-j", "4"});
    const auto a = run(one, corpus), b = run(many, corpus), c = run(many, corpus);
    EXPECT_EQ(a.out, b.out) << cmd[0];
    EXPECT_EQ(a.err, b.err) << cmd[0];
    EXPECT_EQ(b.out, c.out) << cmd[0];
    EXPECT_EQ(a.code, b.code);
  }
}

}  // namespace
}  // namespace tst
