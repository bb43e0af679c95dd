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


#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tst/codec.hpp"
#include "tst/config.hpp"
#include "tst/error.hpp"
#include "tst/json_io.hpp"
#include "tst/parallel.hpp"
#include "tst/pipeline.hpp"
#include "tst/stats.hpp"
#include "tst/vocab.hpp"

namespace tst::cli {

enum ExitCode : int { kSuccess = 0, kDataError = 1, kUsageError = 2 };

inline constexpr std::size_t kBatchLines = 16384;

namespace detail {

struct ConfigFlags {
  std::string config_file;
  int group_size = 3;
  std::string mode;
  std::string marker_style;
  int max_int_levels = 5;
  int max_frac_depth = 5;
  bool pad_leading = true;
  bool preserve_precision = false;
  bool normalize_digits = false;
  std::string locale;
  std::vector<CLI::Option*> options;

  void attach(CLI::App* app) {
    auto add = [&](CLI::Option* o) { options.push_back(o); };
    app->add_option("--config", config_file, "JSON file with TstConfig fields")->check(CLI::ExistingFile);
    add(app->add_option("--group-size", group_size, "digits per group (N)"));
    add(app->add_option("--mode", mode, "compound | marker | digit_marker"));
    add(app->add_option("--marker-style", marker_style, "triadic_human | systematic"));
    add(app->add_option("--max-int-levels", max_int_levels, "highest suffixed integer level"));
    add(app->add_option("--max-frac-depth", max_frac_depth, "deepest fraction group"));
    add(app->add_option("--pad-leading", pad_leading, "zero-pad the leading suffixed group (true|false)"));
    add(app->add_flag("--preserve-precision{true}", preserve_precision, "emit [Tn] terminators"));
    add(app->add_flag("--normalize-digits{true}", normalize_digits, "accept any Unicode decimal digit"));
    add(app->add_option("--locale", locale, "western | indian | east_asian | path to locale JSON"));
  }

  /// File first, then any flag given on the command line.
  TstConfig resolve() const {
    TstConfig c;
    bool style_set = false;
    if (!config_file.empty()) {
      const auto j = read_json_file(config_file);
      c = config_from_json(j, c);
      style_set = j.contains("marker_style");
    }
    auto given = [&](std::size_t i) { return options[i]->count() > 0; };
    if (given(0)) c.group_size = group_size;
    if (given(1)) c.mode = parse_mode(mode);
    if (given(2)) {
      c.marker_style = parse_marker_style(marker_style);
      style_set = true;
    }
    if (given(3)) c.max_int_levels = max_int_levels;
    if (given(4)) c.max_frac_depth = max_frac_depth;
    if (given(5)) c.pad_leading_group = pad_leading;
    if (given(6)) c.preserve_precision = preserve_precision;
    if (given(7)) c.normalize_digits = normalize_digits;
    if (given(8)) {
      c.locale = locale.ends_with(".json") ? locale_from_json(read_json_file(locale))
                                           : locale_by_name(locale);
    }
    // human suffixes exist only for triads
    if (!style_set && c.group_size != 3) c.marker_style = MarkerStyle::systematic;
    c.validate();
    return c;
  }
};

struct IoFlags {
  std::string input;
  std::string output;
  unsigned workers = 1;

  void attach(CLI::App* app, bool with_workers) {
    app->add_option("-i,--input", input, "input file (default stdin)")->check(CLI::ExistingFile);
    app->add_option("-o,--output", output, "output file (default stdout)");
    if (with_workers) {
      app->add_option("-j,--workers", workers, "worker threads")->check(CLI::Range(1u, 1024u));
    }
  }
};

class Streams {
 public:
  Streams(const IoFlags& io, std::istream& in, std::ostream& out) : in_(&in), out_(&out) {
    if (!io.input.empty()) {
      file_in_ = std::make_unique<std::ifstream>(io.input, std::ios::binary);
      if (!*file_in_) throw Error(ErrorCode::io_error, "cannot open '" + io.input + "'");
      in_ = file_in_.get();
    }
    if (!io.output.empty()) {
      file_out_ = std::make_unique<std::ofstream>(io.output, std::ios::binary);
      if (!*file_out_) throw Error(ErrorCode::io_error, "cannot create '" + io.output + "'");
      out_ = file_out_.get();
    }
  }

  std::istream& in() { return *in_; }
  std::ostream& out() { return *out_; }

 private:
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
  std::istream* in_;
  std::ostream* out_;
};

/// Reads the input in batches, maps each line on the worker pool and hands
/// results back in input order.
template <typename Result, typename MapFn, typename SinkFn>
void for_each_line(std::istream& in, unsigned workers, MapFn map, SinkFn sink) {
  std::vector<std::string> lines;
  std::vector<Result> results;
  std::size_t line_no = 0;
  for (;;) {
    lines.clear();
    std::string line;
    while (lines.size() < kBatchLines && std::getline(in, line)) lines.push_back(std::move(line));
    if (lines.empty()) break;
    results.assign(lines.size(), Result{});
    parallel_for(lines.size(), workers,
                 [&](std::size_t i) { results[i] = map(lines[i], line_no + i + 1); });
    for (std::size_t i = 0; i < lines.size(); ++i) sink(results[i], line_no + i + 1);
    line_no += lines.size();
  }
}

}  // namespace detail

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Magnitude-annotated number tokenizer"};
  app.name("tst");
  app.require_subcommand(1);

  std::array<detail::ConfigFlags, 5> cfgs;
  detail::IoFlags io;
  std::string format;
  std::string only_kinds;
  bool lenient = false;

  auto* encode_cmd = app.add_subcommand("encode", "rewrite numerals in text as token sequences");
  auto* decode_cmd = app.add_subcommand("decode", "restore numerals from token streams");
  auto* vocab_cmd = app.add_subcommand("vocab", "write the token inventory for a config");
  auto* validate_cmd = app.add_subcommand("validate", "check one token sequence per line");
  auto* stats_cmd = app.add_subcommand("stats", "token counts per scheme as JSON");
  const std::array<CLI::App*, 5> commands{encode_cmd, decode_cmd, vocab_cmd, validate_cmd, stats_cmd};
  for (std::size_t i = 0; i < commands.size(); ++i) {
    cfgs[i].attach(commands[i]);
    io.attach(commands[i], commands[i] != vocab_cmd);
  }
  for (auto* cmd : {encode_cmd, decode_cmd}) {
    cmd->add_option("--format", format, "tokens | jsonl")->check(CLI::IsMember({"tokens", "jsonl"}));
  }
  decode_cmd->add_flag("--lenient", lenient, "accept unpadded groups");
  vocab_cmd->add_option("--format", format, "lines | json")->check(CLI::IsMember({"lines", "json"}));
  vocab_cmd->add_option("--only", only_kinds,
                        "comma-separated kinds to keep (e.g. marker,decimal_point,sign)");

  std::vector<std::string> argv_store{"tst"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  TstConfig config;
  try {
    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (commands[i]->parsed()) config = cfgs[i].resolve();
    }
  } catch (const Error& e) {
    err << "tst: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    detail::Streams streams(io, in, out);
    auto& os = streams.out();
    bool data_errors = false;

    if (encode_cmd->parsed()) {
      const auto fmt = parse_stream_format(format.empty() ? "tokens" : format);
      detail::for_each_line<EncodedLine>(
          streams.in(), io.workers,
          [&](const std::string& line, std::size_t n) { return encode_line(line, config, fmt, n); },
          [&](const EncodedLine& r, std::size_t n) {
            os << r.text << '\n';
            for (const auto& e : r.errors) {
              data_errors = true;
              err << "line " << n << ": " << e.message << '\n';
            }
          });
    } else if (decode_cmd->parsed()) {
      const auto fmt = parse_stream_format(format.empty() ? "tokens" : format);
      const auto mode = lenient ? DecodeMode::lenient : DecodeMode::strict;
      detail::for_each_line<DecodedLine>(
          streams.in(), io.workers,
          [&](const std::string& line, std::size_t) {
            if (fmt == StreamFormat::tokens) return decode_tokens_line(line, config, mode);
            try {
              return decode_jsonl_line(line, config, mode);
            } catch (const std::exception& e) {
              return DecodedLine{"", {e.what()}};
            }
          },
          [&](const DecodedLine& r, std::size_t n) {
            os << r.text << '\n';
            for (const auto& e : r.errors) {
              data_errors = true;
              err << "line " << n << ": " << e << '\n';
            }
          });
    } else if (vocab_cmd->parsed()) {
      auto vocab = build(config);
      if (!only_kinds.empty()) {
        std::vector<TokenKind> kinds;
        std::stringstream ss(only_kinds);
        for (std::string k; std::getline(ss, k, ',');) {
          bool found = false;
          for (auto kind : {TokenKind::group, TokenKind::group_with_marker, TokenKind::marker,
                            TokenKind::digit, TokenKind::decimal_point, TokenKind::sign,
                            TokenKind::terminator}) {
            if (to_string(kind) == k) {
              kinds.push_back(kind);
              found = true;
            }
          }
          if (!found) {
            err << "tst: unknown token kind '" << k << "'\n";
            return kUsageError;
          }
        }
        vocab = vocab.subset(kinds);
      }
      export_vocabulary(vocab, parse_export_format(format.empty() ? "lines" : format), os);
    } else if (validate_cmd->parsed()) {
      struct Checked {
        bool blank = true;
        ValidationReport report;
      };
      detail::for_each_line<Checked>(
          streams.in(), io.workers,
          [&](const std::string& line, std::size_t) {
            std::vector<std::string> tokens;
            std::istringstream ss(line);
            for (std::string t; ss >> t;) tokens.push_back(std::move(t));
            if (tokens.empty()) return Checked{};
            return Checked{false, validate(std::span<const std::string>(tokens), config)};
          },
          [&](const Checked& c, std::size_t n) {
            if (c.blank) return;
            if (c.report.ok) {
              os << n << "\tok\n";
              return;
            }
            data_errors = true;
            os << n << '\t' << to_string(*c.report.rule) << '\t' << c.report.token_index << '\t'
               << c.report.message << '\n';
          });
    } else if (stats_cmd->parsed()) {
      StatsReport total;
      detail::for_each_line<StatsReport>(
          streams.in(), io.workers,
          [&](const std::string& line, std::size_t) { return stats_for_line(line, config); },
          [&](const StatsReport& r, std::size_t) { total.merge(r); });
      auto j = to_json(total);
      j["config"] = to_json(config);
      os << j.dump(2) << '\n';
    }
    os.flush();
    if (!os) throw Error(ErrorCode::io_error, "write failed");
    return data_errors ? kDataError : kSuccess;
  } catch (const Error& e) {
    err << "tst: " << e.what() << '\n';
    return e.code() == ErrorCode::invalid_config ? kUsageError : kDataError;
  }
}

}  // namespace tst::cli
