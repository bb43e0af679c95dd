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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tst/codec.hpp"
#include "tst/config.hpp"
#include "tst/error.hpp"
#include "tst/json_io.hpp"
#include "tst/scanner.hpp"

namespace tst {

/// A numeral that could not be encoded; the line keeps its surface.
struct LineError {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string surface;
  ErrorCode code = ErrorCode::level_overflow;
  std::string message;
};

struct EncodedLine {
  std::string text;  // tokens format or one JSONL record, without newline
  std::vector<LineError> errors;
};

enum class StreamFormat { tokens, jsonl };

inline StreamFormat parse_stream_format(std::string_view s) {
  if (s == "tokens") return StreamFormat::tokens;
  if (s == "jsonl") return StreamFormat::jsonl;
  throw Error(ErrorCode::invalid_config, "unknown stream format '" + std::string(s) + "'");
}

namespace detail {

inline bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

inline std::string dump_line(const json& j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace detail

/// Encodes every numeral in one line. Tokens format joins a numeral's tokens
/// with single spaces and separates them from glued text by one space;
/// JSONL keeps spans and text verbatim.
inline EncodedLine encode_line(std::string_view line, const TstConfig& config, StreamFormat format,
                               std::size_t line_no = 0) {
  EncodedLine result;
  const auto segments = scan(line, scan_options(config));
  json record;
  json segs = json::array();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& seg = segments[i];
    const auto raw = line.substr(seg.start, seg.end - seg.start);
    if (seg.kind == SegmentKind::text) {
      if (format == StreamFormat::tokens) {
        result.text += raw;
      } else {
        segs.push_back({{"kind", "text"}, {"span", {seg.start, seg.end}}, {"text", raw}});
      }
      continue;
    }
    std::vector<std::string> tokens;
    std::optional<LineError> failure;
    try {
      tokens = encode(*seg.literal, config).texts();
    } catch (const Error& e) {
      failure = LineError{seg.start, seg.end, std::string(raw), e.code(), e.what()};
    }
    if (format == StreamFormat::jsonl) {
      json s{{"kind", "number"}, {"span", {seg.start, seg.end}}, {"surface", raw}};
      if (failure) {
        s["error"] = {{"code", to_string(failure->code)}, {"message", failure->message}};
      } else {
        s["tokens"] = tokens;
      }
      segs.push_back(std::move(s));
    } else {
      if (!result.text.empty() && !detail::is_space(result.text.back())) result.text.push_back(' ');
      if (failure) {
        result.text += raw;
      } else {
        for (std::size_t t = 0; t < tokens.size(); ++t) {
          if (t) result.text.push_back(' ');
          result.text += tokens[t];
        }
      }
      const bool glued_after = i + 1 < segments.size() && !detail::is_space(line[seg.end]);
      if (glued_after) result.text.push_back(' ');
    }
    if (failure) result.errors.push_back(std::move(*failure));
  }
  if (format == StreamFormat::jsonl) {
    record["line"] = line_no;
    record["segments"] = std::move(segs);
    result.text = detail::dump_line(record);
  }
  return result;
}

struct DecodedLine {
  std::string text;
  std::vector<std::string> errors;
};

/// Longest token count a single numeral can occupy under `config`.
inline std::size_t max_numeral_tokens(const TstConfig& config) {
  const auto n = static_cast<std::size_t>(config.group_size);
  const auto levels = static_cast<std::size_t>(config.max_int_levels) + 1;
  const auto depths = static_cast<std::size_t>(config.max_frac_depth);
  return 3 + (levels + depths) * (n + 1);
}

/// Inverse of the tokens format. Maximal runs of vocabulary-shaped words
/// are split greedily into the longest valid numerals; all other bytes are
/// copied through. Text words that collide with token surfaces (a bare "k"
/// in marker mode, a lone "-") can be absorbed; JSONL has no such ambiguity.
inline DecodedLine decode_tokens_line(std::string_view line, const TstConfig& config,
                                      DecodeMode mode = DecodeMode::strict) {
  struct Word {
    std::size_t start, end;
    bool lexable;
  };
  std::vector<Word> words;
  for (std::size_t pos = 0; pos < line.size();) {
    if (detail::is_space(line[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && !detail::is_space(line[end])) ++end;
    words.push_back({pos, end, lex_token(line.substr(pos, end - pos), config).has_value()});
    pos = end;
  }

  DecodedLine out;
  std::size_t copied = 0;
  const std::size_t cap = max_numeral_tokens(config);
  std::vector<std::string> candidate;
  for (std::size_t i = 0; i < words.size();) {
    if (!words[i].lexable) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < words.size() && words[run_end].lexable && run_end - i < cap) ++run_end;
    std::optional<DecodeResult> best;
    std::size_t best_end = i;
    for (std::size_t j = run_end; j > i && !best; --j) {
      candidate.clear();
      for (std::size_t w = i; w < j; ++w) {
        candidate.emplace_back(line.substr(words[w].start, words[w].end - words[w].start));
      }
      try {
        best = decode(std::span<const std::string>(candidate), config, mode);
        best_end = j;
      } catch (const Error&) {
      }
    }
    if (!best) {
      ++i;
      continue;
    }
    out.text += line.substr(copied, words[i].start - copied);
    out.text += best->literal.surface;
    copied = words[best_end - 1].end;
    i = best_end;
  }
  out.text += line.substr(copied);
  return out;
}

/// Inverse of one JSONL record: text verbatim, numerals canonical, failed
/// numerals as their original surface.
inline DecodedLine decode_jsonl_line(std::string_view line, const TstConfig& config,
                                     DecodeMode mode = DecodeMode::strict) {
  DecodedLine out;
  json record;
  try {
    record = json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::malformed_literal, std::string("bad JSONL record: ") + e.what());
  }
  const auto& segs = record.at("segments");
  for (const auto& s : segs) {
    const auto kind = s.at("kind").get<std::string>();
    if (kind == "text") {
      out.text += s.at("text").get<std::string>();
      continue;
    }
    if (!s.contains("tokens")) {
      out.text += s.at("surface").get<std::string>();
      continue;
    }
    const auto tokens = s.at("tokens").get<std::vector<std::string>>();
    try {
      out.text += decode(std::span<const std::string>(tokens), config, mode).literal.surface;
    } catch (const Error& e) {
      out.errors.push_back(e.what());
      out.text += s.value("surface", std::string());
    }
  }
  return out;
}

}  // namespace tst
