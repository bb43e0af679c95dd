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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "tst/codec.hpp"
#include "tst/config.hpp"
#include "tst/json_io.hpp"
#include "tst/scanner.hpp"

namespace tst {

enum class Scheme { tst_compound, tst_marker, tst_digit_marker, digit_level, comma_grouped };

inline constexpr std::array<Scheme, 5> kSchemes{Scheme::tst_compound, Scheme::tst_marker,
                                                Scheme::tst_digit_marker, Scheme::digit_level,
                                                Scheme::comma_grouped};

constexpr std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::tst_compound: return "tst_compound";
    case Scheme::tst_marker: return "tst_marker";
    case Scheme::tst_digit_marker: return "tst_digit_marker";
    case Scheme::digit_level: return "digit_level";
    case Scheme::comma_grouped: return "comma_grouped";
  }
  return "";
}

struct SchemeStats {
  std::uint64_t total_tokens = 0;
  std::uint64_t numbers_seen = 0;

  double mean_tokens_per_number() const {
    return numbers_seen == 0 ? 0.0
                             : static_cast<double>(total_tokens) / static_cast<double>(numbers_seen);
  }
};

/// Token counts per scheme. A numeral that any TST mode cannot encode is
/// counted in numbers_skipped and in no scheme, so numbers_seen agrees
/// across schemes.
struct StatsReport {
  std::array<SchemeStats, kSchemes.size()> per_scheme{};
  std::uint64_t numbers_skipped = 0;

  SchemeStats& operator[](Scheme s) { return per_scheme[static_cast<std::size_t>(s)]; }
  const SchemeStats& operator[](Scheme s) const { return per_scheme[static_cast<std::size_t>(s)]; }

  void merge(const StatsReport& other) {
    for (std::size_t i = 0; i < per_scheme.size(); ++i) {
      per_scheme[i].total_tokens += other.per_scheme[i].total_tokens;
      per_scheme[i].numbers_seen += other.per_scheme[i].numbers_seen;
    }
    numbers_skipped += other.numbers_skipped;
  }
};

/// Plain digits, one token each, plus decimal point and sign.
inline std::uint64_t digit_level_length(const NumericLiteral& lit) {
  return lit.int_digits.size() + lit.frac_digits.size() + (lit.frac_digits.empty() ? 0 : 1) +
         (lit.sign == Sign::none ? 0 : 1);
}

/// Digit-level plus one comma token per three integer digits.
inline std::uint64_t comma_grouped_length(const NumericLiteral& lit) {
  return digit_level_length(lit) + (lit.int_digits.size() - 1) / 3;
}

inline void accumulate(StatsReport& report, const NumericLiteral& lit, const TstConfig& config) {
  std::array<std::uint64_t, 3> tst_lengths{};
  constexpr std::array<Mode, 3> modes{Mode::compound, Mode::marker, Mode::digit_marker};
  try {
    for (std::size_t m = 0; m < modes.size(); ++m) {
      TstConfig c = config;
      c.mode = modes[m];
      tst_lengths[m] = encode(lit, c).tokens.size();
    }
  } catch (const Error&) {
    ++report.numbers_skipped;
    return;
  }
  auto add = [&](Scheme s, std::uint64_t n) {
    report[s].total_tokens += n;
    ++report[s].numbers_seen;
  };
  add(Scheme::tst_compound, tst_lengths[0]);
  add(Scheme::tst_marker, tst_lengths[1]);
  add(Scheme::tst_digit_marker, tst_lengths[2]);
  add(Scheme::digit_level, digit_level_length(lit));
  add(Scheme::comma_grouped, comma_grouped_length(lit));
}

inline StatsReport stats_for_line(std::string_view line, const TstConfig& config) {
  StatsReport report;
  for (const auto& seg : scan(line, scan_options(config))) {
    if (seg.literal) accumulate(report, *seg.literal, config);
  }
  return report;
}

inline json to_json(const StatsReport& report) {
  json j;
  json schemes;
  for (auto s : kSchemes) {
    const auto& st = report[s];
    schemes[std::string(to_string(s))] = {{"total_tokens", st.total_tokens},
                                          {"numbers_seen", st.numbers_seen},
                                          {"mean_tokens_per_number", st.mean_tokens_per_number()}};
  }
  j["per_scheme"] = std::move(schemes);
  j["numbers_skipped"] = report.numbers_skipped;
  return j;
}

}  // namespace tst
