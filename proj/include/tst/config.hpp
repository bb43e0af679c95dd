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

#include <string>
#include <string_view>

#include "tst/error.hpp"
#include "tst/locale.hpp"

namespace tst {

/// How groups and magnitude markers are laid out in the token stream.
enum class Mode {
  compound,      // "234k": group and marker fused, one token per group
  marker,        // "234" "k": marker as a separate token
  digit_marker,  // "2" "3" "4" "k": one token per digit plus markers
};

enum class MarkerStyle {
  triadic_human,  // k m b t q / p pp ppp ...; group size 3 only
  systematic,     // reserved exponent markers, any group size
};

constexpr std::string_view to_string(Mode m) noexcept {
  switch (m) {
    case Mode::compound: return "compound";
    case Mode::marker: return "marker";
    case Mode::digit_marker: return "digit_marker";
  }
  return "compound";
}

constexpr std::string_view to_string(MarkerStyle s) noexcept {
  return s == MarkerStyle::triadic_human ? "triadic_human" : "systematic";
}

inline Mode parse_mode(std::string_view s) {
  if (s == "compound") return Mode::compound;
  if (s == "marker") return Mode::marker;
  if (s == "digit_marker") return Mode::digit_marker;
  throw Error(ErrorCode::invalid_config, "unknown mode '" + std::string(s) + "'");
}

inline MarkerStyle parse_marker_style(std::string_view s) {
  if (s == "triadic_human") return MarkerStyle::triadic_human;
  if (s == "systematic") return MarkerStyle::systematic;
  throw Error(ErrorCode::invalid_config, "unknown marker style '" + std::string(s) + "'");
}

inline constexpr int kMaxGroupSize = 9;
inline constexpr int kMaxLevels = 4096;
inline constexpr int kHumanIntegerMarkers = 5;

struct TstConfig {
  int group_size = 3;
  Mode mode = Mode::compound;
  MarkerStyle marker_style = MarkerStyle::triadic_human;
  int max_int_levels = 5;
  int max_frac_depth = 5;
  bool pad_leading_group = true;
  bool preserve_precision = false;
  bool normalize_digits = false;
  LocaleRule locale = LocaleRule::western();

  void validate() const {
    if (group_size < 1 || group_size > kMaxGroupSize) {
      throw Error(ErrorCode::invalid_config,
                  "group_size must be in [1, " + std::to_string(kMaxGroupSize) + "], got " +
                      std::to_string(group_size));
    }
    if (max_int_levels < 0 || max_int_levels > kMaxLevels) {
      throw Error(ErrorCode::invalid_config,
                  "max_int_levels out of range: " + std::to_string(max_int_levels));
    }
    if (max_frac_depth < 0 || max_frac_depth > kMaxLevels) {
      throw Error(ErrorCode::invalid_config,
                  "max_frac_depth out of range: " + std::to_string(max_frac_depth));
    }
    if (marker_style == MarkerStyle::triadic_human) {
      if (group_size != 3) {
        throw Error(ErrorCode::invalid_config,
                    "triadic_human markers require group_size 3");
      }
      if (max_int_levels > kHumanIntegerMarkers) {
        throw Error(ErrorCode::invalid_config,
                    "triadic_human markers cover at most 5 integer levels");
      }
    }
    locale.validate();
  }

  friend bool operator==(const TstConfig&, const TstConfig&) = default;
};

/// Stable textual key of every field that shapes the token inventory.
inline std::string inventory_key(const TstConfig& c) {
  std::string key = "group_size=" + std::to_string(c.group_size);
  key += ";mode=" + std::string(to_string(c.mode));
  key += ";marker_style=" + std::string(to_string(c.marker_style));
  key += ";max_int_levels=" + std::to_string(c.max_int_levels);
  key += ";max_frac_depth=" + std::to_string(c.max_frac_depth);
  key += ";pad_leading_group=" + std::string(c.pad_leading_group ? "1" : "0");
  key += ";preserve_precision=" + std::string(c.preserve_precision ? "1" : "0");
  return key;
}

}  // namespace tst
