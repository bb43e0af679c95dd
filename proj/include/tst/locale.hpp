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
#include <vector>

#include "tst/error.hpp"

namespace tst {

/// Digit-grouping convention used when reading separated numerals.
/// group_pattern lists group sizes from the right; its last entry repeats
/// (western {3}, indian {3, 2}, east_asian {4}).
struct LocaleRule {
  std::string name = "western";
  std::vector<int> group_pattern{3};
  std::u32string separators = U",";
  char32_t decimal_mark = U'.';

  static LocaleRule western() { return {}; }
  static LocaleRule indian() { return {"indian", {3, 2}, U",", U'.'}; }
  static LocaleRule east_asian() { return {"east_asian", {4}, U",", U'.'}; }

  /// Expected size of the i-th separated group counted from the right.
  int group_size_at(std::size_t index_from_right) const {
    if (index_from_right < group_pattern.size()) return group_pattern[index_from_right];
    return group_pattern.back();
  }

  bool is_separator(char32_t c) const noexcept {
    return separators.find(c) != std::u32string::npos;
  }

  void validate() const {
    if (group_pattern.empty()) {
      throw Error(ErrorCode::invalid_config, "locale '" + name + "': empty group_pattern");
    }
    for (int g : group_pattern) {
      if (g <= 0) {
        throw Error(ErrorCode::invalid_config,
                    "locale '" + name + "': group sizes must be positive");
      }
    }
    if (separators.empty()) {
      throw Error(ErrorCode::invalid_config, "locale '" + name + "': no separator");
    }
    if (is_separator(decimal_mark)) {
      throw Error(ErrorCode::invalid_config,
                  "locale '" + name + "': decimal mark is also a separator");
    }
    for (char32_t c : separators) {
      if (c >= U'0' && c <= U'9') {
        throw Error(ErrorCode::invalid_config, "locale '" + name + "': digit separator");
      }
    }
    if (decimal_mark >= U'0' && decimal_mark <= U'9') {
      throw Error(ErrorCode::invalid_config, "locale '" + name + "': digit decimal mark");
    }
  }

  friend bool operator==(const LocaleRule&, const LocaleRule&) = default;
};

inline LocaleRule locale_by_name(std::string_view name) {
  if (name == "western") return LocaleRule::western();
  if (name == "indian") return LocaleRule::indian();
  if (name == "east_asian") return LocaleRule::east_asian();
  throw Error(ErrorCode::invalid_config, "unknown locale '" + std::string(name) + "'");
}

/// Inserts `separator` into a bare digit string following the rule's
/// group pattern, e.g. "1234567" -> "12,34,567" for indian.
inline std::string group_with_separators(std::string_view digits, const LocaleRule& rule,
                                         std::string_view separator) {
  std::vector<std::string_view> groups;
  std::size_t end = digits.size();
  for (std::size_t i = 0; end > 0; ++i) {
    const auto size = static_cast<std::size_t>(rule.group_size_at(i));
    const std::size_t start = end > size ? end - size : 0;
    groups.push_back(digits.substr(start, end - start));
    end = start;
  }
  std::string out;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    if (!out.empty()) out.append(separator);
    out.append(*it);
  }
  return out;
}

}  // namespace tst
