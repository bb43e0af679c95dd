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

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tst/codec.hpp"
#include "tst/config.hpp"
#include "tst/error.hpp"
#include "tst/locale.hpp"
#include "tst/scanner.hpp"
#include "tst/unicode.hpp"

namespace tst {

using json = nlohmann::ordered_json;

namespace detail {

inline std::u32string decode_chars(std::string_view s) {
  std::u32string out;
  for (std::size_t pos = 0; pos < s.size();) {
    const auto ch = unicode::decode_at(s, pos);
    if (!ch.valid) throw Error(ErrorCode::invalid_config, "invalid UTF-8 in locale field");
    out.push_back(ch.value);
    pos += ch.length;
  }
  return out;
}

inline std::string encode_chars(const std::u32string& s) {
  std::string out;
  for (char32_t c : s) out += unicode::encode(c);
  return out;
}

template <typename T>
T field(const json& j, const char* name) {
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_config, std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace detail

inline json to_json(const LocaleRule& rule) {
  json j;
  j["name"] = rule.name;
  j["group_pattern"] = rule.group_pattern;
  j["separator"] = detail::encode_chars(rule.separators);
  j["decimal_mark"] = unicode::encode(rule.decimal_mark);
  return j;
}

/// Accepts either a built-in locale name or an object with the LocaleRule
/// fields (name, group_pattern, separator, decimal_mark).
inline LocaleRule locale_from_json(const json& j) {
  if (j.is_string()) return locale_by_name(j.get<std::string>());
  if (!j.is_object()) throw Error(ErrorCode::invalid_config, "locale must be a name or an object");
  LocaleRule rule;
  for (const auto& [key, _] : j.items()) {
    if (key != "name" && key != "group_pattern" && key != "separator" && key != "decimal_mark") {
      throw Error(ErrorCode::invalid_config, "unknown locale field '" + key + "'");
    }
  }
  if (j.contains("name")) rule.name = detail::field<std::string>(j, "name");
  if (j.contains("group_pattern")) rule.group_pattern = detail::field<std::vector<int>>(j, "group_pattern");
  if (j.contains("separator")) rule.separators = detail::decode_chars(detail::field<std::string>(j, "separator"));
  if (j.contains("decimal_mark")) {
    const auto mark = detail::decode_chars(detail::field<std::string>(j, "decimal_mark"));
    if (mark.size() != 1) throw Error(ErrorCode::invalid_config, "decimal_mark must be one character");
    rule.decimal_mark = mark[0];
  }
  rule.validate();
  return rule;
}

inline json to_json(const TstConfig& c) {
  json j;
  j["group_size"] = c.group_size;
  j["mode"] = to_string(c.mode);
  j["marker_style"] = to_string(c.marker_style);
  j["max_int_levels"] = c.max_int_levels;
  j["max_frac_depth"] = c.max_frac_depth;
  j["pad_leading_group"] = c.pad_leading_group;
  j["preserve_precision"] = c.preserve_precision;
  j["normalize_digits"] = c.normalize_digits;
  j["locale"] = to_json(c.locale);
  return j;
}

/// Overlays the fields present in `j` onto `base`. Unknown fields are errors.
inline TstConfig config_from_json(const json& j, TstConfig base = {}) {
  if (!j.is_object()) throw Error(ErrorCode::invalid_config, "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "group_size") {
      base.group_size = detail::field<int>(j, "group_size");
    } else if (key == "mode") {
      base.mode = parse_mode(detail::field<std::string>(j, "mode"));
    } else if (key == "marker_style") {
      base.marker_style = parse_marker_style(detail::field<std::string>(j, "marker_style"));
    } else if (key == "max_int_levels") {
      base.max_int_levels = detail::field<int>(j, "max_int_levels");
    } else if (key == "max_frac_depth") {
      base.max_frac_depth = detail::field<int>(j, "max_frac_depth");
    } else if (key == "pad_leading_group") {
      base.pad_leading_group = detail::field<bool>(j, "pad_leading_group");
    } else if (key == "preserve_precision") {
      base.preserve_precision = detail::field<bool>(j, "preserve_precision");
    } else if (key == "normalize_digits") {
      base.normalize_digits = detail::field<bool>(j, "normalize_digits");
    } else if (key == "locale") {
      base.locale = locale_from_json(value);
    } else {
      throw Error(ErrorCode::invalid_config, "unknown config field '" + key + "'");
    }
  }
  return base;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_config, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::invalid_config, "'" + path + "': " + e.what());
  }
}

inline json to_json(const NumericLiteral& lit) {
  json j;
  j["sign"] = to_string(lit.sign);
  j["int_digits"] = lit.int_digits;
  j["frac_digits"] = lit.frac_digits;
  j["surface"] = lit.surface;
  return j;
}

inline json to_json(const ScanSegment& seg) {
  json j;
  j["kind"] = seg.kind == SegmentKind::number ? "number" : "text";
  j["span"] = {seg.start, seg.end};
  if (seg.literal) j["literal"] = to_json(*seg.literal);
  return j;
}

inline json to_json(const std::vector<ScanSegment>& segments) {
  json arr = json::array();
  for (const auto& s : segments) arr.push_back(to_json(s));
  return arr;
}

}  // namespace tst
