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
#include <cstdint>
#include <algorithm>
#include <span>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "tst/codec.hpp"
#include "tst/config.hpp"
#include "tst/error.hpp"

namespace tst {

struct VocabEntry {
  std::size_t id = 0;
  std::string text;
  TokenKind kind = TokenKind::group;
  std::optional<ExactValue> value;
};

/// Closed-form inventory sizes for a config, per kind.
struct VocabCounts {
  std::uint64_t decimal_point = 0;
  std::uint64_t sign = 0;
  std::uint64_t terminator = 0;
  std::uint64_t marker = 0;
  std::uint64_t digit = 0;
  std::uint64_t group = 0;             // bare groups ("0".."999", plus "000".."099" in marker mode)
  std::uint64_t suffixed = 0;          // padded group+marker tokens, 10^N per level/depth
  std::uint64_t leading_unpadded = 0;  // "1k".."99k" style tokens when pad_leading_group is off

  std::uint64_t structural() const { return decimal_point + sign + terminator; }
  std::uint64_t value_bearing() const { return digit + group + suffixed + leading_unpadded; }
  std::uint64_t total() const { return structural() + marker + value_bearing(); }

  friend bool operator==(const VocabCounts&, const VocabCounts&) = default;
};

inline constexpr std::uint64_t kMaxVocabEntries = 20'000'000;

inline VocabCounts size(const TstConfig& config) {
  config.validate();
  const auto n = config.group_size;
  const auto groups = static_cast<std::uint64_t>(pow10(n));
  const auto levels = static_cast<std::uint64_t>(config.max_int_levels);
  const auto depths = static_cast<std::uint64_t>(config.max_frac_depth);
  VocabCounts c;
  c.decimal_point = 1;
  c.sign = 2;
  c.terminator = config.preserve_precision ? static_cast<std::uint64_t>(n) : 0;
  switch (config.mode) {
    case Mode::compound:
      c.group = groups;
      c.suffixed = groups * (levels + depths);
      if (!config.pad_leading_group && n > 1) {
        c.leading_unpadded = (static_cast<std::uint64_t>(pow10(n - 1)) - 1) * levels;
      }
      break;
    case Mode::marker:
      c.marker = levels + depths;
      c.group = groups;
      if (n > 1 && levels + depths > 0) c.group += static_cast<std::uint64_t>(pow10(n - 1));
      break;
    case Mode::digit_marker:
      c.marker = levels + depths;
      c.digit = 10;
      break;
  }
  return c;
}

/// Immutable token inventory with dense ids and O(1) lookup by text.
class Vocabulary {
 public:
  Vocabulary() = default;

  Vocabulary(std::vector<VocabEntry> entries, std::uint64_t fingerprint)
      : entries_(std::move(entries)), fingerprint_(fingerprint) {
    index_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      entries_[i].id = i;
      const auto [it, inserted] = index_.emplace(entries_[i].text, i);
      if (!inserted) {
        throw Error(ErrorCode::invalid_config, "duplicate vocabulary text '" + entries_[i].text + "'");
      }
    }
  }

  const std::vector<VocabEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  const VocabEntry* lookup(std::string_view text) const {
    const auto it = index_.find(std::string(text));
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  /// Entries of the given kinds only, renumbered densely.
  Vocabulary subset(std::span<const TokenKind> kinds) const {
    std::vector<VocabEntry> picked;
    for (const auto& e : entries_) {
      if (std::find(kinds.begin(), kinds.end(), e.kind) != kinds.end()) picked.push_back(e);
    }
    return Vocabulary(std::move(picked), fingerprint_);
  }

 private:
  std::vector<VocabEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::uint64_t fingerprint_ = 0;
};

inline std::uint64_t fingerprint(const TstConfig& config) {
  // FNV-1a 64
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : inventory_key(config)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Every token encode() can emit under `config`, ordered by kind, then
/// level/depth, then value.
inline Vocabulary build(const TstConfig& config) {
  const auto counts = size(config);
  if (counts.total() > kMaxVocabEntries) {
    throw Error(ErrorCode::invalid_config,
                "vocabulary of " + std::to_string(counts.total()) + " entries exceeds limit");
  }
  const int n = config.group_size;
  const std::int64_t groups = pow10(n);
  std::vector<VocabEntry> out;
  out.reserve(static_cast<std::size_t>(counts.total()));
  auto add = [&](std::string text, TokenKind kind, std::optional<ExactValue> value) {
    out.push_back({0, std::move(text), kind, value});
  };

  add(".", TokenKind::decimal_point, std::nullopt);
  add("-", TokenKind::sign, std::nullopt);
  add("+", TokenKind::sign, std::nullopt);
  if (config.preserve_precision) {
    for (int t = 1; t <= n; ++t) add("[T" + std::to_string(t) + "]", TokenKind::terminator, std::nullopt);
  }
  if (config.mode != Mode::compound) {
    for (int k = 1; k <= config.max_int_levels; ++k) add(integer_marker(k, config), TokenKind::marker, std::nullopt);
    for (int d = 1; d <= config.max_frac_depth; ++d) add(fraction_marker(d, config), TokenKind::marker, std::nullopt);
  }
  switch (config.mode) {
    case Mode::digit_marker:
      for (int d = 0; d < 10; ++d) add(std::to_string(d), TokenKind::digit, ExactValue{d, 0});
      break;
    case Mode::marker: {
      const bool padded_forms = n > 1 && config.max_int_levels + config.max_frac_depth > 0;
      for (std::int64_t v = 0; v < groups; ++v) {
        const auto plain = std::to_string(v);
        if (padded_forms && static_cast<int>(plain.size()) < n) {
          add(detail::zero_padded(v, n), TokenKind::group, ExactValue{v, 0});
        }
        add(plain, TokenKind::group, ExactValue{v, 0});
      }
      break;
    }
    case Mode::compound: {
      for (std::int64_t v = 0; v < groups; ++v) add(std::to_string(v), TokenKind::group, ExactValue{v, 0});
      for (int k = 1; k <= config.max_int_levels; ++k) {
        const auto marker = integer_marker(k, config);
        for (std::int64_t v = 0; v < groups; ++v) {
          add(detail::zero_padded(v, n) + marker, TokenKind::group_with_marker, ExactValue{v, n * k});
          const auto plain = std::to_string(v);
          if (!config.pad_leading_group && v > 0 && static_cast<int>(plain.size()) < n) {
            add(plain + marker, TokenKind::group_with_marker, ExactValue{v, n * k});
          }
        }
      }
      for (int d = 1; d <= config.max_frac_depth; ++d) {
        const auto marker = fraction_marker(d, config);
        for (std::int64_t v = 0; v < groups; ++v) {
          add(detail::zero_padded(v, n) + marker, TokenKind::group_with_marker, ExactValue{v, -n * d});
        }
      }
      break;
    }
  }
  return Vocabulary(std::move(out), fingerprint(config));
}

enum class ExportFormat { lines, json };

inline ExportFormat parse_export_format(std::string_view s) {
  if (s == "lines") return ExportFormat::lines;
  if (s == "json") return ExportFormat::json;
  throw Error(ErrorCode::invalid_config, "unknown vocabulary format '" + std::string(s) + "'");
}

inline void export_vocabulary(const Vocabulary& v, ExportFormat format, std::ostream& os) {
  if (format == ExportFormat::lines) {
    for (const auto& e : v.entries()) os << e.text << '\n';
  } else {
    os << '[';
    bool first = true;
    for (const auto& e : v.entries()) {
      nlohmann::ordered_json j;
      j["id"] = e.id;
      j["text"] = e.text;
      j["kind"] = to_string(e.kind);
      j["coefficient"] = e.value ? nlohmann::ordered_json(e.value->coefficient) : nlohmann::ordered_json(nullptr);
      j["exponent"] = e.value ? nlohmann::ordered_json(e.value->exponent) : nlohmann::ordered_json(nullptr);
      os << (first ? "\n" : ",\n") << j.dump();
      first = false;
    }
    os << (first ? "]\n" : "\n]\n");
  }
  if (!os) throw Error(ErrorCode::io_error, "failed writing vocabulary");
}

}  // namespace tst
