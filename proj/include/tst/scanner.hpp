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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tst/error.hpp"
#include "tst/locale.hpp"
#include "tst/unicode.hpp"

namespace tst {

enum class Sign { none, minus, plus };

constexpr std::string_view to_string(Sign s) noexcept {
  switch (s) {
    case Sign::none: return "none";
    case Sign::minus: return "minus";
    case Sign::plus: return "plus";
  }
  return "none";
}

/// A numeral as written: sign, bare integer digits (never empty), bare
/// fraction digits (trailing zeros kept) and the exact source text.
struct NumericLiteral {
  Sign sign = Sign::none;
  std::string int_digits = "0";
  std::string frac_digits;
  std::string surface;

  friend bool operator==(const NumericLiteral&, const NumericLiteral&) = default;
};

enum class SegmentKind { text, number };

struct ScanSegment {
  SegmentKind kind = SegmentKind::text;
  std::size_t start = 0;  // byte offsets into the scanned text
  std::size_t end = 0;
  std::optional<NumericLiteral> literal;
};

struct ScanOptions {
  LocaleRule rule = LocaleRule::western();
  bool unicode_digits = false;
};

namespace detail {

inline bool is_ascii_alnum(char32_t c) noexcept {
  return (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

class LiteralMatcher {
 public:
  LiteralMatcher(std::string_view text, const ScanOptions& opts) : text_(text), opts_(opts) {}

  /// Digit value at pos (ASCII, or any Unicode Nd when enabled), else -1.
  int digit_at(std::size_t pos, std::size_t* len = nullptr) const {
    if (pos >= text_.size()) return -1;
    const auto ch = unicode::decode_at(text_, pos);
    if (len) *len = ch.length;
    if (!ch.valid) return -1;
    if (ch.value >= U'0' && ch.value <= U'9') return static_cast<int>(ch.value - U'0');
    if (opts_.unicode_digits) return unicode::decimal_digit_value(ch.value);
    return -1;
  }

  char32_t char_at(std::size_t pos, std::size_t* len = nullptr) const {
    const auto ch = unicode::decode_at(text_, pos);
    if (len) *len = ch.length;
    return ch.valid ? ch.value : 0xFFFD;
  }

  bool starts_body(std::size_t pos) const {
    if (pos >= text_.size()) return false;
    if (digit_at(pos) >= 0) return true;
    std::size_t len = 0;
    return char_at(pos, &len) == opts_.rule.decimal_mark && digit_at(pos + len) >= 0;
  }

  /// Sign characters bind only when not glued to a preceding word or digit.
  bool sign_binds(std::size_t prev_pos, bool has_prev) const {
    if (!has_prev) return true;
    const char32_t prev = char_at(prev_pos);
    if (is_ascii_alnum(prev) || digit_at(prev_pos) >= 0) return false;
    return prev != opts_.rule.decimal_mark && !opts_.rule.is_separator(prev) &&
           prev != U'-' && prev != U'+';
  }

  struct Run {
    std::size_t end = 0;
    std::optional<NumericLiteral> literal;  // empty when the run is malformed
    std::string reason;
  };

  /// Consumes the maximal run body starting at `body`, then checks it against
  /// the locale grammar.
  Run match(std::size_t start, std::size_t body, Sign sign) const {
    Run run;
    std::string int_digits, frac_digits;
    std::vector<std::size_t> group_sizes;  // integer groups between separators
    std::size_t current_group = 0;
    int marks = 0;
    bool separator_in_fraction = false;
    bool empty_group = false;
    std::size_t pos = body;
    while (pos < text_.size()) {
      std::size_t len = 0;
      const int d = digit_at(pos, &len);
      if (d >= 0) {
        (marks == 0 ? int_digits : frac_digits).push_back(static_cast<char>('0' + d));
        if (marks == 0) ++current_group;
        pos += len;
        continue;
      }
      const char32_t c = char_at(pos, &len);
      const bool is_mark = c == opts_.rule.decimal_mark;
      if (!is_mark && !opts_.rule.is_separator(c)) break;
      if (digit_at(pos + len) < 0) break;
      if (is_mark) {
        ++marks;
      } else if (marks > 0) {
        separator_in_fraction = true;
      } else {
        if (current_group == 0) empty_group = true;
        group_sizes.push_back(current_group);
        current_group = 0;
      }
      pos += len;
    }
    run.end = pos;
    if (marks > 1) {
      run.reason = "more than one decimal mark";
      return run;
    }
    if (separator_in_fraction) {
      run.reason = "separator inside fraction";
      return run;
    }
    if (!group_sizes.empty()) {
      group_sizes.push_back(current_group);
      if (empty_group || group_sizes.front() == 0) {
        run.reason = "separator without leading digits";
        return run;
      }
      const std::size_t n = group_sizes.size();
      for (std::size_t i = 0; i < n; ++i) {
        const auto expected = static_cast<std::size_t>(opts_.rule.group_size_at(i));
        const std::size_t actual = group_sizes[n - 1 - i];
        const bool leftmost = i + 1 == n;
        if (leftmost ? (actual == 0 || actual > expected) : actual != expected) {
          run.reason = "separator positions contradict locale '" + opts_.rule.name + "'";
          return run;
        }
      }
    }
    NumericLiteral lit;
    lit.sign = sign;
    lit.int_digits = int_digits.empty() ? "0" : std::move(int_digits);
    lit.frac_digits = std::move(frac_digits);
    lit.surface = std::string(text_.substr(start, pos - start));
    run.literal = std::move(lit);
    return run;
  }

 private:
  std::string_view text_;
  const ScanOptions& opts_;
};

inline Sign sign_of(char32_t c) noexcept {
  if (c == U'-') return Sign::minus;
  if (c == U'+') return Sign::plus;
  return Sign::none;
}

}  // namespace detail

/// Splits text into contiguous text and number segments covering it exactly.
/// Runs that look numeric but break the locale grammar (misplaced separators,
/// several decimal marks) stay text. Scanning never fails.
inline std::vector<ScanSegment> scan(std::string_view text, const ScanOptions& opts = {}) {
  std::vector<ScanSegment> segments;
  const detail::LiteralMatcher matcher(text, opts);
  std::size_t text_start = 0;
  std::size_t prev_pos = 0;
  bool has_prev = false;

  auto flush_text = [&](std::size_t upto) {
    if (upto > text_start) segments.push_back({SegmentKind::text, text_start, upto, {}});
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = 0;
    const char32_t c = matcher.char_at(pos, &len);
    std::optional<std::size_t> body;
    Sign sign = Sign::none;
    if (matcher.starts_body(pos)) {
      body = pos;
    } else if (detail::sign_of(c) != Sign::none && matcher.starts_body(pos + len) &&
               matcher.sign_binds(prev_pos, has_prev)) {
      body = pos + len;
      sign = detail::sign_of(c);
    }
    if (!body) {
      prev_pos = pos;
      has_prev = true;
      pos += len;
      continue;
    }
    auto run = matcher.match(pos, *body, sign);
    if (run.literal) {
      flush_text(pos);
      segments.push_back({SegmentKind::number, pos, run.end, std::move(run.literal)});
      text_start = run.end;
    }
    // the last code point of the run becomes the predecessor
    std::size_t p = run.end;
    do {
      --p;
    } while (p > pos && (static_cast<unsigned char>(text[p]) & 0xC0) == 0x80);
    prev_pos = p;
    has_prev = true;
    pos = run.end;
  }
  flush_text(text.size());
  return segments;
}

inline std::vector<ScanSegment> scan(std::string_view text, const LocaleRule& rule) {
  return scan(text, ScanOptions{rule, false});
}

/// Parses a string that must consist of exactly one literal.
inline NumericLiteral parse_literal(std::string_view s, const ScanOptions& opts = {}) {
  const detail::LiteralMatcher matcher(s, opts);
  if (s.empty()) throw Error(ErrorCode::malformed_literal, "empty literal");
  std::size_t len = 0;
  const Sign sign = detail::sign_of(matcher.char_at(0, &len));
  const std::size_t body = sign == Sign::none ? 0 : len;
  if (!matcher.starts_body(body)) {
    throw Error(ErrorCode::malformed_literal, "'" + std::string(s) + "' is not a numeral");
  }
  auto run = matcher.match(0, body, sign);
  if (!run.literal) {
    throw Error(ErrorCode::malformed_literal, "'" + std::string(s) + "': " + run.reason);
  }
  if (run.end != s.size()) {
    throw Error(ErrorCode::malformed_literal,
                "'" + std::string(s) + "': trailing characters after numeral");
  }
  return std::move(*run.literal);
}

inline NumericLiteral parse_literal(std::string_view s, const LocaleRule& rule) {
  return parse_literal(s, ScanOptions{rule, false});
}

/// Renders sign, digits and separators back to text using the literal's
/// surface as a formatting hint (which separator, whether the integer part
/// was written). Reproduces the surface of any accepted ASCII literal.
inline std::string render_surface(const NumericLiteral& lit, const LocaleRule& rule) {
  std::string out;
  if (lit.sign == Sign::minus) out.push_back('-');
  if (lit.sign == Sign::plus) out.push_back('+');
  const std::string mark = unicode::encode(rule.decimal_mark);
  const std::string_view body = std::string_view(lit.surface).substr(out.size());
  const bool implicit_int = body.substr(0, mark.size()) == mark;
  if (!implicit_int) {
    std::string separator;
    for (char32_t c : rule.separators) {
      const auto enc = unicode::encode(c);
      if (body.find(enc) != std::string_view::npos) {
        separator = enc;
        break;
      }
    }
    out += separator.empty() ? lit.int_digits
                             : group_with_separators(lit.int_digits, rule, separator);
  }
  if (!lit.frac_digits.empty()) {
    out += mark;
    out += lit.frac_digits;
  }
  return out;
}

}  // namespace tst
