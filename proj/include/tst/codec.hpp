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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tst/config.hpp"
#include "tst/decimal.hpp"
#include "tst/error.hpp"
#include "tst/scanner.hpp"

namespace tst {

enum class TokenKind { group, group_with_marker, marker, digit, decimal_point, sign, terminator };

constexpr std::string_view to_string(TokenKind k) noexcept {
  switch (k) {
    case TokenKind::group: return "group";
    case TokenKind::group_with_marker: return "group_with_marker";
    case TokenKind::marker: return "marker";
    case TokenKind::digit: return "digit";
    case TokenKind::decimal_point: return "decimal_point";
    case TokenKind::sign: return "sign";
    case TokenKind::terminator: return "terminator";
  }
  return "group";
}

struct Token {
  TokenKind kind = TokenKind::group;
  std::string text;
  std::optional<ExactValue> value;  // group, group_with_marker and digit tokens

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenSequence {
  std::vector<Token> tokens;
  std::optional<NumericLiteral> source;

  std::vector<std::string> texts() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.text);
    return out;
  }
};

/// One base-10^N digit. Integer groups carry level k (scale 10^(N*k)),
/// fraction groups carry depth d >= 1 (scale 10^(-N*d)).
struct DigitGroup {
  std::int64_t value = 0;
  int level = 0;
  int sig_len = 0;  // pre-padding digit count; meaningful for the last fraction group

  friend bool operator==(const DigitGroup&, const DigitGroup&) = default;
};

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

inline std::int64_t pow10(int n) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

namespace detail {

inline std::int64_t parse_digits(std::string_view digits) {
  std::int64_t v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

inline std::string zero_padded(std::int64_t value, int width) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  return s;
}

inline std::string_view strip_leading_zeros(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? std::string_view("0") : digits.substr(first);
}

inline std::string_view strip_trailing_zeros(std::string_view digits) {
  const auto last = digits.find_last_not_of('0');
  return last == std::string_view::npos ? std::string_view() : digits.substr(0, last + 1);
}

inline std::string sign_text(Sign s) { return s == Sign::minus ? "-" : s == Sign::plus ? "+" : ""; }

inline std::string render_numeral(Sign sign, std::string_view int_digits, std::string_view frac) {
  std::string out = sign_text(sign);
  out += int_digits;
  if (!frac.empty()) {
    out.push_back('.');
    out += frac;
  }
  return out;
}

}  // namespace detail

/// Splits integer digits right to left into groups of N, most significant
/// first. The top group's value is what remains after left padding to a
/// multiple of N.
inline std::vector<DigitGroup> group_integer(std::string_view int_digits, int group_size,
                                             int max_levels = kUnbounded) {
  if (int_digits.empty()) throw Error(ErrorCode::malformed_literal, "empty integer part");
  const auto n = static_cast<std::size_t>(group_size);
  const std::size_t count = (int_digits.size() + n - 1) / n;
  if (count - 1 > static_cast<std::size_t>(max_levels)) {
    throw Error(ErrorCode::level_overflow,
                "integer part needs level " + std::to_string(count - 1) + " but max_int_levels is " +
                    std::to_string(max_levels));
  }
  std::vector<DigitGroup> groups(count);
  std::size_t end = int_digits.size();
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t start = end > n ? end - n : 0;
    auto& g = groups[count - 1 - i];
    g.value = detail::parse_digits(int_digits.substr(start, end - start));
    g.level = static_cast<int>(i);
    g.sig_len = static_cast<int>(end - start);
    end = start;
  }
  return groups;
}

/// Splits fraction digits left to right into groups of N; the last group is
/// right-padded with zeros and remembers how many digits were real.
inline std::vector<DigitGroup> group_fraction(std::string_view frac_digits, int group_size,
                                              int max_depth = kUnbounded) {
  const auto n = static_cast<std::size_t>(group_size);
  const std::size_t count = (frac_digits.size() + n - 1) / n;
  if (count > static_cast<std::size_t>(max_depth)) {
    throw Error(ErrorCode::depth_overflow,
                "fraction part needs depth " + std::to_string(count) + " but max_frac_depth is " +
                    std::to_string(max_depth));
  }
  std::vector<DigitGroup> groups;
  groups.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto chunk = frac_digits.substr(i * n, n);
    DigitGroup g;
    g.value = detail::parse_digits(chunk) * pow10(group_size - static_cast<int>(chunk.size()));
    g.level = static_cast<int>(i + 1);
    g.sig_len = static_cast<int>(chunk.size());
    groups.push_back(g);
  }
  return groups;
}

inline std::string integer_marker(int level, const TstConfig& config) {
  if (level < 1 || level > config.max_int_levels) {
    throw Error(ErrorCode::out_of_range_marker,
                "integer level " + std::to_string(level) + " outside [1, " +
                    std::to_string(config.max_int_levels) + "]");
  }
  if (config.marker_style == MarkerStyle::triadic_human) {
    static constexpr std::string_view kSuffixes[] = {"k", "m", "b", "t", "q"};
    return std::string(kSuffixes[level - 1]);
  }
  return "⟨E+" + std::to_string(config.group_size * level) + "⟩";
}

inline std::string fraction_marker(int depth, const TstConfig& config) {
  if (depth < 1 || depth > config.max_frac_depth) {
    throw Error(ErrorCode::out_of_range_marker,
                "fraction depth " + std::to_string(depth) + " outside [1, " +
                    std::to_string(config.max_frac_depth) + "]");
  }
  if (config.marker_style == MarkerStyle::triadic_human) {
    return std::string(static_cast<std::size_t>(depth), 'p');
  }
  return "⟨E-" + std::to_string(config.group_size * depth) + "⟩";
}

/// Canonical form for group size N: no leading integer zeros, trailing
/// fraction zeros dropped and the rest right-padded to a multiple of N.
/// The sign is kept as written. Surface is the rendered canonical numeral.
inline NumericLiteral canonicalize(const NumericLiteral& lit, int group_size = 3) {
  NumericLiteral out;
  out.sign = lit.sign;
  out.int_digits = std::string(detail::strip_leading_zeros(lit.int_digits));
  out.frac_digits = std::string(detail::strip_trailing_zeros(lit.frac_digits));
  const auto n = static_cast<std::size_t>(group_size);
  if (const auto rem = out.frac_digits.size() % n; rem != 0) out.frac_digits.append(n - rem, '0');
  out.surface = detail::render_numeral(out.sign, out.int_digits, out.frac_digits);
  return out;
}

/// Canonical form under a config: identical to canonicalize(lit, N) unless
/// precision is preserved, in which case fraction digits stay as written.
inline NumericLiteral canonicalize(const NumericLiteral& lit, const TstConfig& config) {
  if (!config.preserve_precision) return canonicalize(lit, config.group_size);
  NumericLiteral out;
  out.sign = lit.sign;
  out.int_digits = std::string(detail::strip_leading_zeros(lit.int_digits));
  out.frac_digits = lit.frac_digits;
  out.surface = detail::render_numeral(out.sign, out.int_digits, out.frac_digits);
  return out;
}

inline ScanOptions scan_options(const TstConfig& config) {
  return ScanOptions{config.locale, config.normalize_digits};
}

inline Decimal value_of(const NumericLiteral& lit) {
  return Decimal::from_parts(lit.sign == Sign::minus, lit.int_digits, lit.frac_digits);
}

/// Token surfaces for one numeral. Throws level_overflow / depth_overflow
/// when the numeral needs more levels than the config provides.
inline TokenSequence encode(const NumericLiteral& literal, const TstConfig& config) {
  config.validate();
  const int n = config.group_size;
  const auto int_digits = detail::strip_leading_zeros(literal.int_digits);
  const auto frac_digits = config.preserve_precision
                               ? std::string_view(literal.frac_digits)
                               : detail::strip_trailing_zeros(literal.frac_digits);
  std::vector<DigitGroup> int_groups, frac_groups;
  try {
    int_groups = group_integer(int_digits, n, config.max_int_levels);
    frac_groups = group_fraction(frac_digits, n, config.max_frac_depth);
  } catch (const Error& e) {
    throw Error(e.code(), "'" + literal.surface + "': " +
                              std::string(e.what()).substr(to_string(e.code()).size() + 2));
  }

  TokenSequence seq;
  seq.source = literal;
  auto& out = seq.tokens;
  out.reserve(int_groups.size() * 2 + frac_groups.size() * 2 + 3);
  if (literal.sign != Sign::none) {
    out.push_back({TokenKind::sign, detail::sign_text(literal.sign), std::nullopt});
  }

  const int top = int_groups.front().level;
  auto emit_group = [&](std::string digits, std::int64_t value, std::string marker, int exponent) {
    switch (config.mode) {
      case Mode::compound:
        if (marker.empty()) {
          out.push_back({TokenKind::group, std::move(digits), ExactValue{value, 0}});
        } else {
          out.push_back({TokenKind::group_with_marker, digits + marker, ExactValue{value, exponent}});
        }
        break;
      case Mode::marker:
        out.push_back({TokenKind::group, std::move(digits), ExactValue{value, 0}});
        if (!marker.empty()) out.push_back({TokenKind::marker, std::move(marker), std::nullopt});
        break;
      case Mode::digit_marker:
        for (char c : digits) {
          out.push_back({TokenKind::digit, std::string(1, c), ExactValue{c - '0', 0}});
        }
        if (!marker.empty()) out.push_back({TokenKind::marker, std::move(marker), std::nullopt});
        break;
    }
  };

  for (const auto& g : int_groups) {
    std::string digits;
    if (g.level == 0) {
      const bool pad = config.mode == Mode::digit_marker && top > 0;
      digits = pad ? detail::zero_padded(g.value, n) : std::to_string(g.value);
      emit_group(std::move(digits), g.value, "", 0);
      continue;
    }
    const bool leading_unpadded = g.level == top && !config.pad_leading_group;
    digits = leading_unpadded ? std::to_string(g.value) : detail::zero_padded(g.value, n);
    emit_group(std::move(digits), g.value, integer_marker(g.level, config), n * g.level);
  }

  if (!frac_groups.empty()) {
    out.push_back({TokenKind::decimal_point, ".", std::nullopt});
    for (const auto& g : frac_groups) {
      emit_group(detail::zero_padded(g.value, n), g.value, fraction_marker(g.level, config),
                 -n * g.level);
    }
    if (config.preserve_precision) {
      out.push_back({TokenKind::terminator, "[T" + std::to_string(frac_groups.back().sig_len) + "]",
                     std::nullopt});
    }
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Lexing token surfaces back into structure

struct LexedToken {
  TokenKind kind = TokenKind::group;
  std::string digits;       // group / digit tokens
  int marker_level = 0;     // integer level, or fraction depth when fractional
  bool fractional = false;  // marker refers to a fraction depth
  bool has_marker = false;
  int terminator = 0;
  Sign sign = Sign::none;
};

namespace detail {

struct MarkerRef {
  int index = 0;
  bool fractional = false;
};

inline std::optional<MarkerRef> parse_marker(std::string_view s, const TstConfig& config) {
  if (s.empty()) return std::nullopt;
  if (config.marker_style == MarkerStyle::triadic_human) {
    static constexpr std::string_view kSuffixes = "kmbtq";
    if (s.size() == 1) {
      const auto pos = kSuffixes.find(s[0]);
      if (pos != std::string_view::npos) {
        const int level = static_cast<int>(pos) + 1;
        if (level <= config.max_int_levels) return MarkerRef{level, false};
        return std::nullopt;
      }
    }
    if (s.find_first_not_of('p') != std::string_view::npos) return std::nullopt;
    const int depth = static_cast<int>(s.size());
    if (depth > config.max_frac_depth) return std::nullopt;
    return MarkerRef{depth, true};
  }
  constexpr std::string_view open = "⟨E", close = "⟩";
  if (!s.starts_with(open) || !s.ends_with(close)) return std::nullopt;
  s = s.substr(open.size(), s.size() - open.size() - close.size());
  if (s.size() < 2 || (s[0] != '+' && s[0] != '-')) return std::nullopt;
  const bool fractional = s[0] == '-';
  const auto digits = s.substr(1);
  if (digits.size() > 9 || digits[0] == '0' ||
      digits.find_first_not_of("0123456789") != std::string_view::npos) {
    return std::nullopt;
  }
  const auto exponent = parse_digits(digits);
  if (exponent % config.group_size != 0) return std::nullopt;
  const auto index = static_cast<int>(exponent / config.group_size);
  if (index > (fractional ? config.max_frac_depth : config.max_int_levels)) return std::nullopt;
  return MarkerRef{index, fractional};
}

}  // namespace detail

/// Classifies one token surface under a config; nullopt when the surface is
/// not part of the config's token inventory shape.
inline std::optional<LexedToken> lex_token(std::string_view text, const TstConfig& config) {
  LexedToken t;
  if (text == ".") {
    t.kind = TokenKind::decimal_point;
    return t;
  }
  if (text == "-" || text == "+") {
    t.kind = TokenKind::sign;
    t.sign = text == "-" ? Sign::minus : Sign::plus;
    return t;
  }
  if (text.size() > 3 && text.starts_with("[T") && text.ends_with("]")) {
    const auto digits = text.substr(2, text.size() - 3);
    if (digits.size() <= 9 && digits[0] != '0' &&
        digits.find_first_not_of("0123456789") == std::string_view::npos) {
      t.kind = TokenKind::terminator;
      t.terminator = static_cast<int>(detail::parse_digits(digits));
      return t;
    }
    return std::nullopt;
  }
  const auto digit_end = std::min(text.find_first_not_of("0123456789"), text.size());
  const auto digits = text.substr(0, digit_end);
  const auto rest = text.substr(digit_end);
  auto marker = detail::parse_marker(rest, config);
  switch (config.mode) {
    case Mode::compound:
      if (digits.empty()) return std::nullopt;
      t.digits = std::string(digits);
      if (rest.empty()) {
        t.kind = TokenKind::group;
        return t;
      }
      if (!marker) return std::nullopt;
      t.kind = TokenKind::group_with_marker;
      t.has_marker = true;
      t.marker_level = marker->index;
      t.fractional = marker->fractional;
      return t;
    case Mode::marker:
    case Mode::digit_marker:
      if (!digits.empty() && rest.empty()) {
        if (config.mode == Mode::digit_marker && digits.size() != 1) return std::nullopt;
        t.kind = config.mode == Mode::marker ? TokenKind::group : TokenKind::digit;
        t.digits = std::string(digits);
        return t;
      }
      if (!digits.empty() || !marker) return std::nullopt;
      t.kind = TokenKind::marker;
      t.has_marker = true;
      t.marker_level = marker->index;
      t.fractional = marker->fractional;
      return t;
  }
  return std::nullopt;
}

/// Exact value carried by a value-bearing token.
inline ExactValue token_value(const Token& token) {
  if (!token.value) {
    throw Error(ErrorCode::non_value_token, "'" + token.text + "' carries no value");
  }
  return *token.value;
}

/// Exact value of a token given only its surface, e.g. "500pp" -> 500e-6.
inline ExactValue token_value(std::string_view text, const TstConfig& config) {
  const auto lexed = lex_token(text, config);
  if (!lexed || lexed->digits.empty()) {
    throw Error(ErrorCode::non_value_token, "'" + std::string(text) + "' carries no value");
  }
  if (lexed->digits.size() > static_cast<std::size_t>(config.group_size)) {
    throw Error(ErrorCode::padding, "'" + std::string(text) + "' is wider than one group");
  }
  ExactValue v{detail::parse_digits(lexed->digits), 0};
  if (lexed->kind == TokenKind::group_with_marker) {
    v.exponent = config.group_size * lexed->marker_level * (lexed->fractional ? -1 : 1);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Validation

/// How strictly group widths are checked.
enum class PaddingPolicy {
  strict,           // exactly as encode() renders under the config
  accept_leading,   // leading suffixed group may be padded or unpadded
  lenient,          // any group of 1..N digits
};

struct ValidationReport {
  bool ok = true;
  std::optional<ErrorCode> rule;
  std::size_t token_index = 0;
  std::string message;

  std::string to_string() const {
    if (ok) return "ok";
    return std::string(tst::to_string(*rule)) + " at token " + std::to_string(token_index) + ": " +
           message;
  }
};

namespace detail {

struct ParsedUnit {
  std::string digits;
  int level = 0;  // integer level, or fraction depth
  std::size_t token_index = 0;
};

struct ParsedNumber {
  Sign sign = Sign::none;
  std::vector<ParsedUnit> int_units;
  std::vector<ParsedUnit> frac_units;
  int terminator = 0;
};

struct Violation {
  ErrorCode rule;
  std::size_t index;
  std::string message;
};

class SequenceParser {
 public:
  SequenceParser(std::span<const std::string> texts, const TstConfig& config, PaddingPolicy policy)
      : texts_(texts), config_(config), policy_(policy) {}

  /// Checks run in a fixed phase order; the first phase that fails decides
  /// the reported rule.
  std::optional<Violation> run() {
    if (auto v = lex()) return v;
    if (auto v = check_signs()) return v;
    if (auto v = check_terminator_placement()) return v;
    if (auto v = check_decimal_point()) return v;
    if (auto v = check_integer_levels()) return v;
    if (auto v = check_fraction_depths()) return v;
    if (auto v = check_terminator_digits()) return v;
    if (auto v = check_padding()) return v;
    return std::nullopt;
  }

  const ParsedNumber& result() const { return parsed_; }

 private:
  std::optional<Violation> lex() {
    if (texts_.empty()) return Violation{ErrorCode::integer_levels, 0, "empty sequence"};
    lexed_.reserve(texts_.size());
    for (std::size_t i = 0; i < texts_.size(); ++i) {
      auto t = lex_token(texts_[i], config_);
      if (!t) return Violation{ErrorCode::unknown_token, i, "unknown token '" + texts_[i] + "'"};
      lexed_.push_back(std::move(*t));
    }
    return std::nullopt;
  }

  std::optional<Violation> check_signs() {
    for (std::size_t i = 0; i < lexed_.size(); ++i) {
      if (lexed_[i].kind != TokenKind::sign) continue;
      if (i != 0) return Violation{ErrorCode::sign_position, i, "sign after position 0"};
      parsed_.sign = lexed_[i].sign;
      begin_ = 1;
    }
    return std::nullopt;
  }

  std::optional<Violation> check_terminator_placement() {
    end_ = lexed_.size();
    for (std::size_t i = 0; i < lexed_.size(); ++i) {
      if (lexed_[i].kind != TokenKind::terminator) continue;
      if (!config_.preserve_precision) {
        return Violation{ErrorCode::terminator, i, "terminator without preserve_precision"};
      }
      if (i + 1 != lexed_.size()) return Violation{ErrorCode::terminator, i, "terminator not last"};
      const int t = lexed_[i].terminator;
      if (t < 1 || t > config_.group_size) {
        return Violation{ErrorCode::terminator, i, "terminator length out of range"};
      }
      parsed_.terminator = t;
      end_ = i;
    }
    return std::nullopt;
  }

  bool is_fraction_token(const LexedToken& t) const {
    return t.has_marker && t.fractional;
  }

  std::optional<Violation> check_decimal_point() {
    point_.reset();
    for (std::size_t i = begin_; i < end_; ++i) {
      const auto& t = lexed_[i];
      if (t.kind == TokenKind::decimal_point) {
        if (point_) return Violation{ErrorCode::decimal_point, i, "second decimal point"};
        point_ = i;
        continue;
      }
      if (!point_ && is_fraction_token(t)) {
        return Violation{ErrorCode::decimal_point, i, "fraction group before decimal point"};
      }
      if (point_ && t.has_marker && !t.fractional) {
        return Violation{ErrorCode::decimal_point, i, "integer group after decimal point"};
      }
      if (point_ && config_.mode == Mode::compound && !t.has_marker) {
        return Violation{ErrorCode::decimal_point, i, "unsuffixed group after decimal point"};
      }
    }
    if (point_ && *point_ + 1 == end_) {
      return Violation{ErrorCode::decimal_point, *point_, "decimal point without fraction"};
    }
    if (!point_ && parsed_.terminator > 0) {
      return Violation{ErrorCode::terminator, end_, "terminator without fraction"};
    }
    if (point_ && config_.preserve_precision && parsed_.terminator == 0) {
      return Violation{ErrorCode::terminator, end_, "missing terminator"};
    }
    return std::nullopt;
  }

  /// Groups a token range into (digits, marker) units. `fractional` selects
  /// which marker family closes a unit; an unmarked trailing unit gets
  /// level 0 in the integer part and is an error in the fraction part.
  std::optional<Violation> collect_units(std::size_t from, std::size_t to, bool fractional,
                                         std::vector<ParsedUnit>& units) {
    const ErrorCode rule = fractional ? ErrorCode::fraction_depths : ErrorCode::integer_levels;
    ParsedUnit pending;
    bool open = false;
    for (std::size_t i = from; i < to; ++i) {
      const auto& t = lexed_[i];
      if (config_.mode == Mode::compound) {
        units.push_back({t.digits, t.has_marker ? t.marker_level : 0, i});
        continue;
      }
      if (t.kind == TokenKind::marker) {
        if (!open) return Violation{rule, i, "marker without a preceding group"};
        pending.level = t.marker_level;
        units.push_back(std::move(pending));
        pending = {};
        open = false;
        continue;
      }
      if (open && config_.mode == Mode::marker) {
        if (fractional) {
          return Violation{rule, pending.token_index, "fraction group without depth marker"};
        }
        pending.level = 0;
        units.push_back(std::move(pending));
        pending = {};
        open = false;
      }
      if (!open) {
        pending.token_index = i;
        open = true;
      }
      pending.digits += t.digits;
    }
    if (open) {
      if (fractional) {
        return Violation{rule, pending.token_index, "fraction group without depth marker"};
      }
      pending.level = 0;
      units.push_back(std::move(pending));
    }
    return std::nullopt;
  }

  std::optional<Violation> check_integer_levels() {
    const std::size_t int_end = point_ ? *point_ : end_;
    auto& units = parsed_.int_units;
    if (auto v = collect_units(begin_, int_end, false, units)) return v;
    if (units.empty()) return Violation{ErrorCode::integer_levels, begin_, "missing integer part"};
    for (std::size_t i = 1; i < units.size(); ++i) {
      const int prev = units[i - 1].level, cur = units[i].level;
      if (cur == prev - 1) continue;
      const char* what = cur > prev ? "non-monotone magnitude order"
                         : cur == prev ? "duplicate level"
                                       : "skipped level";
      return Violation{ErrorCode::integer_levels, units[i].token_index,
                       std::string(what) + " (" + std::to_string(prev) + " then " +
                           std::to_string(cur) + ")"};
    }
    if (units.back().level != 0) {
      return Violation{ErrorCode::integer_levels, units.back().token_index,
                       "integer part does not end at level 0"};
    }
    const auto& top = units.front();
    if (top.level > 0 && top.digits.find_first_not_of('0') == std::string::npos) {
      return Violation{ErrorCode::integer_levels, top.token_index, "leading zero group"};
    }
    return std::nullopt;
  }

  std::optional<Violation> check_fraction_depths() {
    if (!point_) return std::nullopt;
    auto& units = parsed_.frac_units;
    if (auto v = collect_units(*point_ + 1, end_, true, units)) return v;
    for (std::size_t i = 0; i < units.size(); ++i) {
      const int expected = static_cast<int>(i) + 1;
      if (units[i].level == expected) continue;
      const char* what = units[i].level < expected ? "non-ascending depth" : "skipped depth";
      return Violation{ErrorCode::fraction_depths, units[i].token_index,
                       std::string(what) + " (expected " + std::to_string(expected) + ", got " +
                           std::to_string(units[i].level) + ")"};
    }
    const auto& last = units.back();
    if (!config_.preserve_precision &&
        last.digits.find_first_not_of('0') == std::string::npos) {
      return Violation{ErrorCode::fraction_depths, last.token_index, "trailing zero group"};
    }
    return std::nullopt;
  }

  std::optional<Violation> check_terminator_digits() {
    if (parsed_.terminator == 0) return std::nullopt;
    const auto& last = parsed_.frac_units.back();
    const auto sig = static_cast<std::size_t>(parsed_.terminator);
    if (last.digits.size() >= sig &&
        last.digits.find_first_not_of('0', sig) != std::string::npos) {
      return Violation{ErrorCode::terminator, end_,
                       "terminator drops nonzero digits of the last group"};
    }
    return std::nullopt;
  }

  std::optional<Violation> check_padding() {
    const auto n = static_cast<std::size_t>(config_.group_size);
    auto is_unpadded = [](const std::string& d) { return d.size() == 1 || d[0] != '0'; };
    auto fail = [](const ParsedUnit& u, const std::string& what) {
      return Violation{ErrorCode::padding, u.token_index, "group '" + u.digits + "' " + what};
    };
    const auto& ints = parsed_.int_units;
    const int top = ints.front().level;
    for (std::size_t i = 0; i < ints.size(); ++i) {
      const auto& u = ints[i];
      if (u.digits.size() > n) return fail(u, "wider than group size");
      if (policy_ == PaddingPolicy::lenient) continue;
      const bool padded = u.digits.size() == n;
      if (u.level == 0) {
        if (config_.mode == Mode::digit_marker && top > 0) {
          if (!padded) return fail(u, "must be padded");
        } else if (!is_unpadded(u.digits)) {
          return fail(u, "must be unpadded at level 0");
        }
      } else if (i == 0) {
        const bool ok = policy_ == PaddingPolicy::accept_leading
                            ? padded || is_unpadded(u.digits)
                        : config_.pad_leading_group ? padded
                                                    : is_unpadded(u.digits);
        if (!ok) return fail(u, "has wrong leading-group padding");
      } else if (!padded) {
        return fail(u, "must be padded");
      }
    }
    for (const auto& u : parsed_.frac_units) {
      if (u.digits.size() > n) return fail(u, "wider than group size");
      if (policy_ != PaddingPolicy::lenient && u.digits.size() != n) {
        return fail(u, "must be padded");
      }
    }
    return std::nullopt;
  }

  std::span<const std::string> texts_;
  const TstConfig& config_;
  PaddingPolicy policy_;
  std::vector<LexedToken> lexed_;
  ParsedNumber parsed_;
  std::size_t begin_ = 0;
  std::size_t end_ = 0;
  std::optional<std::size_t> point_;
};

}  // namespace detail

/// Structural check of one numeral's token sequence. Reports the first
/// violation in rule order: unknown_token, sign_position, terminator,
/// decimal_point, integer_levels, fraction_depths, padding.
inline ValidationReport validate(std::span<const std::string> tokens, const TstConfig& config,
                                 PaddingPolicy policy = PaddingPolicy::strict) {
  detail::SequenceParser parser(tokens, config, policy);
  ValidationReport report;
  if (auto v = parser.run()) {
    report.ok = false;
    report.rule = v->rule;
    report.token_index = v->index;
    report.message = std::move(v->message);
  }
  return report;
}

inline ValidationReport validate(const TokenSequence& seq, const TstConfig& config,
                                 PaddingPolicy policy = PaddingPolicy::strict) {
  const auto texts = seq.texts();
  return validate(std::span<const std::string>(texts), config, policy);
}

struct DecodeResult {
  NumericLiteral literal;
  Decimal value;
};

enum class DecodeMode { strict, lenient };

/// Rebuilds the numeral from its tokens. Strict mode accepts exactly what
/// encode() emits, with either padding of the leading group; lenient mode
/// also accepts unpadded groups anywhere.
inline DecodeResult decode(std::span<const std::string> tokens, const TstConfig& config,
                           DecodeMode mode = DecodeMode::strict) {
  const auto policy =
      mode == DecodeMode::strict ? PaddingPolicy::accept_leading : PaddingPolicy::lenient;
  detail::SequenceParser parser(tokens, config, policy);
  if (auto v = parser.run()) {
    throw Error(v->rule, v->message + " (token " + std::to_string(v->index) + ")");
  }
  const auto& parsed = parser.result();
  const int n = config.group_size;

  std::string int_digits;
  for (const auto& u : parsed.int_units) {
    const auto value = detail::parse_digits(u.digits);
    int_digits += int_digits.empty() ? std::to_string(value) : detail::zero_padded(value, n);
  }
  int_digits = std::string(detail::strip_leading_zeros(int_digits));

  std::string frac_digits;
  for (const auto& u : parsed.frac_units) {
    // a short group in lenient mode still sits at its depth: "4p" is 0.004
    frac_digits += detail::zero_padded(detail::parse_digits(u.digits), n);
  }
  if (parsed.terminator > 0) {
    frac_digits.resize(frac_digits.size() - static_cast<std::size_t>(n - parsed.terminator));
  }

  DecodeResult result;
  result.literal.sign = parsed.sign;
  result.literal.int_digits = std::move(int_digits);
  result.literal.frac_digits = std::move(frac_digits);
  result.literal.surface = detail::render_numeral(parsed.sign, result.literal.int_digits,
                                                  result.literal.frac_digits);
  result.value = value_of(result.literal);
  return result;
}

inline DecodeResult decode(const TokenSequence& seq, const TstConfig& config,
                           DecodeMode mode = DecodeMode::strict) {
  const auto texts = seq.texts();
  return decode(std::span<const std::string>(texts), config, mode);
}

}  // namespace tst
