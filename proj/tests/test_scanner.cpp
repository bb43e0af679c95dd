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


#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "tst/json_io.hpp"
#include "tst/scanner.hpp"

namespace tst {
namespace {

std::vector<std::string> numbers_in(const std::string& text, const ScanOptions& opts = {}) {
  std::vector<std::string> out;
  for (const auto& s : scan(text, opts)) {
    if (s.kind == SegmentKind::number) out.push_back(text.substr(s.start, s.end - s.start));
  }
  return out;
}

TEST(Scan, SplitsTextAndNumbers) {
  const std::string text = "pi is 3.14159 approx";
  const auto segs = scan(text);
  ASSERT_EQ(segs.size(), 3u);
  EXPECT_EQ(segs[0].kind, SegmentKind::text);
  EXPECT_EQ(text.substr(segs[0].start, segs[0].end), "pi is ");
  EXPECT_EQ(segs[1].kind, SegmentKind::number);
  EXPECT_EQ(segs[1].literal->int_digits, "3");
  EXPECT_EQ(segs[1].literal->frac_digits, "14159");
  EXPECT_EQ(segs[1].literal->surface, "3.14159");
  EXPECT_EQ(text.substr(segs[2].start), " approx");
}

// Strips separators after checking group sizes right to left against the
// pattern; independent of the scanner's matcher.
std::optional<std::string> strip_checked(const std::string& s, const std::vector<int>& pattern) {
  std::vector<std::string> groups;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      groups.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  groups.push_back(cur);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[groups.size() - 1 - i];
    const auto want = static_cast<std::size_t>(i < pattern.size() ? pattern[i] : pattern.back());
    const bool leftmost = i + 1 == groups.size();
    if (leftmost ? (g.empty() || g.size() > want) : g.size() != want) return std::nullopt;
  }
  std::string out;
  for (const auto& g : groups) out += g;
  return out;
}

TEST(Scan, IndianGrouping) {
  const std::string text = "12,34,567";
  const auto expected = strip_checked(text, {3, 2});
  ASSERT_TRUE(expected.has_value());
  const auto segs = scan(text, LocaleRule::indian());
  ASSERT_EQ(segs.size(), 1u);
  ASSERT_EQ(segs[0].kind, SegmentKind::number);
  EXPECT_EQ(segs[0].literal->int_digits, *expected);
  EXPECT_EQ(segs[0].literal->int_digits, "1234567");
}

TEST(Scan, IndianPatternAgreesWithOracleOnRandomSeparations) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    const int groups = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int g = 0; g < groups; ++g) {
      if (g) s.push_back(',');
      const int len = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int i = 0; i < len; ++i) s.push_back(static_cast<char>('1' + rng() % 9));
    }
    const auto expected = strip_checked(s, {3, 2});
    const auto segs = scan(s, LocaleRule::indian());
    if (expected) {
      ASSERT_EQ(segs.size(), 1u) << s;
      ASSERT_EQ(segs[0].kind, SegmentKind::number) << s;
      EXPECT_EQ(segs[0].literal->int_digits, *expected) << s;
    } else if (groups > 1) {
      for (const auto& seg : segs) EXPECT_EQ(seg.kind, SegmentKind::text) << s;
    }
  }
}

TEST(Scan, MultipleDecimalMarksStayText) {
  const std::string text = "v3.1.4 shipped";
  for (const auto& s : scan(text)) EXPECT_EQ(s.kind, SegmentKind::text);
}

TEST(Scan, MisplacedSeparatorsStayText) {
  EXPECT_TRUE(numbers_in("12,34,567").empty());
  EXPECT_TRUE(numbers_in("1,2345").empty());
  EXPECT_EQ(numbers_in("1,234,567.89"), std::vector<std::string>{"1,234,567.89"});
  EXPECT_EQ(numbers_in("x 1,2345,6789 y", {LocaleRule::east_asian(), false}),
            std::vector<std::string>{"1,2345,6789"});
}

TEST(Scan, TrailingMarksAreNotConsumed) {
  EXPECT_EQ(numbers_in("I paid 1,000."), std::vector<std::string>{"1,000"});
  EXPECT_EQ(numbers_in("a, 5, b"), std::vector<std::string>{"5"});
}

TEST(Scan, LeadingDecimalMarkGetsZeroInteger) {
  const auto segs = scan("about .5 left");
  ASSERT_EQ(segs.size(), 3u);
  EXPECT_EQ(segs[1].literal->int_digits, "0");
  EXPECT_EQ(segs[1].literal->frac_digits, "5");
  EXPECT_EQ(segs[1].literal->surface, ".5");
}

TEST(Scan, ScientificNotationSplits) {
  EXPECT_EQ(numbers_in("1.5e6"), (std::vector<std::string>{"1.5", "6"}));
}

TEST(Scan, SignBinding) {
  EXPECT_EQ(numbers_in("x -5"), std::vector<std::string>{"-5"});
  EXPECT_EQ(numbers_in("(+3.5)"), std::vector<std::string>{"+3.5"});
  EXPECT_EQ(numbers_in("a-5"), std::vector<std::string>{"5"});
  EXPECT_EQ(numbers_in("3-2"), (std::vector<std::string>{"3", "2"}));
  EXPECT_EQ(numbers_in("-.25"), std::vector<std::string>{"-.25"});
  const auto segs = scan("-42");
  ASSERT_EQ(segs.size(), 1u);
  EXPECT_EQ(segs[0].literal->sign, Sign::minus);
}

TEST(Scan, UnicodeDigitsOnlyWhenEnabled) {
  const std::string text = "abc \xd9\xa4\xd9\xa2 x";  // Arabic-Indic 4 2
  EXPECT_TRUE(numbers_in(text).empty());
  const auto segs = scan(text, ScanOptions{LocaleRule::western(), true});
  ASSERT_EQ(segs.size(), 3u);
  EXPECT_EQ(segs[1].start, 4u);
  EXPECT_EQ(segs[1].end, 8u);
  EXPECT_EQ(segs[1].literal->int_digits, "42");
  EXPECT_EQ(segs[1].literal->surface, "\xd9\xa4\xd9\xa2");
}

TEST(Scan, InvalidUtf8IsText) {
  const std::string text = "\xff\xfe 12 \xc3";
  const auto segs = scan(text);
  ASSERT_EQ(segs.size(), 3u);
  EXPECT_EQ(segs[1].literal->int_digits, "12");
}

TEST(Scan, EmptyInput) { EXPECT_TRUE(scan("").empty()); }

TEST(ParseLiteral, WesternSeparators) {
  const auto lit = parse_literal("100,400");
  EXPECT_EQ(lit.sign, Sign::none);
  EXPECT_EQ(lit.int_digits, "100400");
  EXPECT_EQ(lit.frac_digits, "");
  EXPECT_EQ(lit.surface, "100,400");
}

TEST(ParseLiteral, NegativeFraction) {
  const auto lit = parse_literal("-0.0045");
  EXPECT_EQ(lit.sign, Sign::minus);
  EXPECT_EQ(lit.int_digits, "0");
  EXPECT_EQ(lit.frac_digits, "0045");
}

TEST(ParseLiteral, RejectsMalformed) {
  for (const char* bad : {"1,23,45", "", "-", "abc", "1.2.3", "12 ", "1,234.5,6", ",123"}) {
    try {
      parse_literal(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::malformed_literal) << bad;
    }
  }
  EXPECT_EQ(parse_literal("1,23,456", LocaleRule::indian()).int_digits, "123456");
}

TEST(ParseLiteral, CustomLocaleFromJson) {
  const auto rule = locale_from_json(json::parse(
      R"({"name":"swiss","group_pattern":[3],"separator":"'","decimal_mark":","})"));
  const auto lit = parse_literal("1'234'567,25", rule);
  EXPECT_EQ(lit.int_digits, "1234567");
  EXPECT_EQ(lit.frac_digits, "25");
  EXPECT_EQ(render_surface(lit, rule), "1'234'567,25");
}

TEST(LocaleRule, Validation) {
  LocaleRule bad = LocaleRule::western();
  bad.decimal_mark = U',';
  EXPECT_THROW(bad.validate(), Error);
  bad = LocaleRule::western();
  bad.group_pattern = {3, 0};
  EXPECT_THROW(bad.validate(), Error);
  EXPECT_THROW(locale_by_name("martian"), Error);
  EXPECT_THROW(locale_from_json(json::parse(R"({"decimal_mark":",,"})")), Error);
}

TEST(NormalizeDigits, Examples) {
  EXPECT_EQ(unicode::normalize_digits("42"), "42");
  EXPECT_EQ(unicode::normalize_digits("\xd9\xa4\xd9\xa2"), "42");
  EXPECT_EQ(unicode::normalize_digits("abc"), "abc");
}

// Values frozen from Python's unicodedata.decimal().
TEST(NormalizeDigits, MatchesUnicodeDatabase) {
  EXPECT_EQ(unicode::normalize_digits("\xe0\xa5\xa7\xe0\xa5\xa8\xe0\xa5\xa9"), "123");  // Devanagari
  EXPECT_EQ(unicode::normalize_digits("\xef\xbc\x91\xef\xbc\x92"), "12");              // fullwidth
  EXPECT_EQ(unicode::normalize_digits("\xdf\x81\xdf\x82"), "12");                      // NKo
  EXPECT_EQ(unicode::normalize_digits("\xe0\xa7\xaf"), "9");                           // Bengali
  EXPECT_EQ(unicode::normalize_digits("\xf0\x9d\x9f\x98\xf0\x9d\x9f\xa1"), "09");      // math double-struck
  EXPECT_EQ(unicode::normalize_digits("\xea\xa7\x91"), "1");                           // Javanese
  EXPECT_EQ(unicode::normalize_digits("\xe1\x81\x85"), "5");                           // Myanmar
  EXPECT_EQ(unicode::normalize_digits("x\xff" "1"), "x\xff" "1");
}

// Random text over a small alphabet that stresses separators and marks.
std::string random_text(std::mt19937_64& rng, std::size_t len) {
  static const std::string alphabet = "0123456789012345,,..-+ ae'";
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
  return s;
}

TEST(ScanProperties, CoverageMaximalityDeterminismSoundness) {
  std::mt19937_64 rng(42);
  const std::vector<LocaleRule> rules{LocaleRule::western(), LocaleRule::indian(),
                                      LocaleRule::east_asian()};
  for (int trial = 0; trial < 5000; ++trial) {
    const auto text = random_text(rng, 1 + rng() % 40);
    const auto& rule = rules[rng() % rules.size()];
    const auto segs = scan(text, rule);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const auto& s = segs[i];
      ASSERT_EQ(s.start, pos) << text;
      ASSERT_LT(s.start, s.end) << text;
      if (i > 0) {
        ASSERT_FALSE(segs[i - 1].kind == SegmentKind::text && s.kind == SegmentKind::text);
      }
      pos = s.end;
      if (s.kind != SegmentKind::number) continue;
      ASSERT_TRUE(s.literal.has_value());
      const auto& lit = *s.literal;
      EXPECT_EQ(lit.surface, text.substr(s.start, s.end - s.start));
      EXPECT_FALSE(lit.int_digits.empty());
      EXPECT_EQ(lit.int_digits.find_first_not_of("0123456789"), std::string::npos);
      EXPECT_EQ(lit.frac_digits.find_first_not_of("0123456789"), std::string::npos);
      if (s.start > 0) {
        EXPECT_FALSE(std::isdigit(static_cast<unsigned char>(text[s.start - 1]))) << text;
      }
      if (s.end < text.size()) {
        EXPECT_FALSE(std::isdigit(static_cast<unsigned char>(text[s.end]))) << text;
      }
      EXPECT_EQ(render_surface(lit, rule), lit.surface) << text;
      EXPECT_EQ(parse_literal(lit.surface, rule), lit);
    }
    ASSERT_EQ(pos, text.size()) << text;
    const auto again = scan(text, rule);
    ASSERT_EQ(again.size(), segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i) {
      EXPECT_EQ(again[i].start, segs[i].start);
      EXPECT_EQ(again[i].literal, segs[i].literal);
    }
  }
}

TEST(ScanJson, SegmentFields) {
  const auto j = to_json(scan("a -1,000.5"));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["kind"], "text");
  EXPECT_EQ(j[1]["kind"], "number");
  EXPECT_EQ(j[1]["span"], json::array({2, 10}));
  EXPECT_EQ(j[1]["literal"]["sign"], "minus");
  EXPECT_EQ(j[1]["literal"]["int_digits"], "1000");
  EXPECT_EQ(j[1]["literal"]["frac_digits"], "5");
  EXPECT_EQ(j[1]["literal"]["surface"], "-1,000.5");
}

}  // namespace
}  // namespace tst
