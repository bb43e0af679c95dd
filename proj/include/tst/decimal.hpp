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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tst {

/// Exact value of a single token: coefficient x 10^exponent.
struct ExactValue {
  std::int64_t coefficient = 0;
  int exponent = 0;

  friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

/// Arbitrary-size exact decimal, kept normalized so that equality is
/// rational equality: digits has no leading zeros and no trailing zeros
/// (those move into the exponent), and zero is always "+0 x 10^0".
class Decimal {
 public:
  Decimal() = default;

  /// Builds sign x int_digits.frac_digits. Both strings must be ASCII digits.
  static Decimal from_parts(bool negative, std::string_view int_digits,
                            std::string_view frac_digits) {
    Decimal d;
    std::string all;
    all.reserve(int_digits.size() + frac_digits.size());
    all.append(int_digits);
    all.append(frac_digits);
    d.exponent_ = -static_cast<int>(frac_digits.size());
    const auto first = all.find_first_not_of('0');
    if (first == std::string::npos) {
      d.digits_ = "0";
      d.exponent_ = 0;
      return d;
    }
    all.erase(0, first);
    const auto last = all.find_last_not_of('0');
    d.exponent_ += static_cast<int>(all.size() - 1 - last);
    all.erase(last + 1);
    d.digits_ = std::move(all);
    d.negative_ = negative;
    return d;
  }

  bool negative() const noexcept { return negative_; }
  bool is_zero() const noexcept { return digits_ == "0"; }
  const std::string& digits() const noexcept { return digits_; }
  int exponent() const noexcept { return exponent_; }

  /// Plain positional rendering without exponent notation, e.g. "-0.0045".
  std::string to_string() const {
    std::string out;
    if (negative_) out.push_back('-');
    if (exponent_ >= 0) {
      out += digits_;
      out.append(static_cast<std::size_t>(exponent_), '0');
      return out;
    }
    const auto frac_len = static_cast<std::size_t>(-exponent_);
    if (digits_.size() > frac_len) {
      out.append(digits_, 0, digits_.size() - frac_len);
      out.push_back('.');
      out.append(digits_, digits_.size() - frac_len);
    } else {
      out += "0.";
      out.append(frac_len - digits_.size(), '0');
      out += digits_;
    }
    return out;
  }

  friend bool operator==(const Decimal&, const Decimal&) = default;

 private:
  bool negative_ = false;
  std::string digits_ = "0";
  int exponent_ = 0;
};

}  // namespace tst
