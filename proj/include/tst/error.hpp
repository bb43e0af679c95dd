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

#include <stdexcept>
#include <string>
#include <string_view>

namespace tst {

/// Stable error identifiers. The string forms returned by to_string() are
/// part of the public contract (CLI error records, bindings).
enum class ErrorCode {
  malformed_literal,
  invalid_config,
  level_overflow,
  depth_overflow,
  out_of_range_marker,
  non_value_token,
  // token-sequence rules, reported by validate() and raised by decode()
  unknown_token,
  sign_position,
  terminator,
  decimal_point,
  integer_levels,
  fraction_depths,
  padding,
  io_error,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::malformed_literal: return "malformed_literal";
    case ErrorCode::invalid_config: return "invalid_config";
    case ErrorCode::level_overflow: return "level_overflow";
    case ErrorCode::depth_overflow: return "depth_overflow";
    case ErrorCode::out_of_range_marker: return "out_of_range_marker";
    case ErrorCode::non_value_token: return "non_value_token";
    case ErrorCode::unknown_token: return "unknown_token";
    case ErrorCode::sign_position: return "sign_position";
    case ErrorCode::terminator: return "terminator";
    case ErrorCode::decimal_point: return "decimal_point";
    case ErrorCode::integer_levels: return "integer_levels";
    case ErrorCode::fraction_depths: return "fraction_depths";
    case ErrorCode::padding: return "padding";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tst
