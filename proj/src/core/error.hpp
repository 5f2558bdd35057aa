// Copyright 2026 The Thermoscope Authors
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
#include <stdexcept>
#include <string>
#include <string_view>

namespace thermoscope {

enum class ErrorCode {
  domain,
  horizon,
  parse,
  load,
  io,
  incomplete_day,
  insufficient_coverage,
  unsupported_scene,
  not_found,
  bad_request,
  use_artifact,
};

/// Machine-readable name of an error code, as it appears on the wire.
std::string_view error_code_name(ErrorCode code) noexcept;

/// The single exception type thrown by the core. `line()` is the 1-based
/// input line or row for parse/load failures, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

[[noreturn]] void throw_domain(const std::string& message);

inline void require(bool condition, const std::string& message) {
  if (!condition) throw_domain(message);
}

}  // namespace thermoscope
