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

#include "error.hpp"

namespace thermoscope {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::horizon: return "horizon";
    case ErrorCode::parse: return "parse";
    case ErrorCode::load: return "load";
    case ErrorCode::io: return "io";
    case ErrorCode::incomplete_day: return "incomplete_day";
    case ErrorCode::insufficient_coverage: return "insufficient_coverage";
    case ErrorCode::unsupported_scene: return "unsupported_scene";
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::bad_request: return "bad_request";
    case ErrorCode::use_artifact: return "use_artifact";
  }
  return "unknown";
}

namespace {

std::string with_line(const std::string& message, std::size_t line) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(with_line(message, line)), code_(code), line_(line) {}

void throw_domain(const std::string& message) {
  throw Error(ErrorCode::domain, message);
}

}  // namespace thermoscope
