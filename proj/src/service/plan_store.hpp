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

// File-backed store of saved mission plans: one JSON document per plan,
// named by a random 32-hex-digit id. Writes go to a temporary file that is
// renamed into place, so readers never see a partial record.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace thermoscope {

struct PlanRecord {
  std::string id;
  std::string created_at;  // ISO 8601 UTC with microseconds
  nlohmann::json spec;
  nlohmann::json plan;
};

struct PlanSummary {
  std::string id;
  std::string created_at;
};

bool is_plan_id(std::string_view id) noexcept;

/// Writes `content` next to `path` and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Random 32-hex-digit token.
std::string random_token();

class PlanStore {
 public:
  explicit PlanStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  PlanRecord put(nlohmann::json spec, nlohmann::json plan);
  std::optional<PlanRecord> get(std::string_view id) const;
  /// Sorted by created_at, then id.
  std::vector<PlanSummary> list() const;
  bool remove(std::string_view id);

 private:
  std::filesystem::path path_for(std::string_view id) const;

  std::filesystem::path root_;
};

}  // namespace thermoscope
