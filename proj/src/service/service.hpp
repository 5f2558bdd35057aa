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

// Request router for the /v1 JSON API. Transport-free: the HTTP server, the
// C API and the CLI all pass (method, path, body) through Service::handle.

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "climatology.hpp"
#include "plan_store.hpp"
#include "spectroscopy.hpp"

namespace thermoscope {

inline constexpr std::string_view kVersion = "0.1.0";

struct ServiceConfig {
  std::filesystem::path data_dir;
  std::filesystem::path store_dir;
  /// Accept absolute or working-directory file references and output_file.
  /// Off for the network server, where files resolve under data_dir only.
  bool allow_local_paths = false;
  /// Largest corrections grid side returned inline.
  int inline_grid_limit = 64;
};

/// data_dir from THERMOSCOPE_DATA (else the build-time default), store_dir
/// from THERMOSCOPE_STORE (else ./thermoscope-store).
ServiceConfig default_service_config();

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

class Service {
 public:
  explicit Service(ServiceConfig config);

  const ServiceConfig& config() const { return config_; }

  /// Never throws; failures become JSON error bodies.
  Response handle(std::string_view method, std::string_view path, std::string_view body);

 private:
  using Json = nlohmann::json;

  Json route(std::string_view method, std::string_view path, const Json& body, Response& raw);

  Json health() const;
  Json geometry_height(const Json& body) const;
  Json geometry_footprint(const Json& body) const;
  Json atmosphere_transmission(const Json& body);
  Json atmosphere_path(const Json& body);
  Json fog_transmission(const Json& body) const;
  Json fog_delta(const Json& body);
  Json blend(const Json& body) const;
  Json blend_scene(const Json& body) const;
  Json spot_curve(const Json& body) const;
  Json climatology_curve(const Json& body);
  Json climatology_season(const Json& body);
  Json climatology_windows(const Json& body);
  Json corrections(const Json& body);
  Json plan(const Json& body);

  /// Finds a referenced file: the working directory (local callers only),
  /// then data_dir, then data_dir/subdir.
  std::filesystem::path resolve(const std::string& name, std::string_view subdir = {}) const;
  std::shared_ptr<const AbsorptionSpectrum> spectrum(const Json& ref, std::string_view fallback_preset);
  std::shared_ptr<const std::vector<LstRecord>> climatology(const Json& ref);

  ServiceConfig config_;
  PlanStore store_;
  std::mutex cache_mutex_;
  std::map<std::string, std::shared_ptr<const AbsorptionSpectrum>> spectra_;
  std::map<std::string, std::shared_ptr<const std::vector<LstRecord>>> climatologies_;
};

}  // namespace thermoscope
