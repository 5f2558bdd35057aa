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

#include "camera_geometry.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "error.hpp"
#include "text.hpp"
#include "units.hpp"

namespace thermoscope {

void validate(const CameraModel& camera) {
  require(camera.pixels_x >= 1 && camera.pixels_y >= 1, "camera pixel counts must be >= 1");
  require(camera.fov_x_deg > 0.0 && camera.fov_x_deg < 180.0 && camera.fov_y_deg > 0.0 &&
              camera.fov_y_deg < 180.0,
          "camera field of view must lie in (0, 180) degrees");
  require(camera.relative_sensitivity_k > 0.0 && camera.absolute_accuracy_k > 0.0,
          "camera sensitivities must be positive");
}

CameraModel tau640_camera() { return CameraModel{640, 512, 45.0, 37.0, 0.05, 5.0}; }

CameraModel camera_preset(std::string_view name) {
  if (name == "tau640") return tau640_camera();
  throw Error(ErrorCode::not_found, "unknown camera preset '" + std::string(name) + "'");
}

namespace {

using text::trim;

double parse_number(std::string_view text, std::size_t line) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::parse, "not a number: '" + std::string(text) + "'", line);
  }
  return value;
}

}  // namespace

CameraModel parse_camera_config(std::string_view text) {
  std::map<std::string, double, std::less<>> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    ++line_no;
    auto line = text.substr(pos, next - pos);
    pos = next + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::parse, "expected key=value", line_no);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    static constexpr std::string_view known[] = {"pixels_x",  "pixels_y",   "fov_x_deg",
                                                 "fov_y_deg", "rel_sens_c", "abs_acc_c"};
    bool ok = false;
    for (auto k : known) ok = ok || k == key;
    if (!ok) throw Error(ErrorCode::parse, "unknown key '" + std::string(key) + "'", line_no);
    values[std::string(key)] = parse_number(value, line_no);
  }

  auto get = [&](std::string_view key) {
    const auto it = values.find(key);
    if (it == values.end()) throw Error(ErrorCode::parse, "missing key '" + std::string(key) + "'");
    return it->second;
  };
  auto get_or = [&](std::string_view key, double fallback) {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  };

  const double px = get("pixels_x");
  const double py = get("pixels_y");
  if (px != std::floor(px) || py != std::floor(py)) {
    throw Error(ErrorCode::parse, "pixel counts must be integers");
  }
  CameraModel camera{static_cast<int>(px),     static_cast<int>(py),     get("fov_x_deg"),
                     get("fov_y_deg"),         get_or("rel_sens_c", 0.05), get_or("abs_acc_c", 5.0)};
  validate(camera);
  return camera;
}

CameraModel load_camera_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open camera config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_camera_config(buffer.str());
}

void validate(const MountConfig& mount) {
  require(mount.phi_deg >= 0.0 && mount.phi_deg < 90.0, "mount angle must lie in [0, 90) degrees");
  require(mount.height_m > 0.0, "flight height must be positive");
}

double angular_pixel_scale(const CameraModel& camera, Axis axis) {
  validate(camera);
  const double x = camera.fov_x_deg / camera.pixels_x;
  const double y = camera.fov_y_deg / camera.pixels_y;
  switch (axis) {
    case Axis::x: return x;
    case Axis::y: return y;
    case Axis::coarser: return std::max(x, y);
  }
  return x;
}

AxisPair nadir_pixel_scale(const CameraModel& camera, double height_m) {
  require(height_m > 0.0, "flight height must be positive");
  return {height_m * std::tan(radians(angular_pixel_scale(camera, Axis::x))),
          height_m * std::tan(radians(angular_pixel_scale(camera, Axis::y)))};
}

double height_for_pixel_scale(const CameraModel& camera, double pixel_scale_m, Axis axis) {
  require(pixel_scale_m > 0.0, "pixel scale must be positive");
  return pixel_scale_m / std::tan(radians(angular_pixel_scale(camera, axis)));
}

double height_for_target(const CameraModel& camera, double target_m, int min_pixels, Axis axis) {
  require(target_m > 0.0, "target length must be positive");
  require(min_pixels >= 1, "minimum pixel count must be >= 1");
  return height_for_pixel_scale(camera, target_m / min_pixels, axis);
}

AxisPair nadir_footprint(const CameraModel& camera, double height_m) {
  validate(camera);
  require(height_m >= 0.0, "flight height must be non-negative");
  return {2.0 * height_m * std::tan(radians(camera.fov_x_deg / 2.0)),
          2.0 * height_m * std::tan(radians(camera.fov_y_deg / 2.0))};
}

GroundFootprint angled_footprint(const CameraModel& camera, const MountConfig& mount) {
  validate(camera);
  validate(mount);
  if (mount.phi_deg + camera.fov_y_deg / 2.0 >= 90.0) {
    throw Error(ErrorCode::horizon, "top of the field of view reaches the horizon");
  }
  const double h = mount.height_m;
  const double half_y = camera.fov_y_deg / 2.0;
  const double tan_half_x = std::tan(radians(camera.fov_x_deg / 2.0));

  GroundFootprint fp;
  fp.d_c = h * std::tan(radians(mount.phi_deg - half_y));
  fp.d_f = h * std::tan(radians(mount.phi_deg + half_y));
  fp.d_m = h * std::tan(radians(mount.phi_deg));
  fp.r_c = std::hypot(h, fp.d_c);
  fp.r_m = std::hypot(h, fp.d_m);
  fp.r_f = std::hypot(h, fp.d_f);
  // Swath widths follow the slant range to the near edge, the mid-distance
  // point and the far edge.
  fp.w_c = 2.0 * fp.r_c * tan_half_x;
  fp.w_m = 2.0 * std::hypot(h, (fp.d_c + fp.d_f) / 2.0) * tan_half_x;
  fp.w_f = 2.0 * fp.r_f * tan_half_x;
  return fp;
}

double height_for_center_range(const CameraModel& camera, double phi_deg, double r_m) {
  validate(camera);
  require(r_m > 0.0, "centre range must be positive");
  require(phi_deg >= 0.0 && phi_deg < 90.0, "mount angle must lie in [0, 90) degrees");
  return r_m * std::cos(radians(phi_deg));
}

double range_for_pixel_row(const CameraModel& camera, const MountConfig& mount, double row) {
  validate(camera);
  validate(mount);
  require(row >= 0.0 && row <= camera.pixels_y, "row must lie in [0, pixels_y]");
  const double ray_deg = (mount.phi_deg - camera.fov_y_deg / 2.0) +
                         angular_pixel_scale(camera, Axis::y) * row;
  if (ray_deg >= 90.0) throw Error(ErrorCode::horizon, "ray at or above the horizon");
  return mount.height_m / std::cos(radians(ray_deg));
}

AxisPair pixel_scale_at(const CameraModel& camera, const MountConfig& mount, double row) {
  const double r = range_for_pixel_row(camera, mount, row);
  return {r * std::tan(radians(angular_pixel_scale(camera, Axis::x))),
          r * std::tan(radians(angular_pixel_scale(camera, Axis::y)))};
}

}  // namespace thermoscope
