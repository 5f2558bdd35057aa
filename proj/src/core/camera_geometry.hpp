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

// Projection geometry linking drone height, mount angle, camera optics and
// ground-projected pixel sizes. Angles cross every interface in degrees.
//
// Conventions:
//  - phi is the angle between the camera boresight and nadir (0 = straight
//    down). The ground is a plane at `height_m` below the camera.
//  - Detector rows count upward from the near (bottom) edge of the field of
//    view: row 0 is the bottom edge, row pixels_y the top edge, and row j+0.5
//    the centre of pixel j.
//  - Footprints use the full-angle projection 2 h tan(fov/2); pixel scales use
//    h tan(fov/pixels). The two differ slightly at wide fields of view and are
//    never mixed within one operation.

#pragma once

#include <filesystem>
#include <string_view>

namespace thermoscope {

struct CameraModel {
  int pixels_x = 0;
  int pixels_y = 0;
  double fov_x_deg = 0.0;
  double fov_y_deg = 0.0;
  double relative_sensitivity_k = 0.05;
  double absolute_accuracy_k = 5.0;
};

/// Throws a domain error if the camera violates its invariants.
void validate(const CameraModel& camera);

/// FLIR Tau 640 with a 13 mm lens: 640x512 px, 45x37 deg.
CameraModel tau640_camera();

/// Looks up a bundled preset by name ("tau640"). Throws not_found.
CameraModel camera_preset(std::string_view name);

/// Parses a key=value camera description. Keys: pixels_x, pixels_y,
/// fov_x_deg, fov_y_deg, rel_sens_c, abs_acc_c. '#' starts a comment.
CameraModel parse_camera_config(std::string_view text);
CameraModel load_camera_config(const std::filesystem::path& path);

enum class Axis { x, y, coarser };

struct AxisPair {
  double x = 0.0;
  double y = 0.0;
};

struct MountConfig {
  double phi_deg = 0.0;
  double height_m = 0.0;
};

void validate(const MountConfig& mount);

struct GroundFootprint {
  double d_c = 0.0, d_m = 0.0, d_f = 0.0;  // ground distance from nadir along y
  double w_c = 0.0, w_m = 0.0, w_f = 0.0;  // swath width along x
  double r_c = 0.0, r_m = 0.0, r_f = 0.0;  // slant range
};

/// Degrees of field of view per pixel. `Axis::coarser` picks the larger.
double angular_pixel_scale(const CameraModel& camera, Axis axis);

/// Ground metres per pixel looking straight down.
AxisPair nadir_pixel_scale(const CameraModel& camera, double height_m);

/// Inverse of nadir_pixel_scale on one axis.
double height_for_pixel_scale(const CameraModel& camera, double pixel_scale_m, Axis axis = Axis::x);

/// Highest nadir flight height at which a target of `target_m` still spans
/// `min_pixels` pixels along `axis`.
double height_for_target(const CameraModel& camera, double target_m, int min_pixels,
                         Axis axis = Axis::x);

AxisPair nadir_footprint(const CameraModel& camera, double height_m);

/// Trapezoidal footprint of a pitched camera. Throws horizon when the top of
/// the field of view reaches the horizon.
GroundFootprint angled_footprint(const CameraModel& camera, const MountConfig& mount);

/// Flight height putting the centre of the field of view at slant range `r_m`.
double height_for_center_range(const CameraModel& camera, double phi_deg, double r_m);

/// Slant range seen along the column centre at fractional detector row `row`.
double range_for_pixel_row(const CameraModel& camera, const MountConfig& mount, double row);

/// Ground metres per pixel at detector row `row`, per axis.
AxisPair pixel_scale_at(const CameraModel& camera, const MountConfig& mount, double row);

}  // namespace thermoscope
