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

// Per-pixel corrections arrays: slant range, ground pixel scale and observed
// temperature for every detector pixel of a mounted camera, plus CSV and
// "TIRC" binary raster export.
//
// Pixel (i, j) looks along the camera-frame ray (tan a_x, tan a_y, 1) with
// a = (index - (n - 1) / 2) * angular pixel scale, pitched forward by phi.
// Row 0 is the near edge of the field of view.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "camera_geometry.hpp"
#include "spectroscopy.hpp"

namespace thermoscope {

enum class GridKind : std::uint32_t { range_m = 0, pixel_scale_m = 1, t_obs_k = 2 };

std::string_view grid_kind_name(GridKind kind) noexcept;
GridKind parse_grid_kind(std::string_view name);

struct GridMetadata {
  CameraModel camera;
  MountConfig mount;
  std::optional<Axis> axis;            // pixel scale grids
  std::optional<double> source_k;      // temperature grids
  std::optional<double> medium_k;      // temperature grids
};

struct CorrectionGrid {
  GridKind kind = GridKind::range_m;
  int width = 0;
  int height = 0;
  std::vector<double> values;  // row-major, row 0 first
  GridMetadata metadata;

  double at(int col, int row) const { return values[static_cast<std::size_t>(row) * width + col]; }
};

/// Slant range along an arbitrary camera-frame ray. Throws horizon if the ray
/// does not reach the ground.
double ray_range(const MountConfig& mount, double alpha_x_deg, double alpha_y_deg);

/// Camera-frame angular offsets of a pixel centre, in degrees.
AxisPair pixel_angles(const CameraModel& camera, int col, int row);

CorrectionGrid range_grid(const CameraModel& camera, const MountConfig& mount);

/// range * tan(angular pixel scale) along `axis` (x or y).
CorrectionGrid pixel_scale_grid(const CameraModel& camera, const MountConfig& mount, Axis axis = Axis::x);

/// Observed temperature of a uniform source at each pixel's slant range.
CorrectionGrid temperature_grid(const CameraModel& camera, const MountConfig& mount, double source_k,
                                double medium_k, const AbsorptionSpectrum& spectrum);

enum class RasterFormat { csv, f32 };

inline constexpr char kRasterMagic[4] = {'T', 'I', 'R', 'C'};
inline constexpr std::size_t kRasterHeaderBytes = 16;

/// CSV: "kind,width,height", then "<kind>,<w>,<h>", then one line per row.
void write_grid_csv(std::ostream& out, const CorrectionGrid& grid);
/// TIRC: magic, u32 LE width, height, kind, then f32 LE values row-major.
void write_grid_f32(std::ostream& out, const CorrectionGrid& grid);
void export_raster(const CorrectionGrid& grid, const std::filesystem::path& path, RasterFormat format);

struct F32Raster {
  GridKind kind = GridKind::range_m;
  int width = 0;
  int height = 0;
  std::vector<float> values;
};

F32Raster read_f32_raster(std::istream& in);
F32Raster read_f32_raster(const std::filesystem::path& path);

}  // namespace thermoscope
