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

// Area-weighted blending of several temperatures inside one pixel, synthetic
// disc scenes, and the spot-size curve behind the minimum resolvable size.
//
// Blending is linear in temperature. Pixel (col, row) covers the square
// [col, col+1) x [row, row+1) in pixel coordinates.

#pragma once

#include <span>
#include <vector>

namespace thermoscope {

struct SceneComponent {
  double temperature_k = 0.0;
  double area_fraction = 0.0;
};

/// Sum of T_i A_i over areas that must add up to one (within 1e-9).
double blend_temperature(std::span<const SceneComponent> components);

/// An animal partly hidden under cover at a different temperature.
double obscured_temperature(double animal_k, double obscurer_k, double cover_fraction);

struct Disc {
  double centre_x_px = 0.0;
  double centre_y_px = 0.0;
  double diameter_px = 0.0;
  double temperature_k = 0.0;
};

struct SyntheticScene {
  int width = 1;
  int height = 1;
  double background_k = 0.0;
  std::vector<Disc> discs;
};

struct Raster {
  int width = 0;
  int height = 0;
  std::vector<double> values;  // row-major

  double at(int col, int row) const { return values[static_cast<std::size_t>(row) * width + col]; }
};

/// Fraction of each pixel inside each disc, one raster per disc, from
/// supersample x supersample midpoint sampling. A sample at distance exactly
/// r from the centre counts as inside.
std::vector<Raster> disc_coverage(const SyntheticScene& scene, int supersample = 64);

/// Per-pixel blend of discs over the background. Overlapping discs are
/// rejected as unsupported.
Raster render_scene(const SyntheticScene& scene, int supersample = 64);

struct SpotCurvePoint {
  double diameter_px = 0.0;
  double mean_recorded_k = 0.0;
  double relative_error = 0.0;  // |mean - T_obj| / |T_obj - T_bg|
};

struct SpotCurveOptions {
  int supersample = 64;
  /// Disc centres are placed on a placements x placements grid of sub-pixel
  /// offsets and the results averaged.
  int placements = 8;
  /// Pixels with coverage above this count as containing the object.
  double coverage_threshold = 0.0;
};

/// Mean recorded temperature over the pixels a disc touches, per diameter.
std::vector<SpotCurvePoint> spot_size_curve(double t_obj_k, double t_bg_k,
                                            std::span<const double> diameters_px,
                                            const SpotCurveOptions& options = {});

/// Smallest whole diameter whose spot-size error is at most
/// `max_relative_error`. Throws domain if none is found up to `max_diameter_px`.
int min_resolvable_diameter(double t_obj_k, double t_bg_k, double max_relative_error = 0.05,
                            const SpotCurveOptions& options = {}, int max_diameter_px = 2000);

}  // namespace thermoscope
