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

#include "scene_blending.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "error.hpp"

namespace thermoscope {

double blend_temperature(std::span<const SceneComponent> components) {
  require(!components.empty(), "at least one component is required");
  double area = 0.0;
  double weighted = 0.0;
  for (const auto& c : components) {
    require(c.area_fraction >= 0.0, "area fractions must be non-negative");
    require(c.temperature_k >= 0.0, "temperatures must be in kelvin");
    area += c.area_fraction;
    weighted += c.temperature_k * c.area_fraction;
  }
  require(std::abs(area - 1.0) <= 1e-9, "area fractions must sum to 1");
  return weighted / area;
}

double obscured_temperature(double animal_k, double obscurer_k, double cover_fraction) {
  require(cover_fraction >= 0.0 && cover_fraction <= 1.0, "cover fraction must lie in [0, 1]");
  const SceneComponent parts[] = {{animal_k, 1.0 - cover_fraction}, {obscurer_k, cover_fraction}};
  return blend_temperature(parts);
}

namespace {

// Counts of inside samples per pixel for one disc, as integers out of S^2.
// Each sub-row's chord is located analytically and then corrected against the
// exact point test, so the counts match brute-force sampling sample for sample.
std::vector<std::int64_t> coverage_counts(const Disc& disc, int width, int height, int supersample) {
  const std::int64_t s = supersample;
  const double r = disc.diameter_px / 2.0;
  const double r2 = r * r;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(width) * height, 0);

  const std::int64_t total_cols = s * width;
  auto sample = [s](std::int64_t m) { return (static_cast<double>(m) + 0.5) / static_cast<double>(s); };

  const auto row_first = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor((disc.centre_y_px - r) * s)) - 1);
  const auto row_last = std::min<std::int64_t>(s * height - 1, static_cast<std::int64_t>(std::ceil((disc.centre_y_px + r) * s)) + 1);

  std::vector<std::int64_t> diff(static_cast<std::size_t>(width) + 1);
  for (std::int64_t pixel_row = row_first / s; pixel_row <= row_last / s && pixel_row < height; ++pixel_row) {
    std::fill(diff.begin(), diff.end(), 0);
    std::int64_t* row_counts = counts.data() + pixel_row * width;
    for (std::int64_t k = std::max(row_first, pixel_row * s); k <= std::min(row_last, pixel_row * s + s - 1); ++k) {
      const double dy = sample(k) - disc.centre_y_px;
      const double rest = r2 - dy * dy;
      if (rest < 0.0) continue;
      auto inside = [&](std::int64_t m) {
        const double dx = sample(m) - disc.centre_x_px;
        return dx * dx + dy * dy <= r2;
      };
      const double half = std::sqrt(rest);
      auto lo = static_cast<std::int64_t>(std::ceil((disc.centre_x_px - half) * s - 0.5));
      auto hi = static_cast<std::int64_t>(std::floor((disc.centre_x_px + half) * s - 0.5));
      lo = std::clamp<std::int64_t>(lo, 0, total_cols - 1);
      hi = std::clamp<std::int64_t>(hi, 0, total_cols - 1);
      while (lo > 0 && inside(lo - 1)) --lo;
      while (lo <= hi && !inside(lo)) ++lo;
      while (hi + 1 < total_cols && inside(hi + 1)) ++hi;
      while (hi >= lo && !inside(hi)) --hi;
      if (lo > hi) continue;

      const std::int64_t col_lo = lo / s;
      const std::int64_t col_hi = hi / s;
      if (col_lo == col_hi) {
        row_counts[col_lo] += hi - lo + 1;
        continue;
      }
      row_counts[col_lo] += (col_lo + 1) * s - lo;
      row_counts[col_hi] += hi - col_hi * s + 1;
      if (col_hi > col_lo + 1) {
        diff[static_cast<std::size_t>(col_lo + 1)] += s;
        diff[static_cast<std::size_t>(col_hi)] -= s;
      }
    }
    std::int64_t running = 0;
    for (int col = 0; col < width; ++col) {
      running += diff[static_cast<std::size_t>(col)];
      row_counts[col] += running;
    }
  }
  return counts;
}

void check_scene(const SyntheticScene& scene, int supersample) {
  require(scene.width >= 1 && scene.height >= 1, "scene grid must be at least 1x1");
  require(supersample >= 1, "supersample must be >= 1");
  for (const auto& d : scene.discs) require(d.diameter_px > 0.0, "disc diameters must be positive");
}

Raster coverage_raster(const Disc& disc, int width, int height, int supersample) {
  const auto counts = coverage_counts(disc, width, height, supersample);
  const double samples = static_cast<double>(supersample) * supersample;
  Raster raster{width, height, std::vector<double>(counts.size())};
  for (std::size_t i = 0; i < counts.size(); ++i) raster.values[i] = static_cast<double>(counts[i]) / samples;
  return raster;
}

}  // namespace

std::vector<Raster> disc_coverage(const SyntheticScene& scene, int supersample) {
  check_scene(scene, supersample);
  std::vector<Raster> out;
  out.reserve(scene.discs.size());
  for (const auto& disc : scene.discs) out.push_back(coverage_raster(disc, scene.width, scene.height, supersample));
  return out;
}

Raster render_scene(const SyntheticScene& scene, int supersample) {
  check_scene(scene, supersample);
  for (std::size_t i = 0; i < scene.discs.size(); ++i) {
    for (std::size_t j = i + 1; j < scene.discs.size(); ++j) {
      const auto& a = scene.discs[i];
      const auto& b = scene.discs[j];
      const double gap = std::hypot(a.centre_x_px - b.centre_x_px, a.centre_y_px - b.centre_y_px);
      if (gap < (a.diameter_px + b.diameter_px) / 2.0) {
        throw Error(ErrorCode::unsupported_scene, "overlapping discs are not supported");
      }
    }
  }
  const auto coverage = disc_coverage(scene, supersample);
  Raster raster{scene.width, scene.height,
                std::vector<double>(static_cast<std::size_t>(scene.width) * scene.height)};
  std::vector<SceneComponent> parts;
  for (std::size_t p = 0; p < raster.values.size(); ++p) {
    parts.clear();
    double covered = 0.0;
    for (std::size_t d = 0; d < coverage.size(); ++d) {
      const double c = coverage[d].values[p];
      if (c > 0.0) {
        parts.push_back({scene.discs[d].temperature_k, c});
        covered += c;
      }
    }
    if (parts.empty()) {
      raster.values[p] = scene.background_k;
      continue;
    }
    // Touching discs may sum a hair over one from independent sampling.
    if (covered > 1.0) {
      for (auto& part : parts) part.area_fraction /= covered;
      covered = 1.0;
    }
    parts.push_back({scene.background_k, 1.0 - covered});
    raster.values[p] = blend_temperature(parts);
  }
  return raster;
}

std::vector<SpotCurvePoint> spot_size_curve(double t_obj_k, double t_bg_k,
                                            std::span<const double> diameters_px,
                                            const SpotCurveOptions& options) {
  require(t_obj_k != t_bg_k, "object and background temperatures must differ");
  require(options.supersample >= 1 && options.placements >= 1, "supersample and placements must be >= 1");
  require(options.coverage_threshold >= 0.0 && options.coverage_threshold < 1.0,
          "coverage threshold must lie in [0, 1)");
  const double samples = static_cast<double>(options.supersample) * options.supersample;
  const auto threshold_count = options.coverage_threshold * samples;

  std::vector<SpotCurvePoint> curve;
  curve.reserve(diameters_px.size());
  for (const double diameter : diameters_px) {
    require(diameter > 0.0, "diameters must be positive");
    const int grid = 2 * static_cast<int>(std::ceil(diameter / 2.0)) + 4;
    double filled_sum = 0.0;
    for (int a = 0; a < options.placements; ++a) {
      for (int b = 0; b < options.placements; ++b) {
        const double ox = (a + 0.5) / options.placements - 0.5;
        const double oy = (b + 0.5) / options.placements - 0.5;
        const Disc disc{grid / 2.0 + ox, grid / 2.0 + oy, diameter, t_obj_k};
        const auto counts = coverage_counts(disc, grid, grid, options.supersample);
        std::int64_t covered = 0;
        std::int64_t pixels = 0;
        for (const auto c : counts) {
          if (c > 0 && static_cast<double>(c) > threshold_count) {
            covered += c;
            ++pixels;
          }
        }
        if (pixels > 0) filled_sum += static_cast<double>(covered) / samples / static_cast<double>(pixels);
      }
    }
    const double filled = filled_sum / (static_cast<double>(options.placements) * options.placements);
    curve.push_back({diameter, t_bg_k + (t_obj_k - t_bg_k) * filled, 1.0 - filled});
  }
  return curve;
}

int min_resolvable_diameter(double t_obj_k, double t_bg_k, double max_relative_error,
                            const SpotCurveOptions& options, int max_diameter_px) {
  require(max_relative_error > 0.0 && max_relative_error < 1.0,
          "maximum relative error must lie in (0, 1)");
  for (int d = 1; d <= max_diameter_px; ++d) {
    const double diameter = d;
    const auto point = spot_size_curve(t_obj_k, t_bg_k, std::span(&diameter, 1), options);
    if (point.front().relative_error <= max_relative_error) return d;
  }
  throw_domain("no diameter up to " + std::to_string(max_diameter_px) + " px meets the error bound");
}

}  // namespace thermoscope
