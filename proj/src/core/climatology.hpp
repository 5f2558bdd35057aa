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

// Land-surface-temperature climatology: four daily overpasses per day of year,
// periodic spline diurnal curves, solar time, and observation windows.

#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thermoscope {

enum class Overpass { t0130, t1030, t1330, t2230 };

inline constexpr std::array<Overpass, 4> kOverpasses = {Overpass::t0130, Overpass::t1030,
                                                        Overpass::t1330, Overpass::t2230};

/// Local solar time of the overpass in hours (1.5, 10.5, 13.5, 22.5).
double overpass_hours(Overpass overpass) noexcept;
std::string_view overpass_code(Overpass overpass) noexcept;
/// "0130", "1030", "1330" or "2230"; anything else throws parse.
Overpass parse_overpass(std::string_view code);

struct LstRecord {
  double latitude_deg = 0.0;
  double longitude_deg = 0.0;
  int day_of_year = 1;
  Overpass overpass = Overpass::t0130;
  double mean_k = 0.0;
  double two_sigma_k = 0.0;
};

inline constexpr std::string_view kClimatologyHeader = "lat,lon,doy,overpass,mean_k,two_sigma_k";

std::vector<LstRecord> parse_climatology(std::istream& in);
std::vector<LstRecord> parse_climatology(std::string_view text);
std::vector<LstRecord> load_climatology(const std::filesystem::path& path);
void write_climatology(std::ostream& out, std::span<const LstRecord> records);

/// Cubic spline through (x_i, y_i) on a circle of circumference `period`, with
/// value, slope and curvature continuous everywhere including the wrap.
class PeriodicCubicSpline {
 public:
  PeriodicCubicSpline() = default;
  PeriodicCubicSpline(std::vector<double> x, std::vector<double> y, double period);

  double operator()(double x) const;
  double derivative(double x) const;
  double period() const { return period_; }
  std::span<const double> second_derivatives() const { return m_; }

 private:
  std::size_t segment(double& x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;
  double period_ = 0.0;
};

struct DiurnalKnot {
  double solar_h = 0.0;
  double mean_k = 0.0;
  double two_sigma_k = 0.0;
};

class DiurnalCurve {
 public:
  DiurnalCurve(int day_of_year, std::array<DiurnalKnot, 4> knots);

  int day_of_year() const { return day_; }
  const std::array<DiurnalKnot, 4>& knots() const { return knots_; }
  double mean(double solar_h) const { return mean_(solar_h); }
  double two_sigma(double solar_h) const { return sigma_(solar_h); }
  /// Conservative ground temperature, mean + 2 sigma.
  double upper(double solar_h) const { return mean(solar_h) + two_sigma(solar_h); }
  double mean_derivative(double solar_h) const { return mean_.derivative(solar_h); }

 private:
  int day_;
  std::array<DiurnalKnot, 4> knots_;
  PeriodicCubicSpline mean_;
  PeriodicCubicSpline sigma_;
};

/// Throws incomplete_day unless all four overpasses exist for the day.
DiurnalCurve diurnal_curve(std::span<const LstRecord> records, int day_of_year);

/// Equation of time in minutes (apparent minus mean solar time).
double equation_of_time_min(int day_of_year, double clock_h = 12.0);
/// Minutes to add to clock time to get local solar time.
double solar_time_offset_min(double longitude_deg, double utc_offset_h, int day_of_year);

struct ObservationWindow {
  double start_h = 0.0;
  double end_h = 0.0;
  double worst_case_contrast_k = 0.0;
};

inline constexpr int kMinutesPerDay = 24 * 60;

/// Maximal runs of minutes m (covering [m, m+1) min) where
/// animal - upper(m) >= min_contrast. Runs touching midnight are not merged.
std::vector<ObservationWindow> contrast_windows(const DiurnalCurve& curve, double animal_k,
                                                double min_contrast_k);

struct SeasonRange {
  int start_doy = 1;
  int end_doy = 1;  // inclusive, may wrap past the year end
  double mean_daily_min_k = 0.0;
  double best_contrast_k = 0.0;
};

/// Contiguous runs of cool days, ranked coolest first. A day is cool when its
/// daily minimum of mean + 2 sigma lies in the lowest quarter of the range
/// seen over the year. Needs at least 300 complete days.
std::vector<SeasonRange> best_season(std::span<const LstRecord> records, double animal_k);

struct BackgroundEstimate {
  double mean_k = 0.0;
  double two_sigma_k = 0.0;
  std::size_t samples = 0;
};

/// Mean and two standard deviations of the coolest half of the values.
BackgroundEstimate background_estimate(std::span<const double> values_k);

}  // namespace thermoscope
