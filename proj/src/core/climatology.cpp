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

#include "climatology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "error.hpp"
#include "text.hpp"

namespace thermoscope {

double overpass_hours(Overpass overpass) noexcept {
  switch (overpass) {
    case Overpass::t0130: return 1.5;
    case Overpass::t1030: return 10.5;
    case Overpass::t1330: return 13.5;
    case Overpass::t2230: return 22.5;
  }
  return 0.0;
}

std::string_view overpass_code(Overpass overpass) noexcept {
  switch (overpass) {
    case Overpass::t0130: return "0130";
    case Overpass::t1030: return "1030";
    case Overpass::t1330: return "1330";
    case Overpass::t2230: return "2230";
  }
  return "";
}

Overpass parse_overpass(std::string_view code) {
  for (const auto o : kOverpasses) {
    if (overpass_code(o) == code) return o;
  }
  throw Error(ErrorCode::parse, "overpass must be one of 0130, 1030, 1330, 2230, got '" + std::string(code) + "'");
}

std::vector<LstRecord> parse_climatology(std::istream& in) {
  std::vector<LstRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::map<std::pair<int, Overpass>, std::size_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = text::trim(line);
    if (row.empty()) continue;
    if (!header_seen) {
      if (row != kClimatologyHeader) {
        throw Error(ErrorCode::load, "bad header, expected '" + std::string(kClimatologyHeader) + "'", line_no);
      }
      header_seen = true;
      continue;
    }
    const auto fields = text::split(row, ',');
    if (fields.size() != 6) throw Error(ErrorCode::load, "expected 6 fields", line_no);
    LstRecord r;
    if (!text::to_double(fields[0], r.latitude_deg) || !text::to_double(fields[1], r.longitude_deg) ||
        !text::to_int(fields[2], r.day_of_year) || !text::to_double(fields[4], r.mean_k) ||
        !text::to_double(fields[5], r.two_sigma_k)) {
      throw Error(ErrorCode::load, "non-numeric field", line_no);
    }
    try {
      r.overpass = parse_overpass(fields[3]);
    } catch (const Error& e) {
      throw Error(ErrorCode::load, e.what(), line_no);
    }
    if (std::abs(r.latitude_deg) > 90.0 || std::abs(r.longitude_deg) > 180.0) {
      throw Error(ErrorCode::load, "latitude or longitude out of range", line_no);
    }
    if (r.day_of_year < 1 || r.day_of_year > 366) throw Error(ErrorCode::load, "doy must lie in 1..366", line_no);
    if (r.mean_k <= 0.0) throw Error(ErrorCode::load, "mean_k must be a positive kelvin value", line_no);
    if (r.two_sigma_k < 0.0) throw Error(ErrorCode::load, "two_sigma_k must be >= 0", line_no);
    const auto [it, inserted] = seen.emplace(std::pair{r.day_of_year, r.overpass}, line_no);
    if (!inserted) {
      throw Error(ErrorCode::load,
                  "duplicate doy " + std::to_string(r.day_of_year) + " overpass " +
                      std::string(overpass_code(r.overpass)) + " (first on line " + std::to_string(it->second) + ")",
                  line_no);
    }
    records.push_back(r);
  }
  return records;
}

std::vector<LstRecord> parse_climatology(std::string_view body) {
  std::istringstream in{std::string(body)};
  return parse_climatology(in);
}

std::vector<LstRecord> load_climatology(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open climatology " + path.string());
  try {
    return parse_climatology(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_climatology(std::ostream& out, std::span<const LstRecord> records) {
  out << kClimatologyHeader << '\n';
  for (const auto& r : records) {
    out << text::format_double(r.latitude_deg) << ',' << text::format_double(r.longitude_deg) << ','
        << r.day_of_year << ',' << overpass_code(r.overpass) << ',' << text::format_double(r.mean_k) << ','
        << text::format_double(r.two_sigma_k) << '\n';
  }
}

PeriodicCubicSpline::PeriodicCubicSpline(std::vector<double> x, std::vector<double> y, double period)
    : x_(std::move(x)), y_(std::move(y)), period_(period) {
  const std::size_t n = x_.size();
  require(n >= 1 && y_.size() == n, "spline needs matching, non-empty knot arrays");
  require(period_ > 0.0, "spline period must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    require(std::isfinite(x_[i]) && std::isfinite(y_[i]), "spline knots must be finite");
    if (i > 0) require(x_[i] > x_[i - 1], "spline knots must be strictly increasing");
  }
  require(x_.back() - x_.front() < period_, "spline knots must span less than one period");
  m_.assign(n, 0.0);
  if (n == 1) return;
  auto h = [&](std::size_t i) {
    return (i + 1 < n ? x_[i + 1] : x_[0] + period_) - x_[i];
  };
  auto slope = [&](std::size_t i) { return (y_[(i + 1) % n] - y_[i]) / h(i); };

  // Dense cyclic tridiagonal system in the second derivatives.
  std::vector<double> a(n * n, 0.0);
  std::vector<double> b(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const std::size_t next = (i + 1) % n;
    a[i * n + prev] += h(prev);
    a[i * n + i] += 2.0 * (h(prev) + h(i));
    a[i * n + next] += h(i);
    b[i] = 6.0 * (slope(i) - slope(prev));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[pivot * n + k]);
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double sum = b[i];
    for (std::size_t k = i + 1; k < n; ++k) sum -= a[i * n + k] * m_[k];
    m_[i] = sum / a[i * n + i];
  }
}

std::size_t PeriodicCubicSpline::segment(double& x) const {
  x = x_.front() + std::fmod(x - x_.front(), period_);
  if (x < x_.front()) x += period_;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double PeriodicCubicSpline::operator()(double x) const {
  if (x_.size() == 1) return y_.front();
  const std::size_t i = segment(x);
  const std::size_t j = (i + 1) % x_.size();
  const double x1 = i + 1 < x_.size() ? x_[i + 1] : x_.front() + period_;
  const double h = x1 - x_[i];
  const double t = (x - x_[i]) / h;
  const double a = 1.0 - t;
  return a * y_[i] + t * y_[j] + h * h / 6.0 * ((a * a * a - a) * m_[i] + (t * t * t - t) * m_[j]);
}

double PeriodicCubicSpline::derivative(double x) const {
  if (x_.size() == 1) return 0.0;
  const std::size_t i = segment(x);
  const std::size_t j = (i + 1) % x_.size();
  const double x1 = i + 1 < x_.size() ? x_[i + 1] : x_.front() + period_;
  const double h = x1 - x_[i];
  const double t = (x - x_[i]) / h;
  const double a = 1.0 - t;
  return (y_[j] - y_[i]) / h + h / 6.0 * (-(3.0 * a * a - 1.0) * m_[i] + (3.0 * t * t - 1.0) * m_[j]);
}

namespace {

std::vector<double> knot_column(const std::array<DiurnalKnot, 4>& knots, double DiurnalKnot::*member) {
  std::vector<double> out;
  for (const auto& k : knots) out.push_back(k.*member);
  return out;
}

}  // namespace

DiurnalCurve::DiurnalCurve(int day_of_year, std::array<DiurnalKnot, 4> knots)
    : day_(day_of_year), knots_(knots) {
  std::sort(knots_.begin(), knots_.end(),
            [](const DiurnalKnot& a, const DiurnalKnot& b) { return a.solar_h < b.solar_h; });
  const auto hours = knot_column(knots_, &DiurnalKnot::solar_h);
  mean_ = PeriodicCubicSpline(hours, knot_column(knots_, &DiurnalKnot::mean_k), 24.0);
  sigma_ = PeriodicCubicSpline(hours, knot_column(knots_, &DiurnalKnot::two_sigma_k), 24.0);
}

DiurnalCurve diurnal_curve(std::span<const LstRecord> records, int day_of_year) {
  std::array<const LstRecord*, 4> found{};
  for (const auto& r : records) {
    if (r.day_of_year != day_of_year) continue;
    found[static_cast<std::size_t>(r.overpass)] = &r;
  }
  std::array<DiurnalKnot, 4> knots;
  std::string missing;
  for (std::size_t i = 0; i < 4; ++i) {
    if (found[i] == nullptr) {
      missing += missing.empty() ? "" : ", ";
      missing += overpass_code(kOverpasses[i]);
      continue;
    }
    knots[i] = {overpass_hours(kOverpasses[i]), found[i]->mean_k, found[i]->two_sigma_k};
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::incomplete_day,
                "day " + std::to_string(day_of_year) + " is missing overpass " + missing);
  }
  return DiurnalCurve(day_of_year, knots);
}

double equation_of_time_min(int day_of_year, double clock_h) {
  const double g = 2.0 * std::numbers::pi / 365.0 * (day_of_year - 1 + (clock_h - 12.0) / 24.0);
  return 229.18 * (0.000075 + 0.001868 * std::cos(g) - 0.032077 * std::sin(g) - 0.014615 * std::cos(2.0 * g) -
                   0.040849 * std::sin(2.0 * g));
}

double solar_time_offset_min(double longitude_deg, double utc_offset_h, int day_of_year) {
  require(std::abs(longitude_deg) <= 180.0, "longitude must lie in [-180, 180]");
  require(std::abs(utc_offset_h) <= 14.0, "utc offset must lie in [-14, 14] h");
  return 4.0 * (longitude_deg - 15.0 * utc_offset_h) + equation_of_time_min(day_of_year);
}

std::vector<ObservationWindow> contrast_windows(const DiurnalCurve& curve, double animal_k, double min_contrast_k) {
  require(min_contrast_k >= 0.0, "minimum contrast must be >= 0");
  std::vector<ObservationWindow> windows;
  bool open = false;
  int start = 0;
  double worst = 0.0;
  for (int m = 0; m <= kMinutesPerDay; ++m) {
    const bool last = m == kMinutesPerDay;
    const double contrast = last ? 0.0 : animal_k - curve.upper(m / 60.0);
    const bool ok = !last && contrast >= min_contrast_k;
    if (ok && !open) {
      open = true;
      start = m;
      worst = contrast;
    } else if (ok) {
      worst = std::min(worst, contrast);
    } else if (open) {
      windows.push_back({start / 60.0, m / 60.0, worst});
      open = false;
    }
  }
  return windows;
}

std::vector<SeasonRange> best_season(std::span<const LstRecord> records, double animal_k) {
  int days = 365;
  for (const auto& r : records) days = std::max(days, r.day_of_year);

  std::vector<std::array<const LstRecord*, 4>> by_day(static_cast<std::size_t>(days) + 1);
  for (const auto& r : records) by_day[static_cast<std::size_t>(r.day_of_year)][static_cast<std::size_t>(r.overpass)] = &r;

  std::vector<double> score(static_cast<std::size_t>(days) + 1, 0.0);
  std::vector<bool> present(static_cast<std::size_t>(days) + 1, false);
  int complete = 0;
  for (int d = 1; d <= days; ++d) {
    const auto& slots = by_day[static_cast<std::size_t>(d)];
    if (std::any_of(slots.begin(), slots.end(), [](const LstRecord* p) { return p == nullptr; })) continue;
    std::array<DiurnalKnot, 4> knots;
    for (std::size_t i = 0; i < 4; ++i) knots[i] = {overpass_hours(kOverpasses[i]), slots[i]->mean_k, slots[i]->two_sigma_k};
    const DiurnalCurve curve(d, knots);
    double low = curve.upper(0.0);
    for (int m = 1; m < kMinutesPerDay; ++m) low = std::min(low, curve.upper(m / 60.0));
    score[static_cast<std::size_t>(d)] = low;
    present[static_cast<std::size_t>(d)] = true;
    ++complete;
  }
  if (complete < 300) {
    throw Error(ErrorCode::insufficient_coverage,
                "best season needs at least 300 complete days, found " + std::to_string(complete));
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int d = 1; d <= days; ++d) {
    if (!present[static_cast<std::size_t>(d)]) continue;
    lo = std::min(lo, score[static_cast<std::size_t>(d)]);
    hi = std::max(hi, score[static_cast<std::size_t>(d)]);
  }
  const double cutoff = lo + 0.25 * (hi - lo);
  auto cool = [&](int d) { return present[static_cast<std::size_t>(d)] && score[static_cast<std::size_t>(d)] <= cutoff; };

  std::vector<SeasonRange> ranges;
  auto close_run = [&](int first, int length) {
    double sum = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < length; ++k) {
      const int d = (first - 1 + k) % days + 1;
      sum += score[static_cast<std::size_t>(d)];
      best = std::min(best, score[static_cast<std::size_t>(d)]);
    }
    ranges.push_back({first, (first - 1 + length - 1) % days + 1, sum / length, animal_k - best});
  };

  int anchor = 0;
  for (int d = 1; d <= days && anchor == 0; ++d) {
    if (!cool(d)) anchor = d;
  }
  if (anchor == 0) {
    close_run(1, days);
  } else {
    int run_start = 0;
    int run_length = 0;
    for (int k = 1; k <= days; ++k) {
      const int d = (anchor - 1 + k) % days + 1;
      if (cool(d)) {
        if (run_length == 0) run_start = d;
        ++run_length;
      } else if (run_length > 0) {
        close_run(run_start, run_length);
        run_length = 0;
      }
    }
  }
  std::stable_sort(ranges.begin(), ranges.end(), [](const SeasonRange& a, const SeasonRange& b) {
    return a.mean_daily_min_k < b.mean_daily_min_k;
  });
  return ranges;
}

BackgroundEstimate background_estimate(std::span<const double> values_k) {
  require(!values_k.empty(), "background estimate needs at least one value");
  std::vector<double> sorted(values_k.begin(), values_k.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = std::max<std::size_t>(1, sorted.size() / 2);
  const double mean = std::accumulate(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(n), 0.0) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) ss += (sorted[i] - mean) * (sorted[i] - mean);
  const double sd = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
  return {mean, 2.0 * sd, n};
}

}  // namespace thermoscope
