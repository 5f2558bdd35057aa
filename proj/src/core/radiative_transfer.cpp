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

#include "radiative_transfer.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "units.hpp"

namespace thermoscope {

double stefan_boltzmann_luminosity(double area_m2, double temperature_k) {
  require(area_m2 >= 0.0 && temperature_k >= 0.0, "area and temperature must be non-negative");
  const double t2 = temperature_k * temperature_k;
  return area_m2 * kStefanBoltzmann * t2 * t2;
}

double planck_radiance(double wavenumber_cm1, double temperature_k) {
  // 2 h c^2 nu^3 / (exp(h c nu / k T) - 1) with nu in m^-1, per cm^-1.
  const double nu_m = 100.0 * wavenumber_cm1;
  const double numerator = 2.0 * kPlanck * kSpeedOfLight * kSpeedOfLight * nu_m * nu_m * nu_m;
  return 100.0 * numerator / std::expm1(kSecondRadiation * wavenumber_cm1 / temperature_k);
}

namespace {

// B(T_m)/B(T_s) at one wavenumber.
double emission_ratio(double wavenumber_cm1, double source_k, double medium_k) {
  return std::expm1(kSecondRadiation * wavenumber_cm1 / source_k) /
         std::expm1(kSecondRadiation * wavenumber_cm1 / medium_k);
}

void check_temperatures(double source_k, double medium_k) {
  require(source_k > 0.0 && medium_k > 0.0, "temperatures must be positive");
}

}  // namespace

double spectral_fraction(double wavenumber_cm1, double kappa_per_m, double distance_m,
                         double source_k, double medium_k) {
  check_temperatures(source_k, medium_k);
  const double absorbed = -std::expm1(-kappa_per_m * distance_m);
  // e^-kS + r (1 - e^-kS), arranged so S=0 and r=1 both give exactly 1.
  return 1.0 - (1.0 - emission_ratio(wavenumber_cm1, source_k, medium_k)) * absorbed;
}

BandNodes band_nodes(const AbsorptionSpectrum& spectrum) {
  validate(spectrum);
  const auto& nu = spectrum.wavenumber_cm1;
  const auto& kappa = spectrum.kappa_per_m;

  auto interpolate = [&](double x) {
    const auto it = std::upper_bound(nu.begin(), nu.end(), x);
    if (it == nu.begin()) return kappa.front();
    if (it == nu.end()) return kappa.back();
    const auto i = static_cast<std::size_t>(it - nu.begin());
    const double t = (x - nu[i - 1]) / (nu[i] - nu[i - 1]);
    return kappa[i - 1] + t * (kappa[i] - kappa[i - 1]);
  };

  BandNodes nodes;
  nodes.wavenumber_cm1.push_back(kBandLowCm1);
  nodes.kappa_per_m.push_back(interpolate(kBandLowCm1));
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] > kBandLowCm1 && nu[i] < kBandHighCm1) {
      nodes.wavenumber_cm1.push_back(nu[i]);
      nodes.kappa_per_m.push_back(kappa[i]);
    }
  }
  nodes.wavenumber_cm1.push_back(kBandHighCm1);
  nodes.kappa_per_m.push_back(interpolate(kBandHighCm1));

  const std::size_t n = nodes.wavenumber_cm1.size();
  nodes.weight_cm1.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double half = 0.5 * (nodes.wavenumber_cm1[i + 1] - nodes.wavenumber_cm1[i]);
    nodes.weight_cm1[i] += half;
    nodes.weight_cm1[i + 1] += half;
  }
  return nodes;
}

double band_average(const BandNodes& nodes, double source_k,
                    const std::function<double(std::size_t)>& per_node) {
  require(source_k > 0.0, "source temperature must be positive");
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t i = 0; i < nodes.wavenumber_cm1.size(); ++i) {
    const double w = nodes.weight_cm1[i] * planck_radiance(nodes.wavenumber_cm1[i], source_k);
    numerator += w * per_node(i);
    denominator += w;
  }
  return numerator / denominator;
}

BandTransmission::BandTransmission(const AbsorptionSpectrum& spectrum, double source_k,
                                   double medium_k) {
  check_temperatures(source_k, medium_k);
  const BandNodes nodes = band_nodes(spectrum);
  const std::size_t n = nodes.wavenumber_cm1.size();

  double total = 0.0;
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = nodes.weight_cm1[i] * planck_radiance(nodes.wavenumber_cm1[i], source_k);
    total += weights[i];
  }
  // fraction(S) = 1 - sum_i c_i (1 - e^-k_i S), c_i = w_i (1 - r_i) / sum w.
  // Nodes with r_i = 1 or k_i = 0 never change the result and are dropped.
  for (std::size_t i = 0; i < n; ++i) {
    const double c =
        weights[i] * (1.0 - emission_ratio(nodes.wavenumber_cm1[i], source_k, medium_k)) / total;
    if (c == 0.0 || nodes.kappa_per_m[i] == 0.0) continue;
    kappa_.push_back(nodes.kappa_per_m[i]);
    coefficient_.push_back(c);
  }
}

double BandTransmission::operator()(double distance_m) const {
  require(distance_m >= 0.0, "distance must be non-negative");
  double loss = 0.0;
  for (std::size_t i = 0; i < kappa_.size(); ++i) {
    loss += coefficient_[i] * -std::expm1(-kappa_[i] * distance_m);
  }
  return 1.0 - loss;
}

double band_transmission(const AbsorptionSpectrum& spectrum, double source_k, double medium_k,
                         double distance_m) {
  return BandTransmission(spectrum, source_k, medium_k)(distance_m);
}

double observed_temperature(double source_k, double fraction) {
  require(source_k >= 0.0, "source temperature must be non-negative");
  require(fraction >= 0.0, "fraction must be non-negative");
  return source_k * std::sqrt(std::sqrt(fraction));
}

std::vector<double> temperature_vs_distance(const AbsorptionSpectrum& spectrum, double source_k,
                                            const GasConditions& conditions,
                                            std::span<const double> distances_m) {
  validate(conditions);
  require(std::is_sorted(distances_m.begin(), distances_m.end()),
          "distances must be sorted ascending");
  const BandTransmission transmission(spectrum, source_k, conditions.air_k);
  std::vector<double> out;
  out.reserve(distances_m.size());
  for (const double d : distances_m) out.push_back(observed_temperature(source_k, transmission(d)));
  return out;
}

}  // namespace thermoscope
