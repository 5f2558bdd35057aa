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

// Radiative transfer across the 8-14 um band for a uniform path.
//
// Each wavenumber of the source's spectrum is partly absorbed and partly
// replaced by emission from the intervening medium. The received fraction is
// band-averaged with the source's Planck spectrum as the weight and converted
// to an observed temperature by a fourth-root law.

#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "spectroscopy.hpp"

namespace thermoscope {

/// L = A sigma T^4, watts.
double stefan_boltzmann_luminosity(double area_m2, double temperature_k);

/// Blackbody spectral radiance per unit wavenumber, W m^-2 sr^-1 (cm^-1)^-1.
double planck_radiance(double wavenumber_cm1, double temperature_k);

/// Received fraction at one wavenumber after `distance_m` through a medium
/// at `medium_k`, relative to the source intensity.
double spectral_fraction(double wavenumber_cm1, double kappa_per_m, double distance_m,
                         double source_k, double medium_k);

/// Band-integration nodes of a spectrum clipped to 8-14 um: interior grid
/// points plus linearly interpolated band edges, with trapezoid weights.
struct BandNodes {
  std::vector<double> wavenumber_cm1;
  std::vector<double> kappa_per_m;
  std::vector<double> weight_cm1;
};

BandNodes band_nodes(const AbsorptionSpectrum& spectrum);

/// Planck-weighted band average of `per_node(i)` over the band nodes, with
/// the source temperature setting the weights.
double band_average(const BandNodes& nodes, double source_k,
                    const std::function<double(std::size_t)>& per_node);

/// Band transmission for a fixed spectrum and temperature pair, evaluated at
/// any distance. Construction does the per-wavenumber work once.
class BandTransmission {
 public:
  BandTransmission(const AbsorptionSpectrum& spectrum, double source_k, double medium_k);

  double operator()(double distance_m) const;

 private:
  std::vector<double> kappa_;
  std::vector<double> coefficient_;
};

/// Fraction I(S)/I(S0) of the source's band flux received after `distance_m`.
double band_transmission(const AbsorptionSpectrum& spectrum, double source_k, double medium_k,
                         double distance_m);

/// T_obs = T_s * fraction^(1/4).
double observed_temperature(double source_k, double fraction);

/// Observed temperature at each distance through uniform gas at
/// `conditions.air_k`. Distances must be sorted ascending.
std::vector<double> temperature_vs_distance(const AbsorptionSpectrum& spectrum, double source_k,
                                            const GasConditions& conditions,
                                            std::span<const double> distances_m);

}  // namespace thermoscope
