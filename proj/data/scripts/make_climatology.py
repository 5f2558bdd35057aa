#!/usr/bin/env python3
# Copyright 2026 The Thermoscope Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the Loxton-like land-surface-temperature climatology.

One record per day and satellite overpass, shaped like a semi-arid site in the
southern hemisphere: cool dry winters around July, hot summers around January.
The late-September knots are solved so that mean + 2 sigma stays above 20 C
from 08:00 to 19:00 local solar time.

    python3 data/scripts/make_climatology.py > data/climatology/loxton_like.csv
"""

import math
import sys

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import fsolve

LAT = -31.476421
LON = 22.354109
KNOT_H = [1.5, 10.5, 13.5, 22.5]
CODES = ["0130", "1030", "1330", "2230"]
ANCHOR_DOY = 268
ANIMAL_K = 293.15
CROSSINGS_H = (8.0, 19.0)
# 2 sigma inter-annual spread per overpass, K.
TWO_SIGMA = np.array([3.0, 4.0, 4.5, 3.2])
# Seasonal swing of every knot, K (peak in mid January).
AMPLITUDE = np.array([7.0, 9.0, 10.0, 7.5])


def upper_curve(upper):
    x = np.array(KNOT_H + [KNOT_H[0] + 24.0])
    y = np.append(upper, upper[0])
    return CubicSpline(x, y, bc_type="periodic")


def anchor_upper():
    night, noon = 280.0, 306.0

    def residual(p):
        spline = upper_curve(np.array([night, p[0], noon, p[1]]))
        return [spline(CROSSINGS_H[0]) - ANIMAL_K, spline(CROSSINGS_H[1]) - ANIMAL_K]

    morning, evening = fsolve(residual, [300.0, 287.0], xtol=1e-13)
    return np.array([night, morning, noon, evening])


def season(doy):
    return math.cos(2.0 * math.pi * (doy - 15) / 365.0)


def main():
    upper_at_anchor = anchor_upper()
    out = sys.stdout
    out.write("lat,lon,doy,overpass,mean_k,two_sigma_k\n")
    for doy in range(1, 366):
        upper = upper_at_anchor + AMPLITUDE * (season(doy) - season(ANCHOR_DOY))
        mean = upper - TWO_SIGMA
        for code, m, s in zip(CODES, mean, TWO_SIGMA):
            out.write(f"{LAT},{LON},{doy},{code},{m:.3f},{s:.3f}\n")


if __name__ == "__main__":
    main()
