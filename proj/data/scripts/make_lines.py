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

"""Writes the synthetic water-vapour line list used for the bundled spectra.

The lines are random but seeded, so the file is reproducible. Intensities are
scaled so the 8-14 um band absorbs a few tenths of a kelvin over 100 m in cool,
moderately humid air, which is the order of magnitude seen in real spectra.

    python3 data/scripts/make_lines.py > data/lines/h2o_synthetic.par
"""

import argparse
import sys

import numpy as np

RECORD = 160


def fixed(value, width, decimals):
    text = f"{value:.{decimals}f}"
    if len(text) > width:
        text = text.replace("0.", ".", 1)
    if len(text) > width:
        raise ValueError(f"{text} does not fit {width} columns")
    return text.rjust(width)


def record(nu, s, g_air, g_self, e_low, n_air, shift):
    head = (f"{1:2d}1" + fixed(nu, 12, 6) + f"{s:10.3E}{0.0:10.3E}" + fixed(g_air, 5, 4) + fixed(g_self, 5, 3)
            + fixed(e_low, 10, 4) + fixed(n_air, 4, 2) + fixed(shift, 8, 6))
    return head.ljust(RECORD)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=8141)
    parser.add_argument("--scale", type=float, default=1.0, help="multiplies every intensity")
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    nu = np.sort(rng.uniform(690.0, 1275.0, args.count))
    # Log-normal spread of strengths around 5e-24 cm^-1/(molecule cm^-2).
    s = args.scale * 5.0e-24 * np.exp(rng.normal(-1.2, 1.55, args.count))
    g_air = rng.uniform(0.04, 0.10, args.count)
    g_self = rng.uniform(0.20, 0.50, args.count)
    e_low = rng.uniform(0.0, 2500.0, args.count)
    n_air = rng.uniform(0.50, 0.80, args.count)
    shift = -rng.uniform(0.0, 0.015, args.count)

    out = sys.stdout
    for row in zip(nu, s, g_air, g_self, e_low, n_air, shift):
        line = record(*row)
        assert len(line) == RECORD
        out.write(line + "\n")


if __name__ == "__main__":
    main()
