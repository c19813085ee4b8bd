// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The csimae Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "csimae/channelgen/scenario.hpp"
#include "csimae/csi.hpp"
#include "csimae/numerics/rng.hpp"

namespace csimae::channelgen {

// UE drop in the BS-centered frame. The array faces +x; azimuth is measured
// from +x toward +y.
struct Geometry {
    double x = 0.0;
    double y = 0.0;
    bool los = false;

    double radius() const noexcept;
};

struct Path {
    cplx gain;
    double delay = 0.0;      // seconds
    double azimuth = 0.0;    // radians
    double elevation = 0.0;  // radians, negative below the array
};

// Latent multipath description. When `los` is set, paths[0] is the direct path.
struct PathSet {
    std::vector<Path> paths;
    bool los = false;

    double total_power() const noexcept;
};

// Fraction of power on the direct path of a LOS drop (the rest follows the
// exponential power-delay profile of the NLOS paths).
inline constexpr double kLosPowerFraction = 0.6;

// Uniform-by-area over the annulus guard_radius..cell_radius restricted to the
// sector |azimuth| <= sector_half_width; LOS with probability los_probability.
Geometry sample_geometry(const ScenarioParams& params, Rng& rng);

// Mean of r for the area-uniform annulus between g and R: 2/3 (R^3-g^3)/(R^2-g^2).
double annulus_mean_radius(double guard, double radius) noexcept;

// One geometric direct path (if LOS) plus num_nlos_paths paths with delays
// tau0 + Exp(delay_spread), exponential power profile, uniform random phases,
// azimuth uniform in [-pi, pi) and elevation uniform within
// nlos_elevation_spread of the direct-path elevation. Total power is 1.
PathSet draw_paths(const ScenarioParams& params, const Geometry& geometry, Rng& rng);

// Direct-path delay d3D / c for a drop.
double los_delay(const ScenarioParams& params, const Geometry& geometry) noexcept;

// Half-wavelength UPA response; element (m, n) sits at index m * cols + n and
// has phase pi * (m sin(el) + n cos(el) sin(az)).
std::vector<cplx> steering_vector(int rows, int cols, double azimuth, double elevation);

// H[a, k] = sum_p g_p * steer_p[a] * exp(-j 2 pi k df tau_p), k = 0..K-1.
CsiMatrix synthesize_csi(const PathSet& paths, const ScenarioParams& params);

}  // namespace csimae::channelgen
