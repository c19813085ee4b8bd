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

#include <string>
#include <string_view>
#include <vector>

namespace csimae::channelgen {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

enum class ScenarioKind { UMi, UMa, RMa };

std::string_view to_string(ScenarioKind kind) noexcept;
ScenarioKind parse_scenario_kind(std::string_view name);  // throws ValidationError

// Propagation environment and array layout for one generated dataset.
// Physical units: GHz, kHz, meters, seconds, radians, m/s.
struct ScenarioParams {
    ScenarioKind kind = ScenarioKind::UMi;
    double carrier_ghz = 5.0;
    double subcarrier_spacing_khz = 30.0;
    int num_subcarriers = 64;
    int bs_rows = 4;  // uniform planar array, half-wavelength spacing
    int bs_cols = 4;
    double bs_height = 10.0;
    double ue_height = 1.5;
    double cell_radius = 100.0;
    double guard_radius = 10.0;
    double sector_half_width = 1.0471975511965976;  // pi/3, a 120 degree sector
    int num_nlos_paths = 8;
    double delay_spread = 100e-9;
    double los_probability = 0.5;
    double nlos_elevation_spread = 0.17453292519943295;  // 10 degrees
    double ue_velocity_min = 0.0;                        // metadata only
    double ue_velocity_max = 27.78;

    int num_antennas() const noexcept { return bs_rows * bs_cols; }
    double subcarrier_spacing_hz() const noexcept { return subcarrier_spacing_khz * 1e3; }
    double carrier_hz() const noexcept { return carrier_ghz * 1e9; }

    // Short label such as "RMa-2.4".
    std::string label() const;

    // Throws ValidationError listing every offending field name.
    void validate() const;

    // Canonical, round-trippable key=value descriptor stored in dataset headers.
    std::string descriptor() const;
    static ScenarioParams from_descriptor(std::string_view text);

    bool operator==(const ScenarioParams&) const = default;
};

// Desk-scale defaults for a scenario family at the given carrier. The three
// families differ in BS height (10/25/35 m), cell size, delay spread and LOS
// probability.
ScenarioParams scenario_preset(ScenarioKind kind, double carrier_ghz);

// Parses "UMi-5" / "RMa-0.7" into a preset.
ScenarioParams scenario_preset(std::string_view label);

inline constexpr double kReferenceCarriersGhz[] = {0.7, 2.4, 3.5, 4.9, 5.0};
inline constexpr double kReferenceSubcarrierSpacingsKhz[] = {15.0, 30.0, 60.0};

// Carrier and spacing both lie on the reference simulation grid.
bool is_reference_grid(const ScenarioParams& p) noexcept;

}  // namespace csimae::channelgen
