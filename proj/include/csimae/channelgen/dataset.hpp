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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "csimae/channelgen/channel.hpp"
#include "csimae/channelgen/scenario.hpp"
#include "csimae/csi.hpp"

namespace csimae::channelgen {

struct CsiSample {
    CsiMatrix H;
    std::string scenario;  // "UMi" / "UMa" / "RMa"
    double carrier_ghz = 0.0;
    double subcarrier_spacing_khz = 0.0;
    double ue_x = 0.0;
    double ue_y = 0.0;
    bool los = false;
    std::uint64_t seed = 0;
};

// Binary dataset layout (all little-endian):
//   "CSID" | version u32 | count u64 | A u32 | K u32 |
//   descriptor: u32 byte length + UTF-8 | global_seed u64
//   per sample: seed u64 | ue_x f32 | ue_y f32 | los u8 | carrier_ghz f32 |
//               scs_khz f32 | real plane A*K f32 | imag plane A*K f32
// Planes are row-major over (antenna, subcarrier).
inline constexpr char kDatasetMagic[4] = {'C', 'S', 'I', 'D'};
inline constexpr std::uint32_t kDatasetVersion = 1;

struct DatasetHeader {
    std::uint32_t version = kDatasetVersion;
    std::uint64_t count = 0;
    std::uint32_t antennas = 0;
    std::uint32_t subcarriers = 0;
    std::string scenario;  // ScenarioParams::descriptor()
    std::uint64_t global_seed = 0;

    bool operator==(const DatasetHeader&) const = default;
};

struct Dataset {
    DatasetHeader header;
    std::vector<CsiSample> samples;
};

// Seed of sample `index`; the only input to that sample's randomness.
std::uint64_t sample_seed(std::uint64_t global_seed, std::uint64_t index) noexcept;

// Generates sample `index` in full double precision.
CsiSample generate_sample(const ScenarioParams& params, std::uint64_t global_seed, std::uint64_t index);

// Generates and writes `count` samples using `workers` threads. Output bytes
// do not depend on the worker count. `provenance` ("|key=value|...") is
// appended to the header descriptor; from_descriptor ignores those keys.
void generate_dataset(const ScenarioParams& params, std::uint64_t global_seed, std::uint64_t count,
                      const std::filesystem::path& output, unsigned workers = 1,
                      std::string_view provenance = {});

Dataset load_dataset(const std::filesystem::path& path);
DatasetHeader read_dataset_header(const std::filesystem::path& path);

// Serialized size of one sample record.
std::size_t sample_record_size(std::uint32_t antennas, std::uint32_t subcarriers) noexcept;

// Rounds H to the 32-bit storage precision (what load_dataset returns).
CsiMatrix quantize_to_storage(const CsiMatrix& H);

}  // namespace csimae::channelgen
