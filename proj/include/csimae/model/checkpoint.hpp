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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "csimae/model/config.hpp"
#include "csimae/numerics/autodiff.hpp"

namespace csimae::model {

inline constexpr char kCheckpointMagic[4] = {'C', 'S', 'I', 'M'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

// Layout (little-endian): magic, version u32, the twelve ModelConfig fields
// (u64 each, mask_ratio as f64), config_hash u64, seed u64, metadata count
// u32 then (key, value) strings, tensor count u32, then per tensor: name,
// rank u32, dims u64..., values f64..., and finally an FNV-1a 64 checksum of
// every preceding byte.
struct Checkpoint {
    ModelConfig config;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::pair<std::string, Tensor>> tensors;

    const Tensor* find(std::string_view name) const noexcept;
    std::string meta(std::string_view key, std::string fallback = {}) const;
    bool operator==(const Checkpoint&) const = default;
};

Checkpoint make_checkpoint(const ModelConfig& config, std::span<Parameter* const> params,
                           std::uint64_t config_hash, std::uint64_t seed);

std::vector<char> serialize_checkpoint(const Checkpoint& ckpt);
Checkpoint deserialize_checkpoint(std::span<const char> bytes, const std::string& where);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

// Copies every stored tensor whose name matches a listed parameter. Throws
// ShapeError on a shape mismatch and FormatError when a parameter starting
// with one of `required_prefixes` has no stored tensor. Returns the count copied.
std::size_t restore_parameters(const Checkpoint& ckpt, std::span<Parameter* const> params,
                               std::span<const std::string> required_prefixes = {});

}  // namespace csimae::model
