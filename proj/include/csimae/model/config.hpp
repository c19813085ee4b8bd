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

#include <cstddef>
#include <string>

namespace csimae::model {

// Token grid produced by cutting an A x K matrix into patch_rows x patch_cols
// blocks. Each token carries both planes, so patch_dim = 2 * patch_rows * patch_cols.
struct PatchGrid {
    std::size_t grid_rows = 0;
    std::size_t grid_cols = 0;
    std::size_t patch_rows = 0;
    std::size_t patch_cols = 0;

    std::size_t num_patches() const noexcept { return grid_rows * grid_cols; }
    std::size_t patch_dim() const noexcept { return 2 * patch_rows * patch_cols; }
    std::size_t antennas() const noexcept { return grid_rows * patch_rows; }
    std::size_t subcarriers() const noexcept { return grid_cols * patch_cols; }

    bool operator==(const PatchGrid&) const = default;
};

struct ModelConfig {
    std::size_t antennas = 16;
    std::size_t subcarriers = 64;
    std::size_t patch_rows = 4;
    std::size_t patch_cols = 8;
    std::size_t embed_dim = 64;
    std::size_t encoder_depth = 4;
    std::size_t encoder_heads = 4;
    std::size_t decoder_dim = 32;
    std::size_t decoder_depth = 2;
    std::size_t decoder_heads = 4;
    std::size_t mlp_ratio = 4;
    double mask_ratio = 0.75;

    // Throws ValidationError naming every violated constraint.
    void validate() const;
    PatchGrid grid() const;  // validates first
    std::string summary() const;

    bool operator==(const ModelConfig&) const = default;
};

}  // namespace csimae::model
