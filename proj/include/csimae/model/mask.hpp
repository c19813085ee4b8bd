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
#include <string_view>
#include <vector>

#include "csimae/model/config.hpp"
#include "csimae/numerics/rng.hpp"

namespace csimae::model {

// Partition of the patch indices into the ones the encoder sees and the ones
// it must reconstruct. Both index lists are sorted ascending.
struct MaskPlan {
    std::size_t num_patches = 0;
    std::vector<std::size_t> permutation;  // visible first, then masked
    std::vector<std::size_t> visible;
    std::vector<std::size_t> masked;

    std::size_t num_masked() const noexcept { return masked.size(); }
    bool is_masked(std::size_t index) const;
    // Throws ContractError unless visible and masked partition [0, num_patches).
    void check() const;
};

// round(ratio * P), halves rounded up.
std::size_t masked_count(std::size_t num_patches, double mask_ratio);

MaskPlan random_mask(std::size_t num_patches, double mask_ratio, Rng& rng);
MaskPlan all_visible(std::size_t num_patches);

enum class MaskDomain { Antenna, Subcarrier };
enum class MaskPattern { Interleaved, Contiguous };

std::string_view to_string(MaskDomain d) noexcept;
std::string_view to_string(MaskPattern p) noexcept;
MaskDomain parse_mask_domain(std::string_view text);
MaskPattern parse_mask_pattern(std::string_view text);
// Interleaved for the antenna domain, contiguous for the subcarrier domain.
MaskPattern default_pattern(MaskDomain d) noexcept;

// Masks half of the grid rows (antenna domain) or grid columns (subcarrier
// domain): the odd ones for Interleaved, the upper half for Contiguous.
MaskPlan structured_mask(const PatchGrid& grid, MaskDomain domain, MaskPattern pattern);

}  // namespace csimae::model
