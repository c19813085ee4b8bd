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

#include "csimae/csi.hpp"
#include "csimae/model/config.hpp"
#include "csimae/numerics/tensor.hpp"

namespace csimae::model {

// [P x patch_dim]. Patch i holds its real-plane block then its imaginary-plane
// block, each row-major; patches are ordered row-major over the grid.
Tensor patchify(const CsiMatrix& H, const PatchGrid& grid);
CsiMatrix unpatchify(const Tensor& patches, const PatchGrid& grid);

// [grid_rows*grid_cols x dim]. Columns [0, dim/2) encode the grid row,
// [dim/2, dim) the grid column. Inside one axis half of width w, columns
// (2j, 2j+1) hold sin and cos of pos / 10000^(2j/w).
Tensor build_posemb(std::size_t grid_rows, std::size_t grid_cols, std::size_t dim);

// The same table with a leading all-zero row for the class-token slot.
Tensor build_decoder_posemb(std::size_t grid_rows, std::size_t grid_cols, std::size_t dim);

}  // namespace csimae::model
