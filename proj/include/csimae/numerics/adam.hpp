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
#include <span>
#include <vector>

#include "csimae/numerics/autodiff.hpp"

namespace csimae {

struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

// First/second moment accumulators, one per parameter in the order the
// optimizer was given them.
struct OptimizerState {
    std::vector<Tensor> first_moment;
    std::vector<Tensor> second_moment;
    std::uint64_t step = 0;
};

// One bias-corrected adaptive-moment update:
//   m <- b1 m + (1-b1) g,  v <- b2 v + (1-b2) g^2
//   p <- p - lr * (m / (1-b1^t)) / (sqrt(v / (1-b2^t)) + eps)
// Non-trainable parameters are skipped. The state is lazily sized on the
// first call; later calls must pass parameters with the same shapes.
void adam_step(std::span<Parameter* const> params, OptimizerState& state, const AdamConfig& cfg);

class Adam {
  public:
    Adam(AdamConfig cfg, std::vector<Parameter*> params);

    void step() { adam_step(params_, state_, cfg_); }
    void zero_grad();

    const AdamConfig& config() const noexcept { return cfg_; }
    const OptimizerState& state() const noexcept { return state_; }
    std::span<Parameter* const> parameters() const noexcept { return params_; }

  private:
    AdamConfig cfg_;
    std::vector<Parameter*> params_;
    OptimizerState state_;
};

}  // namespace csimae
