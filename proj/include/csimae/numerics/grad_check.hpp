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

#include <functional>
#include <span>
#include <vector>

#include "csimae/numerics/autodiff.hpp"

namespace csimae {

struct GradCheckReport {
    std::vector<double> max_rel_error;  // one entry per checked input/parameter
    std::vector<Tensor> analytic;
    std::vector<Tensor> numeric;

    double worst() const;
    bool passed(double tol) const { return worst() < tol; }
};

// Relative error used by the checker: |a - n| / max(|a|, |n|, floor).
// The floor keeps gradients that are zero up to round-off from reporting
// spurious O(1) errors.
inline constexpr double kGradCheckFloor = 1e-6;
inline constexpr double kGradCheckStep = 1e-5;
double gradient_rel_error(double analytic, double numeric);

using ScalarFn = std::function<Var(Tape&, std::span<const Var>)>;

// Compares reverse-mode gradients of fn at `inputs` with central differences.
GradCheckReport grad_check(const ScalarFn& fn, const std::vector<Tensor>& inputs,
                           double h = kGradCheckStep);

// Same comparison over parameters of a loss that binds them itself. Each
// parameter is perturbed in place and restored exactly.
GradCheckReport grad_check_params(const std::function<Var(Tape&)>& loss,
                                  std::span<Parameter* const> params, double h = kGradCheckStep);

}  // namespace csimae
