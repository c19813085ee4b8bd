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
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "csimae/numerics/tensor.hpp"

namespace csimae {

// A learnable tensor with its gradient accumulator.
struct Parameter {
    std::string name;
    Tensor value;
    Tensor grad;  // same shape as value
    bool trainable = true;

    Parameter() = default;
    Parameter(std::string name, Tensor value, bool trainable = true);

    void zero_grad() noexcept { grad.fill(0.0); }
};

class Tape;

// Handle to a node recorded on a Tape.
struct Var {
    Tape* tape = nullptr;
    std::size_t id = 0;

    const Tensor& value() const;
    Tensor grad() const;
    const std::vector<std::size_t>& shape() const { return value().shape(); }
};

// Reverse-mode gradient tape. Every operation appends a node; backward()
// walks the nodes in reverse recording order, so gradient reduction order is
// fixed by the order the forward pass was written in.
class Tape {
  public:
    using BackwardFn = std::function<void(Tape&, const Tensor& out_grad)>;

    Tape() = default;
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    Var constant(Tensor value);
    // Leaf that receives a gradient (used by grad_check and tests).
    Var input(Tensor value);
    // Leaf bound to a parameter. Non-trainable parameters behave as constants.
    Var param(const Parameter& p);

    // Computes d(loss)/d(node) for every node that depends on a gradient leaf.
    // Throws ContractError unless loss holds exactly one value.
    void backward(Var loss);

    // Adds this tape's gradient for p (summed over all of its leaves, in
    // recording order) into p.grad. No-op if p was never bound.
    void accumulate(Parameter& p) const;

    const Tensor& value(std::size_t id) const { return nodes_[id].value; }
    // Zero tensor when no gradient reached the node.
    Tensor grad(std::size_t id) const;
    bool requires_grad(std::size_t id) const { return nodes_[id].requires_grad; }
    std::size_t size() const noexcept { return nodes_.size(); }

    // Op plumbing.
    Var record(Tensor value, bool requires_grad, BackwardFn backward);
    Tensor& grad_buffer(std::size_t id);

  private:
    struct Node {
        Tensor value;
        Tensor grad;  // empty until something flows into it
        bool requires_grad = false;
        BackwardFn backward;
    };
    std::vector<Node> nodes_;
    std::unordered_map<const Parameter*, std::vector<std::size_t>> param_leaves_;
    bool backward_done_ = false;
};

// Runs tape.backward(loss) and accumulates into each listed parameter.
void backward(Var loss, std::span<Parameter* const> params);

// ---- Differentiable operations -------------------------------------------
// All operands must live on the same tape.

Var matmul(Var a, Var b);                         // [m x k] * [k x n]
Var transpose(Var a);                             // 2-D only
Var add(Var a, Var b);                            // same shape
Var sub(Var a, Var b);                            // same shape
Var mul(Var a, Var b);                            // elementwise, same shape
Var scale(Var a, double s);
Var add_bias(Var x, Var bias);                    // bias has cols(x) values, broadcast over rows
Var layer_norm(Var x, Var gamma, Var beta, double eps = 1e-5);
Var softmax_lastdim(Var x);
Var gelu(Var x);
Var sum(Var a);                                   // -> [1]
Var mean_rows(Var a);                             // [n x d] -> [1 x d]
Var reshape(Var a, std::vector<std::size_t> shape);
Var slice_cols(Var a, std::size_t begin, std::size_t end);
Var concat_cols(std::span<const Var> parts);

// Builds a matrix whose row r is row `refs[r].row` of `sources[refs[r].source]`.
struct RowRef {
    std::size_t source;
    std::size_t row;
};
Var assemble_rows(std::span<const Var> sources, std::span<const RowRef> refs);
Var gather_rows(Var a, std::span<const std::size_t> rows);

// Mean of squared differences over the listed rows (all columns):
// sum_{r in rows, c} (pred - target)^2 / (|rows| * cols).
Var rows_mse(Var pred, const Tensor& target, std::span<const std::size_t> rows);
Var mse(Var pred, const Tensor& target);

// GELU, tanh approximation:
//   gelu(x) = 0.5 x (1 + tanh(sqrt(2/pi) (x + 0.044715 x^3)))
inline constexpr double kGeluCubic = 0.044715;
inline constexpr double kSqrtTwoOverPi = 0.79788456080286535588;  // sqrt(2/pi)
double gelu_scalar(double x);
double gelu_derivative(double x);

}  // namespace csimae
