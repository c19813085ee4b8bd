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

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "csimae/model/config.hpp"
#include "csimae/model/mask.hpp"
#include "csimae/numerics/adam.hpp"
#include "csimae/numerics/autodiff.hpp"
#include "csimae/numerics/rng.hpp"

namespace csimae::model {

// Owns parameters at stable addresses, in creation order.
class ParameterSet {
  public:
    Parameter& add(std::string name, Tensor value, bool trainable = true);
    Parameter* find(std::string_view name) noexcept;
    const Parameter* find(std::string_view name) const noexcept;
    Parameter& get(std::string_view name);

    std::vector<Parameter*> all() const;
    std::vector<Parameter*> with_prefix(std::string_view prefix) const;
    std::size_t size() const noexcept { return items_.size(); }
    std::size_t scalar_count() const noexcept;

  private:
    std::vector<std::unique_ptr<Parameter>> items_;
};

struct BlockParams {
    Parameter* norm1_gain;
    Parameter* norm1_bias;
    Parameter* qkv_weight;  // [d x 3d]
    Parameter* qkv_bias;
    Parameter* proj_weight;  // [d x d]
    Parameter* proj_bias;
    Parameter* norm2_gain;
    Parameter* norm2_bias;
    Parameter* fc1_weight;  // [d x mlp*d]
    Parameter* fc1_bias;
    Parameter* fc2_weight;  // [mlp*d x d]
    Parameter* fc2_bias;
};

// Initialization: truncated normal (std 0.02, cut at 2 std) for weight
// matrices and the two tokens, Xavier-uniform for the attention qkv weights,
// zeros for biases, ones for norm gains.
class ModelParams {
  public:
    ModelParams(const ModelConfig& config, std::uint64_t init_seed);
    ModelParams(const ModelParams&) = delete;
    ModelParams& operator=(const ModelParams&) = delete;
    ModelParams(ModelParams&&) = default;

    // Deep copy with identical values.
    ModelParams clone() const;

    const ModelConfig& config() const noexcept { return config_; }
    const PatchGrid& grid() const noexcept { return grid_; }
    const Tensor& encoder_posemb() const noexcept { return enc_pos_; }

    ParameterSet& set() noexcept { return set_; }
    const ParameterSet& set() const noexcept { return set_; }
    std::vector<Parameter*> all() const { return set_.all(); }
    std::vector<Parameter*> encoder_parameters() const { return set_.with_prefix("encoder."); }
    std::vector<Parameter*> decoder_parameters() const { return set_.with_prefix("decoder."); }

    // Redraws decoder weights from init_seed, leaving the encoder alone.
    void reinit_decoder(std::uint64_t init_seed);

    Parameter* patch_weight;  // [patch_dim x D]
    Parameter* patch_bias;
    Parameter* cls_token;  // [1 x D]
    std::vector<BlockParams> encoder_blocks;
    Parameter* encoder_norm_gain;
    Parameter* encoder_norm_bias;
    Parameter* decoder_embed_weight;  // [D x decoder_dim]
    Parameter* decoder_embed_bias;
    Parameter* mask_token;  // [1 x decoder_dim]
    Parameter* decoder_pos;  // [(P+1) x decoder_dim], fixed
    std::vector<BlockParams> decoder_blocks;
    Parameter* decoder_norm_gain;
    Parameter* decoder_norm_bias;
    Parameter* head_weight;  // [decoder_dim x patch_dim]
    Parameter* head_bias;

  private:
    void build(std::uint64_t init_seed, bool encoder, bool decoder);

    ModelConfig config_;
    PatchGrid grid_;
    Tensor enc_pos_;
    ParameterSet set_;
};

// Binds each parameter to one tape leaf, however often it is used.
// With frozen = true every parameter enters as a constant (inference).
class Binder {
  public:
    explicit Binder(Tape& tape, bool frozen = false) : tape_(tape), frozen_(frozen) {}
    Var operator()(const Parameter& p);
    Tape& tape() noexcept { return tape_; }

  private:
    Tape& tape_;
    bool frozen_;
    std::unordered_map<const Parameter*, Var> bound_;
};

Var linear(Binder& bind, Var x, const Parameter& weight, const Parameter& bias);

// Pre-norm block: x + attn(norm1(x)), then + mlp(norm2(.)).
Var transformer_block(Binder& bind, const BlockParams& block, Var x, std::size_t heads);

// Encodes the given patch rows with their positional rows attached; the class
// token is prepended without a positional term. Output: [(1+n) x D].
Var encode_tokens(Binder& bind, const ModelParams& params, const Tensor& patch_rows, const Tensor& pos_rows);

// patches: [P x patch_dim]. Encodes plan.visible in ascending order.
Var encode(Binder& bind, const ModelParams& params, const Tensor& patches, const MaskPlan& plan);

// tokens: [(P+1) x decoder_dim], class slot first, before the positional
// table is added. Returns [P x patch_dim].
Var decode_sequence(Binder& bind, const ModelParams& params, Var tokens);

// latent: encode() output for the same plan. Returns [P x patch_dim].
Var decode(Binder& bind, const ModelParams& params, Var latent, const MaskPlan& plan);

// Sum over masked patches of the squared patch error, / (N * patch_dim).
Var masked_mse(Var pred, const Tensor& target, const MaskPlan& plan);

// Inference helper: [P x patch_dim] predictions for every patch.
Tensor reconstruct(const ModelParams& params, const Tensor& patches, const MaskPlan& plan);

// One optimizer step over a batch of patchified samples, each with a fresh
// random mask drawn from rng. Returns the batch-mean loss; throws
// NumericError on a non-finite loss (parameters are then left unchanged).
double pretrain_step(ModelParams& params, std::span<const Tensor> batch, Rng& rng, Adam& optimizer);

}  // namespace csimae::model
