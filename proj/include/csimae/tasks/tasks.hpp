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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csimae/channelgen/dataset.hpp"
#include "csimae/metrics/metrics.hpp"
#include "csimae/model/checkpoint.hpp"
#include "csimae/model/mae.hpp"

namespace csimae::tasks {

enum class Regime { Supervised, Frozen, Finetune };
enum class TaskKind { ExtrapolationAntenna, ExtrapolationSubcarrier, Feedback, Positioning };

std::string_view to_string(Regime r) noexcept;
std::string_view to_string(TaskKind t) noexcept;
Regime parse_regime(std::string_view text);
TaskKind parse_task_kind(std::string_view text);
bool is_reconstruction(TaskKind t) noexcept;

// Affine map from the class-token row to (x, y) in meters.
struct PositionHead {
    Parameter* weight = nullptr;  // [D x 2]
    Parameter* bias = nullptr;    // [2]
};

// Mean-pooled encoder tokens -> code of code_length reals -> full decoder
// token sequence.
struct FeedbackBottleneck {
    Parameter* down = nullptr;  // [D x L]
    Parameter* up = nullptr;    // [L x (P+1)*decoder_dim]
    std::size_t code_length = 0;
};

double compression_ratio(const model::ModelConfig& config, std::size_t code_length);

// Backbone plus the head its task needs. Head parameters are named "head.*".
class TaskModel {
  public:
    TaskModel(TaskKind kind, const model::ModelConfig& config, std::uint64_t init_seed, std::size_t code_length = 128);

    TaskKind kind() const noexcept { return kind_; }
    model::ModelParams& backbone() noexcept { return backbone_; }
    const model::ModelParams& backbone() const noexcept { return backbone_; }
    const model::ParameterSet& head_set() const noexcept { return head_; }
    std::vector<Parameter*> head_parameters() const { return head_.all(); }
    std::vector<Parameter*> all() const;
    std::size_t code_length() const noexcept { return feedback.code_length; }

    PositionHead position;
    FeedbackBottleneck feedback;
    model::MaskPattern pattern = model::MaskPattern::Interleaved;  // extrapolation tasks

  private:
    TaskKind kind_;
    model::ModelParams backbone_;
    model::ParameterSet head_;
};

model::MaskDomain extrapolation_domain(TaskKind t);
model::MaskPlan extrapolation_plan(const model::PatchGrid& grid, TaskKind t, model::MaskPattern pattern);

// Predicts the structurally masked half; visible patches are copied from H.
CsiMatrix extrapolate(const model::ModelParams& params, const CsiMatrix& H, model::MaskDomain domain,
                      model::MaskPattern pattern);

struct FeedbackResult {
    Tensor code;  // [1 x code_length]
    CsiMatrix H_hat;
};
FeedbackResult feedback_roundtrip(const model::ModelParams& params, const FeedbackBottleneck& bottleneck,
                                  const CsiMatrix& H);

metrics::Point position_predict(const model::ModelParams& params, const PositionHead& head, const CsiMatrix& H);

// Graph builders shared by training and evaluation.
Var feedback_code(model::Binder& bind, const model::ModelParams& params, const FeedbackBottleneck& b,
                  const Tensor& patches);
Var feedback_decode(model::Binder& bind, const model::ModelParams& params, const FeedbackBottleneck& b, Var code);
Var position_forward(model::Binder& bind, const model::ModelParams& params, const PositionHead& head,
                     const Tensor& patches);

// FNV-1a over the raw bytes of every encoder parameter, in order.
std::uint64_t encoder_checksum(const model::ModelParams& params);

struct ValidationPoint {
    std::size_t step = 0;
    double metric = 0.0;  // NMSE dB for reconstruction, RMSE m for positioning
};

struct TrainHistory {
    std::string task;
    std::string regime;
    std::vector<double> step_loss;
    std::vector<ValidationPoint> validation;
    std::vector<std::pair<std::string, std::uint64_t>> seeds;
    double wall_seconds = 0.0;
    std::optional<bool> encoder_unchanged;  // Frozen only
};

struct TrainConfig {
    std::size_t steps = 300;
    std::size_t batch_size = 64;
    std::size_t eval_interval = 100;  // 0: evaluate only at the end
    double lr = 1e-3;                 // backbone parameters
    double head_lr = 1e-3;            // head.* parameters
    std::uint64_t seed = 1;           // batch sampling
    std::uint64_t init_seed = 1;      // fresh weights (backbone, re-initialized decoder, head)
    std::size_t code_length = 128;
    model::MaskPattern antenna_pattern = model::MaskPattern::Interleaved;
    model::MaskPattern subcarrier_pattern = model::MaskPattern::Contiguous;
};

struct TrainResult {
    TaskModel model;
    TrainHistory history;
    metrics::MetricsReport report;  // on the validation split
};

std::vector<Tensor> patchify_dataset(const channelgen::Dataset& ds, const model::PatchGrid& grid);

// Supervised needs pretrained == nullptr, Frozen and Finetune need a
// checkpoint (ValidationError otherwise). Frozen re-initializes the decoder,
// freezes the encoder and verifies its checksum after training.
TrainResult train_task(TaskKind task, Regime regime, const model::Checkpoint* pretrained,
                       const model::ModelConfig& config, const channelgen::Dataset& train,
                       const channelgen::Dataset& val, const TrainConfig& cfg);

// Pure evaluation. Throws ShapeError when the dataset dimensions differ
// from the model's.
metrics::MetricsReport evaluate_task(const TaskModel& model, const channelgen::Dataset& data);
metrics::MetricsReport zero_shot_eval(const TaskModel& model, const channelgen::Dataset& target,
                                      const std::string& source_scenario, const std::string& target_scenario);

model::Checkpoint task_checkpoint(const TaskModel& model, Regime regime, std::uint64_t config_hash, std::uint64_t seed);
TaskModel load_task_model(const model::Checkpoint& ckpt);

// ---- Pretraining ------------------------------------------------------------

struct PretrainConfig {
    std::size_t steps = 300;
    std::size_t batch_size = 64;
    std::size_t eval_interval = 100;
    double lr = 1e-3;
    std::uint64_t seed = 1;
    std::uint64_t init_seed = 1;
    std::uint64_t eval_seed = 9;  // fixed held-out masks
};

struct PretrainResult {
    model::ModelParams params;
    TrainHistory history;
    double initial_nmse_db = 0.0;
    double final_nmse_db = 0.0;
};

// Mean over samples of masked-region error energy / masked-region target
// energy (linear).
double masked_region_nmse(const model::ModelParams& params, std::span<const Tensor> patches,
                          std::span<const model::MaskPlan> plans);
std::vector<model::MaskPlan> fixed_eval_masks(std::size_t count, const model::ModelConfig& config, std::uint64_t seed);

PretrainResult pretrain(const model::ModelConfig& config, std::span<const Tensor> train,
                        std::span<const Tensor> val, const PretrainConfig& cfg);

}  // namespace csimae::tasks
