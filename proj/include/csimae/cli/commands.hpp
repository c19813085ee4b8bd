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

#include <exception>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "csimae/channelgen/dataset.hpp"
#include "csimae/channelgen/scenario.hpp"
#include "csimae/cli/config.hpp"
#include "csimae/model/config.hpp"
#include "csimae/tasks/tasks.hpp"

namespace csimae::cli {

// Typed views of a RunConfig.
channelgen::ScenarioParams scenario_params(const RunConfig& cfg, std::string_view label);
model::ModelConfig model_config(const RunConfig& cfg);
tasks::PretrainConfig pretrain_config(const RunConfig& cfg);
tasks::TrainConfig train_config(const RunConfig& cfg);

// Seed for a named stream, derived from run.seed.
std::uint64_t stream_seed(const RunConfig& cfg, std::string_view stream);

// Sets the model.* width and depth keys of a named size (tiny, small, base, large).
void apply_model_size(RunConfig& cfg, std::string_view name);

// Loads the listed files and interleaves their samples round-robin, keeping
// at most `limit` (0: all). Throws ShapeError when dimensions differ.
channelgen::Dataset load_merged(const std::vector<std::string>& paths, std::size_t limit, std::string_view key);

// Output file names, relative to run.out.
std::filesystem::path task_stem(tasks::TaskKind task, tasks::Regime regime);

// Each command returns the files it wrote. Progress goes to `log`.
std::vector<std::filesystem::path> cmd_gen(const RunConfig& cfg, std::ostream& log);
std::vector<std::filesystem::path> cmd_pretrain(const RunConfig& cfg, std::ostream& log);
std::vector<std::filesystem::path> cmd_train(const RunConfig& cfg, std::ostream& log);
std::vector<std::filesystem::path> cmd_eval(const RunConfig& cfg, std::ostream& log);
std::vector<std::filesystem::path> cmd_zeroshot(const RunConfig& cfg, std::ostream& log);
std::vector<std::filesystem::path> cmd_sweep(const RunConfig& cfg, std::ostream& log);

// 1: validation or shape problem, 2: I/O or file format, 3: numeric failure.
int exit_code_for(const std::exception& e) noexcept;

}  // namespace csimae::cli
