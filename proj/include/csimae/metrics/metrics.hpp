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

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "csimae/csi.hpp"

namespace csimae::metrics {

inline constexpr double kDbFloor = -120.0;
inline constexpr double kLinearFloor = 1e-12;

struct Nmse {
    double linear = 0.0;
    double db = 0.0;
};

// 10 log10(linear), clamped to kDbFloor below kLinearFloor.
double to_db(double linear) noexcept;

// sum |H - Hhat|^2 / sum |H|^2. Throws ContractError for a zero-energy H and
// ShapeError on a size mismatch.
Nmse nmse(const CsiMatrix& H, const CsiMatrix& Hhat);
// Dataset level: mean of the per-sample linear values, then dB.
Nmse mean_nmse(std::span<const double> per_sample_linear);

using Point = std::array<double, 2>;
std::vector<double> position_errors(std::span<const Point> preds, std::span<const Point> truths);

struct ErrorStats {
    std::size_t count = 0;
    double mean = 0.0;
    double rmse = 0.0;
    std::vector<std::pair<double, double>> quantiles;  // (q, error)

    bool operator==(const ErrorStats&) const = default;
};

// Linear interpolation between order statistics at rank q (n - 1).
double quantile(std::span<const double> sorted, double q);

inline constexpr std::array<double, 11> kDefaultQuantiles = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6,
                                                             0.7, 0.8, 0.9, 0.95, 0.99};
ErrorStats cdf_table(std::span<const double> errors, std::span<const double> quantiles = kDefaultQuantiles);

struct MetricsReport {
    std::string task;
    std::string regime;
    std::string source_scenario;
    std::string target_scenario;
    std::size_t sample_count = 0;
    std::optional<double> nmse_linear;  // reconstruction tasks
    std::optional<double> nmse_db;
    std::optional<ErrorStats> positioning;  // positioning only
    std::vector<std::pair<std::string, std::uint64_t>> seeds;
    std::string config_hash;
    // Free-form numeric annotations (compression ratio, step counts, ...).
    std::vector<std::pair<std::string, double>> extras;

    bool operator==(const MetricsReport&) const = default;
};

// Serialized form: pretty-printed JSON with a fixed key order, newline-terminated.
std::string report_to_string(const MetricsReport& report);
// Throws ParseError naming the location (byte offset or missing key).
MetricsReport report_from_string(const std::string& text, const std::string& where = "report");
void write_report(const std::filesystem::path& path, const MetricsReport& report);
MetricsReport read_report(const std::filesystem::path& path);

// Comparison table keyed by (task, regime, target scenario). Later reports
// with the same key replace earlier ones.
using ReportKey = std::tuple<std::string, std::string, std::string>;
std::map<ReportKey, MetricsReport> merge_reports(std::span<const MetricsReport> reports);
std::string format_table(const std::map<ReportKey, MetricsReport>& table);

// Relative improvement of `value` over `base` on linear NMSE, in percent:
// (base - value) / base * 100.
double delta_percent(double base_linear, double value_linear);

}  // namespace csimae::metrics
