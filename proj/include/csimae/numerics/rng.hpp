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
#include <random>
#include <span>
#include <vector>

namespace csimae {

// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Seed for stream `index` under `base`: depends only on the pair.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

// Deterministic random source. Distributions are computed here from the raw
// mt19937_64 output (whose sequence is fixed by the standard) rather than via
// <random> distributions, whose algorithms vary between library vendors.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    double uniform();                                   // [0, 1)
    double uniform(double lo, double hi);               // [lo, hi)
    std::size_t uniform_index(std::size_t n);           // [0, n)
    double normal();                                    // N(0, 1), Box-Muller
    double truncated_normal(double stddev, double bound_in_stddevs = 2.0);
    double exponential(double mean);

    // Fisher-Yates.
    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = uniform_index(i);
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace csimae
