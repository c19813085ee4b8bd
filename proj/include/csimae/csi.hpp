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

#include <complex>
#include <cstddef>
#include <vector>

namespace csimae {

using cplx = std::complex<double>;

// Complex channel matrix over (antenna, subcarrier), row-major.
class CsiMatrix {
  public:
    CsiMatrix() = default;
    CsiMatrix(std::size_t antennas, std::size_t subcarriers)
        : antennas_(antennas), subcarriers_(subcarriers), data_(antennas * subcarriers) {}

    std::size_t antennas() const noexcept { return antennas_; }
    std::size_t subcarriers() const noexcept { return subcarriers_; }
    std::size_t size() const noexcept { return data_.size(); }

    cplx& operator()(std::size_t a, std::size_t k) noexcept { return data_[a * subcarriers_ + k]; }
    const cplx& operator()(std::size_t a, std::size_t k) const noexcept {
        return data_[a * subcarriers_ + k];
    }

    std::vector<cplx>& data() noexcept { return data_; }
    const std::vector<cplx>& data() const noexcept { return data_; }

    double frobenius_sq() const noexcept {
        double s = 0.0;
        for (const auto& v : data_) s += std::norm(v);
        return s;
    }

    bool operator==(const CsiMatrix&) const = default;

  private:
    std::size_t antennas_ = 0;
    std::size_t subcarriers_ = 0;
    std::vector<cplx> data_;
};

}  // namespace csimae
