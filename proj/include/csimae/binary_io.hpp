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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csimae {

// Little-endian encoder into a growing byte buffer.
class ByteWriter {
  public:
    void bytes(std::string_view raw) { buf_.insert(buf_.end(), raw.begin(), raw.end()); }
    void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void f32(float v);
    void f64(double v);
    void str(std::string_view s);  // u32 length prefix + bytes

    const std::vector<char>& buffer() const noexcept { return buf_; }
    std::vector<char>& buffer() noexcept { return buf_; }

  private:
    std::vector<char> buf_;
};

// Little-endian decoder over a byte span; throws TruncationError on overrun.
class ByteReader {
  public:
    ByteReader(std::span<const char> data, std::string context)
        : data_(data), context_(std::move(context)) {}

    std::string bytes(std::size_t n);
    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    float f32();
    double f64();
    std::string str();

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return data_.size() - pos_; }

  private:
    void need(std::size_t n);
    std::span<const char> data_;
    std::string context_;
    std::size_t pos_ = 0;
};

std::vector<char> read_file(const std::filesystem::path& path);                   // IoError
void write_file(const std::filesystem::path& path, std::span<const char> bytes);  // IoError

// 64-bit FNV-1a, used for config hashes and parameter checksums.
std::uint64_t fnv1a64(std::span<const char> bytes, std::uint64_t seed = 0xcbf29ce484222325ULL) noexcept;
std::uint64_t fnv1a64(std::string_view text) noexcept;
std::string hex64(std::uint64_t v);

}  // namespace csimae
