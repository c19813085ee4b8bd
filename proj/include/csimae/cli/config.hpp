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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csimae::cli {

enum class ValueType {
    U64,         // unsigned integer
    Real,        // finite floating point
    Text,        // free text (paths, names)
    List,        // comma-separated text items
    U64List,     // comma-separated unsigned integers
    OptionalU64, // empty means "scenario preset value"
    OptionalReal,
};

struct KeyInfo {
    std::string_view key;
    ValueType type;
    std::string_view fallback;
    std::string_view doc;
};

// Every accepted key, in canonical order.
std::span<const KeyInfo> schema();
const KeyInfo* find_key(std::string_view key) noexcept;

// Human-readable listing of the schema (key, type, default, meaning).
std::string schema_text();

// Flat key=value configuration with dotted namespaces. Lines are
// "key = value"; '#' starts a comment; blank lines are ignored.
class RunConfig {
  public:
    RunConfig() = default;

    // Throws ValidationError naming every unknown key, duplicate key or bad
    // value, with line numbers.
    static RunConfig parse(std::string_view text, std::string_view source = "<config>");
    static RunConfig load(const std::filesystem::path& path);

    // Overrides one key; accepts "key=value" or separate arguments.
    void set(std::string_view assignment);
    void set(std::string_view key, std::string_view value);

    bool is_set(std::string_view key) const noexcept;
    const std::string& raw(std::string_view key) const;

    std::uint64_t u64(std::string_view key) const;
    std::size_t size(std::string_view key) const { return static_cast<std::size_t>(u64(key)); }
    double real(std::string_view key) const;
    const std::string& text(std::string_view key) const { return raw(key); }
    std::vector<std::string> list(std::string_view key) const;
    std::vector<std::uint64_t> u64_list(std::string_view key) const;

    // Every key with its resolved value, one "key=value" line each, in schema
    // order. run.out is left out: where results go does not change them.
    std::string canonical() const;
    std::uint64_t hash() const;
    std::string hash_hex() const;

  private:
    std::map<std::string, std::string, std::less<>> values_;
};

}  // namespace csimae::cli
