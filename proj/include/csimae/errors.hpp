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

#include <stdexcept>
#include <string>

namespace csimae {

// Tensor shapes that do not fit an operation.
class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Configuration values that fail validation. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Filesystem failures. Maps to CLI exit code 2.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Base for malformed binary/text artifacts; also reported as I/O failures.
class FormatError : public IoError {
  public:
    using IoError::IoError;
};

class BadMagicError : public FormatError {
  public:
    using FormatError::FormatError;
};

class VersionMismatchError : public FormatError {
  public:
    using FormatError::FormatError;
};

class TruncationError : public FormatError {
  public:
    using FormatError::FormatError;
};

// Header and payload disagree (counts, dimensions, trailing bytes).
class IntegrityError : public FormatError {
  public:
    using FormatError::FormatError;
};

class ParseError : public FormatError {
  public:
    using FormatError::FormatError;
};

// Non-finite loss or parameters during training. Maps to CLI exit code 3.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace csimae
