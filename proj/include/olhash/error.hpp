// Copyright 2026 The olhash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace olhash {

// Bad caller input: zero sizes, out-of-range hyperparameters, malformed labels.
class InvalidArgument : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidArgument {
 public:
    using InvalidArgument::InvalidArgument;
};

// An operation was invoked outside its allowed state (e.g. inference on a zero-loss pair,
// warmup after training started).
class ContractViolation : public std::logic_error {
 public:
    using std::logic_error::logic_error;
};

// Unreadable or corrupted files.
class FormatError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void
check_dim(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(want) + ", got " +
                                std::to_string(got));
    }
}

}  // namespace detail

}  // namespace olhash
