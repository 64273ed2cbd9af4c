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

#include <cstddef>
#include <optional>
#include <vector>

#include "olhash/hash_code.hpp"
#include "olhash/hash_model.hpp"
#include "olhash/kernel_map.hpp"

namespace olhash {

/// Immutable encoder state: everything needed to turn raw vectors into codes for all T models.
struct ModelSnapshot {
    std::size_t input_dim = 0;
    std::optional<KernelMapper> kernel;
    Vector mean;
    std::vector<HashModel> models;

    std::size_t
    feature_dim() const noexcept {
        return static_cast<std::size_t>(mean.size());
    }

    std::size_t
    bits() const noexcept {
        return models.empty() ? 0 : models.front().bits();
    }

    /// Throws InvalidArgument when the parts are inconsistent.
    void
    validate() const;

    /// Kernel map (if any) then mean subtraction.
    Vector
    prepare(const Vector& x) const;

    /// One code per model.
    std::vector<HashCode>
    encode(const Vector& x) const;
};

}  // namespace olhash
