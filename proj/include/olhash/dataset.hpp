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
#include <cstdint>
#include <optional>
#include <vector>

#include "olhash/hash_model.hpp"

namespace olhash {

/// In-memory row set with optional class labels.
struct Dataset {
    std::size_t dim = 0;
    std::vector<Vector> rows;
    std::optional<std::vector<std::uint32_t>> labels;

    std::size_t
    size() const noexcept {
        return rows.size();
    }

    /// Throws InvalidArgument on ragged rows, non-finite values or a label count mismatch.
    void
    validate() const;
};

struct BlobSpec {
    std::size_t classes = 10;
    std::size_t points = 2000;
    std::size_t dim = 32;
    /// Standard deviation of the class centers; points scatter around them with unit variance.
    double center_scale = 1.0;
};

/// Gaussian blobs, point p in class p % classes.
Dataset
make_blobs(const BlobSpec& spec, RngSeed seed);

/// Rows [first, first + count) as a new dataset, labels included.
Dataset
slice(const Dataset& data, std::size_t first, std::size_t count);

}  // namespace olhash
