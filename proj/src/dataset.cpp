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

#include "olhash/dataset.hpp"

#include <random>

#include "olhash/error.hpp"

namespace olhash {

void
Dataset::validate() const {
    for (const Vector& row : rows) {
        detail::check_dim(static_cast<std::size_t>(row.size()), dim, "dataset row");
        if (!row.allFinite()) {
            throw InvalidArgument("dataset contains non-finite values");
        }
    }
    if (labels && labels->size() != rows.size()) {
        throw InvalidArgument("dataset label count does not match row count");
    }
}

Dataset
make_blobs(const BlobSpec& spec, RngSeed seed) {
    if (spec.classes == 0 || spec.dim == 0) {
        throw InvalidArgument("make_blobs: classes and dim must be positive");
    }
    std::mt19937_64 rng(seed.value);
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto d = static_cast<Eigen::Index>(spec.dim);

    std::vector<Vector> centers(spec.classes, Vector(d));
    for (Vector& c : centers) {
        for (Eigen::Index i = 0; i < d; ++i) {
            c[i] = spec.center_scale * normal(rng);
        }
    }

    Dataset data;
    data.dim = spec.dim;
    data.rows.reserve(spec.points);
    data.labels.emplace();
    data.labels->reserve(spec.points);
    for (std::size_t p = 0; p < spec.points; ++p) {
        const std::size_t cls = p % spec.classes;
        Vector x(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            x[i] = centers[cls][i] + normal(rng);
        }
        data.rows.push_back(std::move(x));
        data.labels->push_back(static_cast<std::uint32_t>(cls));
    }
    return data;
}

Dataset
slice(const Dataset& data, std::size_t first, std::size_t count) {
    if (first + count > data.size()) {
        throw InvalidArgument("slice out of range");
    }
    Dataset out;
    out.dim = data.dim;
    const auto begin = data.rows.begin() + static_cast<std::ptrdiff_t>(first);
    out.rows.assign(begin, begin + static_cast<std::ptrdiff_t>(count));
    if (data.labels) {
        const auto lbegin = data.labels->begin() + static_cast<std::ptrdiff_t>(first);
        out.labels.emplace(lbegin, lbegin + static_cast<std::ptrdiff_t>(count));
    }
    return out;
}

}  // namespace olhash
