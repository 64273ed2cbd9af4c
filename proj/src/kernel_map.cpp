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

#include "olhash/kernel_map.hpp"

#include <cmath>

#include "olhash/error.hpp"

namespace olhash {

KernelMapper::KernelMapper(Matrix anchors, double sigma) : anchors_(std::move(anchors)), sigma_(sigma) {
    if (anchors_.rows() == 0 || anchors_.cols() == 0) {
        throw InvalidArgument("kernel mapper needs at least one non-empty anchor");
    }
    if (!anchors_.allFinite()) {
        throw InvalidArgument("kernel anchors must be finite");
    }
    if (!(sigma_ > 0.0) || !std::isfinite(sigma_)) {
        throw InvalidArgument("kernel bandwidth must be positive");
    }
}

Vector
KernelMapper::map_one(const Vector& x) const {
    detail::check_dim(static_cast<std::size_t>(x.size()), input_dim(), "kernel map");
    const double scale = -1.0 / (2.0 * sigma_ * sigma_);
    Vector z(anchors_.cols());
    for (Eigen::Index p = 0; p < anchors_.cols(); ++p) {
        z[p] = std::exp(scale * (x - anchors_.col(p)).squaredNorm());
    }
    return z;
}

KernelMapper
fit_anchors(std::span<const Vector> samples, double sigma) {
    if (samples.empty()) {
        throw InvalidArgument("fit_anchors: no samples");
    }
    const auto dim = samples.front().size();
    Matrix anchors(dim, static_cast<Eigen::Index>(samples.size()));
    for (std::size_t p = 0; p < samples.size(); ++p) {
        detail::check_dim(static_cast<std::size_t>(samples[p].size()), static_cast<std::size_t>(dim), "fit_anchors");
        anchors.col(static_cast<Eigen::Index>(p)) = samples[p];
    }
    return KernelMapper(std::move(anchors), sigma);
}

}  // namespace olhash
