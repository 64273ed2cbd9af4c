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
#include <span>

#include "olhash/hash_model.hpp"

namespace olhash {

/// Explicit Gaussian RBF feature map z(x)[p] = exp(-||x - a_p||^2 / (2 sigma^2)) over m stored anchors.
class KernelMapper {
 public:
    KernelMapper() = default;

    /// `anchors` is d_raw x m, one anchor per column. Throws InvalidArgument on empty or non-finite
    /// anchors or sigma <= 0.
    explicit KernelMapper(Matrix anchors, double sigma = 1.0);

    std::size_t
    input_dim() const noexcept {
        return static_cast<std::size_t>(anchors_.rows());
    }

    std::size_t
    anchor_count() const noexcept {
        return static_cast<std::size_t>(anchors_.cols());
    }

    double
    sigma() const noexcept {
        return sigma_;
    }

    const Matrix&
    anchors() const noexcept {
        return anchors_;
    }

    Vector
    map_one(const Vector& x) const;

 private:
    Matrix anchors_;
    double sigma_ = 1.0;
};

/// Uses the samples verbatim, in order, as anchors. Duplicates are kept.
KernelMapper
fit_anchors(std::span<const Vector> samples, double sigma = 1.0);

}  // namespace olhash
