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
#include "olhash/kernel_map.hpp"

namespace olhash {

/// Shared input path of a training stream: optional RBF anchor map followed by centering with a
/// running mean. Samples are buffered until `warmup` have arrived; the buffer then becomes the kernel
/// anchors (when enabled) and seeds the mean, and is released.
class FeaturePipeline {
 public:
    FeaturePipeline(std::size_t input_dim, std::size_t warmup, bool use_kernel, double sigma = 1.0);

    /// Buffers x. Returns true once the pipeline is ready. Throws ContractViolation when already ready.
    bool
    ingest_warmup(const Vector& x);

    bool
    ready() const noexcept {
        return ready_;
    }

    std::size_t
    input_dim() const noexcept {
        return input_dim_;
    }

    /// Dimension after the kernel map (the anchor count) or input_dim() without one.
    std::size_t
    feature_dim() const noexcept;

    /// Kernel map or identity; no centering.
    Vector
    features(const Vector& x) const;

    /// features(x) - mu, then folds features(x) into the mean: mu += (z - mu) / count.
    Vector
    center(const Vector& x);

    Vector
    center_features(const Vector& z);

    /// features(x) - mu without touching the mean.
    Vector
    apply(const Vector& x) const;

    const Vector&
    mean() const noexcept {
        return mean_;
    }

    std::uint64_t
    count() const noexcept {
        return count_;
    }

    const std::optional<KernelMapper>&
    kernel() const noexcept {
        return kernel_;
    }

    std::size_t
    buffered() const noexcept {
        return buffer_.size();
    }

    /// Heap bytes held (buffer, mean, anchors).
    std::size_t
    footprint_bytes() const noexcept;

 private:
    void
    finish_warmup();

    void
    require_ready(const char* what) const;

    std::size_t input_dim_;
    std::size_t warmup_;
    bool use_kernel_;
    double sigma_;
    bool ready_ = false;
    std::vector<Vector> buffer_;
    std::optional<KernelMapper> kernel_;
    Vector mean_;
    std::uint64_t count_ = 0;
};

}  // namespace olhash
