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

#include "olhash/pipeline.hpp"

#include "olhash/error.hpp"

namespace olhash {

FeaturePipeline::FeaturePipeline(std::size_t input_dim, std::size_t warmup, bool use_kernel, double sigma)
    : input_dim_(input_dim), warmup_(warmup), use_kernel_(use_kernel), sigma_(sigma) {
    if (input_dim_ == 0) {
        throw InvalidArgument("input dimension must be positive");
    }
    if (warmup_ == 0) {
        throw InvalidArgument("warmup must be at least 1");
    }
    if (!(sigma_ > 0.0)) {
        throw InvalidArgument("kernel bandwidth must be positive");
    }
    buffer_.reserve(warmup_);
}

bool
FeaturePipeline::ingest_warmup(const Vector& x) {
    if (ready_) {
        throw ContractViolation("ingest_warmup called after training started");
    }
    detail::check_dim(static_cast<std::size_t>(x.size()), input_dim_, "ingest_warmup");
    if (!x.allFinite()) {
        throw InvalidArgument("ingest_warmup: non-finite sample");
    }
    buffer_.push_back(x);
    if (buffer_.size() == warmup_) {
        finish_warmup();
    }
    return ready_;
}

void
FeaturePipeline::finish_warmup() {
    if (use_kernel_) {
        kernel_ = fit_anchors(buffer_, sigma_);
    }
    mean_ = Vector::Zero(static_cast<Eigen::Index>(feature_dim()));
    for (const Vector& x : buffer_) {
        mean_ += features(x);
    }
    count_ = buffer_.size();
    mean_ /= static_cast<double>(count_);
    std::vector<Vector>().swap(buffer_);
    ready_ = true;
}

std::size_t
FeaturePipeline::feature_dim() const noexcept {
    return use_kernel_ ? warmup_ : input_dim_;
}

Vector
FeaturePipeline::features(const Vector& x) const {
    detail::check_dim(static_cast<std::size_t>(x.size()), input_dim_, "pipeline input");
    if (kernel_) {
        return kernel_->map_one(x);
    }
    return x;
}

void
FeaturePipeline::require_ready(const char* what) const {
    if (!ready_) {
        throw ContractViolation(std::string(what) + " called before warmup completed");
    }
}

Vector
FeaturePipeline::center(const Vector& x) {
    require_ready("center");
    return center_features(features(x));
}

Vector
FeaturePipeline::center_features(const Vector& z) {
    require_ready("center");
    detail::check_dim(static_cast<std::size_t>(z.size()), feature_dim(), "center");
    Vector centered = z - mean_;
    ++count_;
    mean_ += centered / static_cast<double>(count_);
    return centered;
}

Vector
FeaturePipeline::apply(const Vector& x) const {
    require_ready("apply");
    return features(x) - mean_;
}

std::size_t
FeaturePipeline::footprint_bytes() const noexcept {
    std::size_t bytes = buffer_.capacity() * sizeof(Vector);
    for (const Vector& v : buffer_) {
        bytes += static_cast<std::size_t>(v.size()) * sizeof(double);
    }
    bytes += static_cast<std::size_t>(mean_.size()) * sizeof(double);
    if (kernel_) {
        bytes += static_cast<std::size_t>(kernel_->anchors().size()) * sizeof(double);
    }
    return bytes;
}

}  // namespace olhash
