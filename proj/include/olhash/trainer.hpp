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

#include "olhash/learner.hpp"
#include "olhash/pipeline.hpp"
#include "olhash/snapshot.hpp"

namespace olhash {

inline constexpr std::uint32_t kDefaultBits = 48;
inline constexpr std::uint32_t kDefaultAlpha = 0;
inline constexpr double kDefaultBeta = 0.5;
/// Default margin C. 1.0 is the other commonly used setting; both satisfy the usual C lower bound.
inline constexpr double kDefaultMargin = 0.1;
inline constexpr double kLargeMargin = 1.0;
inline constexpr std::size_t kDefaultWarmup = 256;
inline constexpr std::size_t kDefaultModels = 1;

struct TrainerConfig {
    std::uint32_t bits = kDefaultBits;
    std::uint32_t alpha = kDefaultAlpha;
    double beta = kDefaultBeta;
    double margin = kDefaultMargin;
    RngSeed seed{};
    std::size_t warmup = kDefaultWarmup;
    bool use_kernel = false;
    double sigma = 1.0;

    LossParams
    loss() const {
        return {alpha, beta, bits};
    }

    /// Throws InvalidArgument on out-of-range values.
    void
    validate() const;
};

struct CenteredPair {
    Vector xi;
    Vector xj;
};

/// Single-model online hashing: warmup buffering, centering, and one passive-aggressive round per pair.
///
/// Steps are strictly sequential. snapshot() returns an immutable copy usable by concurrent readers.
class Trainer {
 public:
    Trainer(TrainerConfig config, std::size_t input_dim);

    /// See FeaturePipeline::ingest_warmup. The LSH model is drawn once the pipeline becomes ready.
    bool
    ingest_warmup(const Vector& x);

    bool
    ready() const noexcept {
        return learner_.has_value();
    }

    /// Centers x_i then x_j (each folded into the running mean in that order) and runs one round.
    /// Throws ContractViolation before warmup completes.
    UpdateReport
    step(const PairSample& pair);

    const HashModel&
    model() const;

    const FeaturePipeline&
    pipeline() const noexcept {
        return pipeline_;
    }

    const TrainerConfig&
    config() const noexcept {
        return config_;
    }

    std::uint64_t
    steps() const noexcept {
        return steps_;
    }

    /// Centered vectors of the most recent step.
    const CenteredPair&
    last_pair() const noexcept {
        return last_;
    }

    ModelSnapshot
    snapshot() const;

    std::size_t
    footprint_bytes() const noexcept;

 private:
    TrainerConfig config_;
    FeaturePipeline pipeline_;
    std::optional<HashLearner> learner_;
    CenteredPair last_;
    std::uint64_t steps_ = 0;
};

}  // namespace olhash
