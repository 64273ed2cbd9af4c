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
#include <span>
#include <vector>

#include "olhash/trainer.hpp"

namespace olhash {

struct EnsembleReport {
    std::vector<double> losses;  ///< R_m for every model, before any update
    /// Index of the single model stepped on a similar pair; nullopt on dissimilar pairs (all models eligible).
    std::optional<std::size_t> selected;
    /// Present for every model that ran a round this step.
    std::vector<std::optional<UpdateReport>> reports;
    /// R*_m: R_m for the selected/eligible models, 0 otherwise.
    std::vector<double> r_star;
};

/// Multi-model online hashing over T independently initialized models sharing one centering pipeline.
/// Similar pairs update only the model with the smallest loss (lowest index on ties); dissimilar pairs
/// update every model whose loss is positive.
class Ensemble {
 public:
    /// Model m is initialized from seed + m, so model 0 matches a Trainer with the same config.
    Ensemble(TrainerConfig config, std::size_t models, std::size_t input_dim);

    bool
    ingest_warmup(const Vector& x);

    bool
    ready() const noexcept {
        return !learners_.empty();
    }

    EnsembleReport
    mm_step(const PairSample& pair);

    /// Replaces the weights of every model, e.g. to warm-start from a snapshot. Requires ready(); throws
    /// DimensionMismatch unless there are size() models of shape feature_dim() x bits.
    void
    restore_models(std::vector<HashModel> models);

    std::size_t
    size() const noexcept {
        return model_count_;
    }

    const HashModel&
    model(std::size_t m) const;

    const FeaturePipeline&
    pipeline() const noexcept {
        return pipeline_;
    }

    const TrainerConfig&
    config() const noexcept {
        return config_;
    }

    const CenteredPair&
    last_pair() const noexcept {
        return last_;
    }

    ModelSnapshot
    snapshot() const;

    static RngSeed
    model_seed(RngSeed base, std::size_t m) {
        return {base.value + m};
    }

 private:
    TrainerConfig config_;
    std::size_t model_count_;
    FeaturePipeline pipeline_;
    std::vector<HashLearner> learners_;
    CenteredPair last_;
};

/// min over models of the per-model Hamming distance. Throws DimensionMismatch on shape mismatch.
std::size_t
mm_distance(std::span<const HashCode> item_codes, std::span<const HashCode> query_codes);

}  // namespace olhash
