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

#include "olhash/hash_code.hpp"
#include "olhash/hash_model.hpp"

namespace olhash {

enum class Label : int { Similar = 1, Dissimilar = -1 };

/// Throws InvalidArgument unless value is +1 or -1.
Label
label_from_int(int value);

/// Thresholds of the pairwise similarity loss: a similar pair may differ in at most `alpha` bits,
/// a dissimilar pair must differ in at least beta * bits.
struct LossParams {
    std::uint32_t alpha = 0;
    double beta = 0.5;
    std::uint32_t bits = 48;

    /// Throws InvalidArgument unless 0 <= alpha < bits, 0 < beta <= 1 and beta * bits > alpha.
    void
    validate() const;

    /// beta * bits, snapped to the nearest integer when within 1e-9 of it.
    double
    dissimilar_threshold() const;

    /// ceil(beta * bits): the Hamming distance inference targets for dissimilar pairs.
    std::size_t
    dissimilar_target() const;
};

struct CodePair {
    HashCode i;
    HashCode j;

    friend bool
    operator==(const CodePair&, const CodePair&) = default;
};

struct PairSample {
    Vector xi;
    Vector xj;
    Label s = Label::Similar;
};

double
similarity_loss(std::size_t distance, Label s, const LossParams& params);

double
similarity_loss(const CodePair& codes, Label s, const LossParams& params);

/// i^T W^T x_i + j^T W^T x_j. Evaluated on the model's own codes this is H(W); on the
/// zero-loss codes it is G(W).
double
pair_score(const HashModel& model, const Vector& xi, const Vector& xj, const CodePair& codes);

double
pair_score(const Vector& proj_i, const Vector& proj_j, const CodePair& codes);

/// H(W) - G(W) + sqrt(R), with h and g held fixed. Throws InvalidArgument if R < 0.
double
prediction_loss(const HashModel& model, const Vector& xi, const Vector& xj, const CodePair& h, const CodePair& g,
                double similarity);

}  // namespace olhash
