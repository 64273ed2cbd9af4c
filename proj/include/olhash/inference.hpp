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
#include <vector>

#include "olhash/hash_model.hpp"
#include "olhash/loss.hpp"

namespace olhash {

enum class Side { I, J };

/// Potential loss of flipping bit `bit`: the smaller of h_i[k] w_k^T x_i and h_j[k] w_k^T x_j,
/// with `side` the one attaining it (ties go to side I).
struct BitCost {
    std::size_t bit = 0;
    double delta = 0.0;
    Side side = Side::I;
};

struct Flip {
    std::size_t bit = 0;
    Side side = Side::I;

    friend bool
    operator==(const Flip&, const Flip&) = default;
};

/// Bits changed to turn h into the zero-loss pair g. At most one side per bit, sorted by bit.
struct FlipPlan {
    std::vector<Flip> flips;
    std::size_t p0 = 0;
    /// Set when a selected bit's projection column is all zero (its delta is then 0 regardless
    /// of the data, so the choice carries no information).
    bool touches_zero_column = false;
};

struct ZeroLossCodes {
    CodePair g;
    FlipPlan plan;
};

std::vector<BitCost>
delta_scores(const Vector& proj_i, const Vector& proj_j, const CodePair& h, std::span<const std::size_t> candidates);

std::vector<BitCost>
delta_scores(const HashModel& model, const Vector& xi, const Vector& xj, const CodePair& h,
             std::span<const std::size_t> candidates);

/// Bits where h_i and h_j agree (Side::I/J irrelevant) when `agreeing`, otherwise where they differ.
std::vector<std::size_t>
candidate_bits(const CodePair& h, bool agreeing);

/// Flips the p0 cheapest candidate bits of h so that the pair reaches zero similarity loss with as
/// few changed bits as possible. Dissimilar pairs draw from agreeing bits (p0 = ceil(beta r) - D),
/// similar pairs from disagreeing bits (p0 = D - alpha). Cost ties are broken by lower bit index.
///
/// `model` is only consulted to flag all-zero columns; pass nullptr to skip that check.
/// Throws ContractViolation if h already has zero loss.
ZeroLossCodes
infer_zero_loss_codes(const Vector& proj_i, const Vector& proj_j, const CodePair& h, Label s,
                      const LossParams& params, const HashModel* model = nullptr);

ZeroLossCodes
infer_zero_loss_codes(const HashModel& model, const Vector& xi, const Vector& xj, const CodePair& h, Label s,
                      const LossParams& params);

}  // namespace olhash
