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

#include "olhash/hash_model.hpp"
#include "olhash/inference.hpp"
#include "olhash/loss.hpp"

namespace olhash {

/// Diagnostics of one passive-aggressive round.
struct UpdateReport {
    double similarity_loss = 0.0;  ///< R(h, s)
    double prediction_loss = 0.0;  ///< l(W^t); 0 on passive rounds
    double tau = 0.0;
    double update_norm_sq = 0.0;  ///< ||X (g - h)^T||_F^2; 0 on passive rounds
    FlipPlan flips;
    CodePair h;
    CodePair g;  ///< equals h on passive rounds
    bool updated = false;
    bool degenerate = false;  ///< R > 0 but every flipped side is a zero vector
};

/// The model's view of a centered pair before any update.
struct Assessment {
    Vector proj_i;
    Vector proj_j;
    CodePair h;
    Label s = Label::Similar;
    double similarity_loss = 0.0;
};

/// One hash model trained by closed-form passive-aggressive steps on centered pairs.
class HashLearner {
 public:
    /// Throws InvalidArgument on invalid loss params, C <= 0 or a bit-count mismatch with the model.
    HashLearner(HashModel model, LossParams params, double margin);

    Assessment
    assess(const Vector& xi, const Vector& xj, Label s) const;

    /// Applies W += tau X (g - h)^T with tau = min(C, l / ||X (g - h)^T||_F^2). Only columns in the
    /// flip plan change. `xi`/`xj` must be the vectors `assessment` was computed from.
    UpdateReport
    apply(const Assessment& assessment, const Vector& xi, const Vector& xj);

    UpdateReport
    step(const Vector& xi, const Vector& xj, Label s) {
        return apply(assess(xi, xj, s), xi, xj);
    }

    const HashModel&
    model() const noexcept {
        return model_;
    }

    const LossParams&
    params() const noexcept {
        return params_;
    }

    double
    margin() const noexcept {
        return margin_;
    }

 private:
    HashModel model_;
    LossParams params_;
    double margin_;
};

/// 4 (a ||x_i||^2 + b ||x_j||^2) with a, b the flips on each side. Equals ||X (g - h)^T||_F^2 because
/// each changed column carries exactly one of +-2 x_i or +-2 x_j.
double
update_norm_sq(const FlipPlan& plan, const Vector& xi, const Vector& xj);

}  // namespace olhash
