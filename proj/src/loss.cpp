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

#include "olhash/loss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "olhash/error.hpp"

namespace olhash {

Label
label_from_int(int value) {
    if (value == 1) {
        return Label::Similar;
    }
    if (value == -1) {
        return Label::Dissimilar;
    }
    throw InvalidArgument("pair label must be +1 or -1, got " + std::to_string(value));
}

void
LossParams::validate() const {
    if (bits == 0) {
        throw InvalidArgument("code length must be positive");
    }
    if (alpha >= bits) {
        throw InvalidArgument("alpha must be smaller than the code length");
    }
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw InvalidArgument("beta must lie in (0, 1]");
    }
    if (!(dissimilar_threshold() > static_cast<double>(alpha))) {
        throw InvalidArgument("beta * bits (" + std::to_string(beta * bits) + ") must exceed alpha (" +
                              std::to_string(alpha) + ")");
    }
}

double
LossParams::dissimilar_threshold() const {
    const double raw = beta * static_cast<double>(bits);
    const double nearest = std::round(raw);
    return std::abs(raw - nearest) < 1e-9 ? nearest : raw;
}

std::size_t
LossParams::dissimilar_target() const {
    return static_cast<std::size_t>(std::ceil(dissimilar_threshold()));
}

double
similarity_loss(std::size_t distance, Label s, const LossParams& params) {
    const auto dist = static_cast<double>(distance);
    if (s == Label::Similar) {
        return std::max(0.0, dist - static_cast<double>(params.alpha));
    }
    return std::max(0.0, params.dissimilar_threshold() - dist);
}

double
similarity_loss(const CodePair& codes, Label s, const LossParams& params) {
    return similarity_loss(hamming_distance(codes.i, codes.j), s, params);
}

double
pair_score(const Vector& proj_i, const Vector& proj_j, const CodePair& codes) {
    return structured_score(proj_i, codes.i) + structured_score(proj_j, codes.j);
}

double
pair_score(const HashModel& model, const Vector& xi, const Vector& xj, const CodePair& codes) {
    return pair_score(project(model, xi), project(model, xj), codes);
}

double
prediction_loss(const HashModel& model, const Vector& xi, const Vector& xj, const CodePair& h, const CodePair& g,
                double similarity) {
    if (!(similarity >= 0.0)) {
        throw InvalidArgument("prediction_loss: similarity loss must be non-negative");
    }
    const Vector pi = project(model, xi);
    const Vector pj = project(model, xj);
    return pair_score(pi, pj, h) - pair_score(pi, pj, g) + std::sqrt(similarity);
}

}  // namespace olhash
