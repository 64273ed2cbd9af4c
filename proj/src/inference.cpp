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

#include "olhash/inference.hpp"

#include <algorithm>
#include <string>

#include "olhash/error.hpp"

namespace olhash {

std::vector<BitCost>
delta_scores(const Vector& proj_i, const Vector& proj_j, const CodePair& h, std::span<const std::size_t> candidates) {
    const std::size_t r = h.i.size();
    detail::check_dim(h.j.size(), r, "delta_scores code pair");
    detail::check_dim(static_cast<std::size_t>(proj_i.size()), r, "delta_scores projection i");
    detail::check_dim(static_cast<std::size_t>(proj_j.size()), r, "delta_scores projection j");

    std::vector<BitCost> costs;
    costs.reserve(candidates.size());
    for (const std::size_t k : candidates) {
        if (k >= r) {
            throw InvalidArgument("delta_scores: bit index " + std::to_string(k) + " out of range");
        }
        const auto idx = static_cast<Eigen::Index>(k);
        const double on_i = h.i.sign(k) * proj_i[idx];
        const double on_j = h.j.sign(k) * proj_j[idx];
        if (on_i <= on_j) {
            costs.push_back({k, on_i, Side::I});
        } else {
            costs.push_back({k, on_j, Side::J});
        }
    }
    return costs;
}

std::vector<BitCost>
delta_scores(const HashModel& model, const Vector& xi, const Vector& xj, const CodePair& h,
             std::span<const std::size_t> candidates) {
    return delta_scores(project(model, xi), project(model, xj), h, candidates);
}

std::vector<std::size_t>
candidate_bits(const CodePair& h, bool agreeing) {
    detail::check_dim(h.j.size(), h.i.size(), "candidate_bits");
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < h.i.size(); ++k) {
        if ((h.i.bit(k) == h.j.bit(k)) == agreeing) {
            out.push_back(k);
        }
    }
    return out;
}

ZeroLossCodes
infer_zero_loss_codes(const Vector& proj_i, const Vector& proj_j, const CodePair& h, Label s,
                      const LossParams& params, const HashModel* model) {
    const std::size_t distance = hamming_distance(h.i, h.j);
    if (similarity_loss(distance, s, params) <= 0.0) {
        throw ContractViolation("infer_zero_loss_codes called on a pair with zero similarity loss");
    }

    const bool dissimilar = s == Label::Dissimilar;
    const std::size_t p0 = dissimilar ? params.dissimilar_target() - distance : distance - params.alpha;
    const std::vector<std::size_t> candidates = candidate_bits(h, dissimilar);
    if (p0 > candidates.size()) {
        throw ContractViolation("infer_zero_loss_codes: p0 exceeds the candidate set");
    }

    std::vector<BitCost> costs = delta_scores(proj_i, proj_j, h, candidates);
    // (delta, bit) is a strict total order, so the selected set equals the first p0 of a stable sort.
    const auto cheaper = [](const BitCost& a, const BitCost& b) {
        return a.delta < b.delta || (a.delta == b.delta && a.bit < b.bit);
    };
    if (p0 < costs.size()) {
        std::nth_element(costs.begin(), costs.begin() + static_cast<std::ptrdiff_t>(p0), costs.end(), cheaper);
        costs.resize(p0);
    }
    std::sort(costs.begin(), costs.end(), [](const BitCost& a, const BitCost& b) { return a.bit < b.bit; });

    ZeroLossCodes out{h, {}};
    out.plan.p0 = p0;
    out.plan.flips.reserve(p0);
    for (const BitCost& c : costs) {
        if (c.side == Side::I) {
            out.g.i.flip(c.bit);
        } else {
            out.g.j.flip(c.bit);
        }
        out.plan.flips.push_back({c.bit, c.side});
        if (model != nullptr && model->column_is_zero(c.bit)) {
            out.plan.touches_zero_column = true;
        }
    }
    return out;
}

ZeroLossCodes
infer_zero_loss_codes(const HashModel& model, const Vector& xi, const Vector& xj, const CodePair& h, Label s,
                      const LossParams& params) {
    return infer_zero_loss_codes(project(model, xi), project(model, xj), h, s, params, &model);
}

}  // namespace olhash
