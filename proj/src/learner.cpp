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

#include "olhash/learner.hpp"

#include <algorithm>
#include <cmath>

#include "olhash/error.hpp"

namespace olhash {

HashLearner::HashLearner(HashModel model, LossParams params, double margin)
    : model_(std::move(model)), params_(params), margin_(margin) {
    params_.validate();
    if (!(margin_ > 0.0) || !std::isfinite(margin_)) {
        throw InvalidArgument("margin parameter C must be positive");
    }
    detail::check_dim(model_.bits(), params_.bits, "learner code length");
}

Assessment
HashLearner::assess(const Vector& xi, const Vector& xj, Label s) const {
    Assessment a;
    a.proj_i = project(model_, xi);
    a.proj_j = project(model_, xj);
    a.h = {encode_projection(a.proj_i), encode_projection(a.proj_j)};
    a.s = s;
    a.similarity_loss = similarity_loss(a.h, s, params_);
    return a;
}

double
update_norm_sq(const FlipPlan& plan, const Vector& xi, const Vector& xj) {
    const auto on_i = std::count_if(plan.flips.begin(), plan.flips.end(), [](const Flip& f) { return f.side == Side::I; });
    const auto on_j = static_cast<std::ptrdiff_t>(plan.flips.size()) - on_i;
    return 4.0 * (static_cast<double>(on_i) * xi.squaredNorm() + static_cast<double>(on_j) * xj.squaredNorm());
}

UpdateReport
HashLearner::apply(const Assessment& a, const Vector& xi, const Vector& xj) {
    UpdateReport report;
    report.similarity_loss = a.similarity_loss;
    report.h = a.h;
    report.g = a.h;
    if (a.similarity_loss <= 0.0) {
        return report;
    }

    ZeroLossCodes inferred = infer_zero_loss_codes(a.proj_i, a.proj_j, a.h, a.s, params_, &model_);
    report.g = std::move(inferred.g);
    report.flips = std::move(inferred.plan);

    // H - G only involves flipped bits, each contributing 2 h[k] w_k^T x on its side.
    double margin_gap = 0.0;
    for (const Flip& f : report.flips.flips) {
        const auto k = static_cast<Eigen::Index>(f.bit);
        margin_gap += f.side == Side::I ? 2.0 * a.h.i.sign(f.bit) * a.proj_i[k] : 2.0 * a.h.j.sign(f.bit) * a.proj_j[k];
    }
    report.prediction_loss = margin_gap + std::sqrt(a.similarity_loss);
    report.update_norm_sq = update_norm_sq(report.flips, xi, xj);

    if (report.update_norm_sq <= 0.0) {
        report.degenerate = true;
        return report;
    }

    report.tau = std::min(margin_, report.prediction_loss / report.update_norm_sq);
    for (const Flip& f : report.flips.flips) {
        if (f.side == Side::I) {
            model_.add_to_column(f.bit, -2.0 * a.h.i.sign(f.bit) * report.tau, xi);
        } else {
            model_.add_to_column(f.bit, -2.0 * a.h.j.sign(f.bit) * report.tau, xj);
        }
    }
    report.updated = true;
    return report;
}

}  // namespace olhash
