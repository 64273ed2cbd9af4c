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

#include "olhash/bound_monitor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "olhash/error.hpp"

namespace olhash {

BoundMonitor::BoundMonitor(double margin, std::size_t models) : margin_(margin), models_(models) {
    if (!(margin_ > 0.0)) {
        throw InvalidArgument("bound monitor margin must be positive");
    }
    if (models_ == 0) {
        throw InvalidArgument("bound monitor needs at least one model");
    }
}

void
BoundMonitor::register_comparator(Matrix comparator, std::span<const HashModel> initial) {
    detail::check_dim(initial.size(), models_, "comparator initial models");
    Comparator c;
    for (const HashModel& w1 : initial) {
        detail::check_dim(static_cast<std::size_t>(comparator.rows()), w1.dim(), "comparator rows");
        detail::check_dim(static_cast<std::size_t>(comparator.cols()), w1.bits(), "comparator cols");
        c.distance_sq.push_back((comparator - w1.weights()).squaredNorm());
    }
    c.u = std::move(comparator);
    c.positive_loss.assign(models_, 0.0);
    c.weighted_loss.assign(models_, 0.0);
    comparator_ = std::move(c);
}

void
BoundMonitor::record(const UpdateReport& report, std::size_t model, double counted_loss, const CenteredPair* pair) {
    cumulative_ += counted_loss;
    if (report.similarity_loss <= 0.0 || report.update_norm_sq <= 0.0) {
        return;
    }
    max_norm_sq_ = std::max(max_norm_sq_, report.update_norm_sq);
    c_floor_ = std::max(c_floor_, std::sqrt(report.similarity_loss) / max_norm_sq_);
    if (comparator_ && pair != nullptr) {
        const Vector pi = comparator_->u.transpose() * pair->xi;
        const Vector pj = comparator_->u.transpose() * pair->xj;
        const double loss_u = pair_score(pi, pj, report.h) - pair_score(pi, pj, report.g) +
                              std::sqrt(report.similarity_loss);
        comparator_->positive_loss[model] += std::max(loss_u, 0.0);
        comparator_->weighted_loss[model] += report.tau * loss_u;
    }
}

void
BoundMonitor::monitor_step(const UpdateReport& report, const CenteredPair* pair) {
    detail::check_dim(models_, 1, "single-model monitor_step");
    ++steps_;
    record(report, 0, report.similarity_loss, pair);
}

void
BoundMonitor::monitor_step(const EnsembleReport& report, const CenteredPair* pair) {
    detail::check_dim(report.reports.size(), models_, "ensemble monitor_step");
    ++steps_;
    for (std::size_t m = 0; m < models_; ++m) {
        if (report.reports[m]) {
            record(*report.reports[m], m, report.r_star[m], pair);
        } else {
            cumulative_ += report.r_star[m];
        }
    }
}

double
BoundMonitor::comparator_distance_sq() const {
    if (!comparator_) {
        return 0.0;
    }
    return *std::max_element(comparator_->distance_sq.begin(), comparator_->distance_sq.end());
}

double
BoundMonitor::comparator_loss() const {
    if (!comparator_) {
        return 0.0;
    }
    return std::accumulate(comparator_->positive_loss.begin(), comparator_->positive_loss.end(), 0.0);
}

std::optional<double>
BoundMonitor::bound() const {
    if (!comparator_) {
        return std::nullopt;
    }
    double inner = 0.0;
    for (std::size_t m = 0; m < models_; ++m) {
        inner += comparator_->distance_sq[m] + 2.0 * margin_ * comparator_->positive_loss[m];
    }
    return max_norm_sq_ * inner;
}

std::optional<double>
BoundMonitor::slack() const {
    const auto b = bound();
    if (!b) {
        return std::nullopt;
    }
    return *b - cumulative_;
}

std::optional<double>
BoundMonitor::realizable_bound() const {
    if (!comparator_) {
        return std::nullopt;
    }
    return static_cast<double>(models_) * max_norm_sq_ * comparator_distance_sq();
}

std::optional<double>
BoundMonitor::weighted_bound() const {
    if (!comparator_) {
        return std::nullopt;
    }
    double inner = 0.0;
    for (std::size_t m = 0; m < models_; ++m) {
        inner += comparator_->distance_sq[m] + 2.0 * comparator_->weighted_loss[m];
    }
    return max_norm_sq_ * inner;
}

std::string
bound_csv_header() {
    return "step,cumulative_R,F2,slack,mAP";
}

std::string
bound_csv_row(const BoundMonitor& monitor, std::optional<double> mean_ap) {
    std::ostringstream out;
    out.precision(17);
    out << monitor.steps() << ',' << monitor.cumulative_loss() << ',' << monitor.max_update_norm_sq() << ',';
    if (const auto s = monitor.slack()) {
        out << *s;
    }
    out << ',';
    if (mean_ap) {
        out << *mean_ap;
    }
    return out.str();
}

}  // namespace olhash
