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
#include <string>
#include <vector>

#include "olhash/ensemble.hpp"
#include "olhash/learner.hpp"
#include "olhash/trainer.hpp"

namespace olhash {

/// Runtime check of the cumulative-loss bound of passive-aggressive online hashing.
///
/// Tracks the cumulative similarity loss, F^2 (running max of ||X (g - h)^T||_F^2) and the running
/// max of sqrt(R) / F^2, the smallest C under which the bound applies. With a comparator U
/// registered it also accumulates l_U = H(U) - G(U) + sqrt(R) on every update round and reports
///
///   bound = F^2 * sum_m (||U - W^1_m||_F^2 + 2 C sum_t max(l_U, 0))
///
/// which must dominate the cumulative loss whenever C >= c_floor(). For an ensemble the cumulative
/// loss is the sum of R*_m over models.
class BoundMonitor {
 public:
    explicit BoundMonitor(double margin, std::size_t models = 1);

    /// `initial` holds W^1 for each model and must match the model count and U's shape.
    void
    register_comparator(Matrix comparator, std::span<const HashModel> initial);

    /// One single-model round; `pair` holds the centered vectors, needed only with a comparator.
    void
    monitor_step(const UpdateReport& report, const CenteredPair* pair = nullptr);

    void
    monitor_step(const EnsembleReport& report, const CenteredPair* pair = nullptr);

    std::uint64_t
    steps() const noexcept {
        return steps_;
    }

    double
    cumulative_loss() const noexcept {
        return cumulative_;
    }

    /// F^2.
    double
    max_update_norm_sq() const noexcept {
        return max_norm_sq_;
    }

    double
    c_floor() const noexcept {
        return c_floor_;
    }

    bool
    margin_sufficient() const noexcept {
        return margin_ >= c_floor_;
    }

    bool
    has_comparator() const noexcept {
        return comparator_.has_value();
    }

    /// max_m ||U - W^1_m||_F^2.
    double
    comparator_distance_sq() const;

    std::optional<double>
    bound() const;

    /// bound() - cumulative_loss().
    std::optional<double>
    slack() const;

    /// T F^2 max_m ||U - W^1_m||_F^2: the bound when the comparator never incurs prediction loss.
    std::optional<double>
    realizable_bound() const;

    /// F^2 sum_m (||U - W^1_m||^2 + 2 sum_t tau l_U): the sharper intermediate form, valid for
    /// either sign of l_U.
    std::optional<double>
    weighted_bound() const;

    /// sum over models and rounds of max(l_U, 0).
    double
    comparator_loss() const;

 private:
    void
    record(const UpdateReport& report, std::size_t model, double counted_loss, const CenteredPair* pair);

    double margin_;
    std::size_t models_;
    std::uint64_t steps_ = 0;
    double cumulative_ = 0.0;
    double max_norm_sq_ = 0.0;
    double c_floor_ = 0.0;

    struct Comparator {
        Matrix u;
        std::vector<double> distance_sq;
        std::vector<double> positive_loss;
        std::vector<double> weighted_loss;
    };
    std::optional<Comparator> comparator_;
};

/// "step,cumulative_R,F2,slack,mAP" with empty fields for absent values.
std::string
bound_csv_header();

std::string
bound_csv_row(const BoundMonitor& monitor, std::optional<double> mean_ap = {});

}  // namespace olhash
