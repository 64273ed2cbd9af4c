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

#include "olhash/ensemble.hpp"

#include <limits>

#include "olhash/error.hpp"

namespace olhash {

Ensemble::Ensemble(TrainerConfig config, std::size_t models, std::size_t input_dim)
    : config_(config), model_count_(models), pipeline_(input_dim, config.warmup, config.use_kernel, config.sigma) {
    config_.validate();
    if (model_count_ == 0) {
        throw InvalidArgument("ensemble needs at least one model");
    }
}

bool
Ensemble::ingest_warmup(const Vector& x) {
    if (pipeline_.ingest_warmup(x)) {
        learners_.reserve(model_count_);
        for (std::size_t m = 0; m < model_count_; ++m) {
            learners_.emplace_back(init_lsh(pipeline_.feature_dim(), config_.bits, model_seed(config_.seed, m)),
                                   config_.loss(), config_.margin);
        }
        const auto dim = static_cast<Eigen::Index>(pipeline_.feature_dim());
        last_ = {Vector::Zero(dim), Vector::Zero(dim)};
    }
    return ready();
}

EnsembleReport
Ensemble::mm_step(const PairSample& pair) {
    if (!ready()) {
        throw ContractViolation("Ensemble::mm_step called before warmup completed");
    }
    if (!pair.xi.allFinite() || !pair.xj.allFinite()) {
        throw InvalidArgument("Ensemble::mm_step: non-finite pair");
    }
    last_.xi = pipeline_.center(pair.xi);
    last_.xj = pipeline_.center(pair.xj);

    std::vector<Assessment> assessments;
    assessments.reserve(model_count_);
    EnsembleReport report;
    report.losses.reserve(model_count_);
    for (const HashLearner& learner : learners_) {
        assessments.push_back(learner.assess(last_.xi, last_.xj, pair.s));
        report.losses.push_back(assessments.back().similarity_loss);
    }
    report.reports.resize(model_count_);
    report.r_star.assign(model_count_, 0.0);

    if (pair.s == Label::Similar) {
        std::size_t best = 0;
        for (std::size_t m = 1; m < model_count_; ++m) {
            if (report.losses[m] < report.losses[best]) {
                best = m;
            }
        }
        report.selected = best;
        report.reports[best] = learners_[best].apply(assessments[best], last_.xi, last_.xj);
        report.r_star[best] = report.losses[best];
    } else {
        for (std::size_t m = 0; m < model_count_; ++m) {
            if (report.losses[m] > 0.0) {
                report.reports[m] = learners_[m].apply(assessments[m], last_.xi, last_.xj);
            }
            report.r_star[m] = report.losses[m];
        }
    }
    return report;
}

void
Ensemble::restore_models(std::vector<HashModel> models) {
    if (!ready()) {
        throw ContractViolation("Ensemble::restore_models called before warmup completed");
    }
    detail::check_dim(models.size(), model_count_, "restore_models: model count");
    for (const HashModel& m : models) {
        detail::check_dim(m.dim(), pipeline_.feature_dim(), "restore_models: feature dimension");
        detail::check_dim(m.bits(), config_.bits, "restore_models: bits");
    }
    for (std::size_t m = 0; m < model_count_; ++m) {
        learners_[m] = HashLearner(std::move(models[m]), config_.loss(), config_.margin);
    }
}

const HashModel&
Ensemble::model(std::size_t m) const {
    if (!ready()) {
        throw ContractViolation("Ensemble::model called before warmup completed");
    }
    return learners_.at(m).model();
}

ModelSnapshot
Ensemble::snapshot() const {
    ModelSnapshot snap;
    snap.input_dim = pipeline_.input_dim();
    snap.kernel = pipeline_.kernel();
    snap.mean = pipeline_.mean();
    for (std::size_t m = 0; m < model_count_; ++m) {
        snap.models.push_back(model(m));
    }
    return snap;
}

std::size_t
mm_distance(std::span<const HashCode> item_codes, std::span<const HashCode> query_codes) {
    if (item_codes.size() != query_codes.size() || item_codes.empty()) {
        throw DimensionMismatch("mm_distance: model counts differ or are zero");
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t m = 0; m < item_codes.size(); ++m) {
        best = std::min(best, hamming_distance(item_codes[m], query_codes[m]));
    }
    return best;
}

}  // namespace olhash
