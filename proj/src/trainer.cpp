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

#include "olhash/trainer.hpp"

#include <cmath>

#include "olhash/error.hpp"

namespace olhash {

void
TrainerConfig::validate() const {
    loss().validate();
    if (!(margin > 0.0) || !std::isfinite(margin)) {
        throw InvalidArgument("margin parameter C must be positive");
    }
    if (warmup == 0) {
        throw InvalidArgument("warmup must be at least 1");
    }
    if (!(sigma > 0.0)) {
        throw InvalidArgument("kernel bandwidth must be positive");
    }
}

Trainer::Trainer(TrainerConfig config, std::size_t input_dim)
    : config_(config), pipeline_(input_dim, config.warmup, config.use_kernel, config.sigma) {
    config_.validate();
}

bool
Trainer::ingest_warmup(const Vector& x) {
    if (pipeline_.ingest_warmup(x)) {
        learner_.emplace(init_lsh(pipeline_.feature_dim(), config_.bits, config_.seed), config_.loss(),
                         config_.margin);
        const auto dim = static_cast<Eigen::Index>(pipeline_.feature_dim());
        last_ = {Vector::Zero(dim), Vector::Zero(dim)};
    }
    return ready();
}

UpdateReport
Trainer::step(const PairSample& pair) {
    if (!learner_) {
        throw ContractViolation("Trainer::step called before warmup completed");
    }
    if (!pair.xi.allFinite() || !pair.xj.allFinite()) {
        throw InvalidArgument("Trainer::step: non-finite pair");
    }
    last_.xi = pipeline_.center(pair.xi);
    last_.xj = pipeline_.center(pair.xj);
    ++steps_;
    return learner_->step(last_.xi, last_.xj, pair.s);
}

const HashModel&
Trainer::model() const {
    if (!learner_) {
        throw ContractViolation("Trainer::model called before warmup completed");
    }
    return learner_->model();
}

ModelSnapshot
Trainer::snapshot() const {
    ModelSnapshot snap;
    snap.input_dim = pipeline_.input_dim();
    snap.kernel = pipeline_.kernel();
    snap.mean = pipeline_.mean();
    snap.models.push_back(model());
    return snap;
}

std::size_t
Trainer::footprint_bytes() const noexcept {
    std::size_t bytes = pipeline_.footprint_bytes();
    bytes += static_cast<std::size_t>(last_.xi.size() + last_.xj.size()) * sizeof(double);
    if (learner_) {
        bytes += static_cast<std::size_t>(learner_->model().weights().size()) * sizeof(double);
    }
    return bytes;
}

}  // namespace olhash
