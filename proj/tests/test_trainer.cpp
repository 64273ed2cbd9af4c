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

#include <cmath>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "olhash/error.hpp"
#include "olhash/learner.hpp"
#include "olhash/trainer.hpp"
#include "test_support.hpp"

using namespace olhash;
using namespace olhash::testing;
using Catch::Approx;

namespace {

Vector
vec(std::initializer_list<double> v) {
    Vector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) {
        out[i++] = x;
    }
    return out;
}

// ||X (g - h)^T||_F^2 built as the explicit d x r matrix.
double
frobenius_oracle(const Vector& xi, const Vector& xj, const CodePair& h, const CodePair& g) {
    const auto r = static_cast<Eigen::Index>(h.i.size());
    Matrix m = Matrix::Zero(xi.size(), r);
    for (Eigen::Index k = 0; k < r; ++k) {
        const auto b = static_cast<std::size_t>(k);
        m.col(k) = xi * (g.i.sign(b) - h.i.sign(b)) + xj * (g.j.sign(b) - h.j.sign(b));
    }
    return m.squaredNorm();
}

Matrix
update_direction(const Vector& xi, const Vector& xj, const CodePair& h, const CodePair& g) {
    const auto r = static_cast<Eigen::Index>(h.i.size());
    Matrix m(xi.size(), r);
    for (Eigen::Index k = 0; k < r; ++k) {
        const auto b = static_cast<std::size_t>(k);
        m.col(k) = xi * (g.i.sign(b) - h.i.sign(b)) + xj * (g.j.sign(b) - h.j.sign(b));
    }
    return m;
}

struct Synthetic {
    HashLearner learner;
    Vector xi;
    Vector xj;
    Label s;
};

// Draws learner/pair combinations with positive similarity loss.
Synthetic
lossy_instance(std::mt19937_64& rng, std::size_t d, std::uint32_t r, double margin, double x_scale) {
    const LossParams params{0, 0.5, r};
    for (;;) {
        HashLearner learner(HashModel(random_matrix(rng, d, r)), params, margin);
        const Vector xi = random_vector(rng, d, x_scale);
        const Vector xj = random_vector(rng, d, x_scale);
        const Label s = rng() % 2 ? Label::Similar : Label::Dissimilar;
        if (learner.assess(xi, xj, s).similarity_loss > 0.0) {
            return {std::move(learner), xi, xj, s};
        }
    }
}

}  // namespace

TEST_CASE("warmup mean and readiness", "[trainer]") {
    TrainerConfig cfg;
    cfg.warmup = 2;
    cfg.bits = 8;
    Trainer t(cfg, 2);
    REQUIRE_FALSE(t.ingest_warmup(vec({2, 0})));
    REQUIRE_FALSE(t.ready());
    REQUIRE_THROWS_AS(t.step({vec({1, 1}), vec({1, 1}), Label::Similar}), ContractViolation);
    REQUIRE(t.ingest_warmup(vec({0, 2})));
    REQUIRE(t.pipeline().mean() == vec({1, 1}));
    REQUIRE(t.pipeline().buffered() == 0);
    REQUIRE(t.model().dim() == 2);
    REQUIRE(t.model().bits() == 8);
    REQUIRE_THROWS_AS(t.ingest_warmup(vec({0, 0})), ContractViolation);
}

TEST_CASE("single-sample warmup centers that sample to zero", "[trainer]") {
    FeaturePipeline pipe(3, 1, false);
    const Vector x = vec({0.5, -2, 7});
    REQUIRE(pipe.ingest_warmup(x));
    REQUIRE(pipe.mean() == x);
    REQUIRE(pipe.apply(x) == Vector::Zero(3));
}

TEST_CASE("center subtracts the previous mean then folds", "[trainer]") {
    FeaturePipeline pipe(2, 2, false);
    pipe.ingest_warmup(vec({2, 0}));
    pipe.ingest_warmup(vec({0, 2}));
    REQUIRE(pipe.center(vec({1, 1})) == vec({0, 0}));
    REQUIRE(pipe.mean() == vec({1, 1}));
    REQUIRE(pipe.count() == 3);

    FeaturePipeline one(2, 1, false);
    one.ingest_warmup(vec({0, 0}));
    REQUIRE(one.center(vec({2, 2})) == vec({2, 2}));
    REQUIRE(one.mean() == vec({1, 1}));
    REQUIRE_THROWS_AS(one.center(vec({1, 1, 1})), DimensionMismatch);
    REQUIRE_THROWS_AS(FeaturePipeline(2, 1, false).center(vec({1, 1})), ContractViolation);
}

TEST_CASE("running mean matches the batch mean", "[trainer][property]") {
    std::mt19937_64 rng(12);
    FeaturePipeline pipe(6, 10, false);
    std::vector<Vector> all;
    for (int t = 0; t < 1000; ++t) {
        all.push_back(random_vector(rng, 6, 3.0) + Vector::Constant(6, 5.0));
        if (t < 10) {
            pipe.ingest_warmup(all.back());
        } else {
            pipe.center(all.back());
        }
    }
    Vector batch = Vector::Zero(6);
    for (const Vector& v : all) {
        batch += v;
    }
    batch /= static_cast<double>(all.size());
    for (Eigen::Index c = 0; c < 6; ++c) {
        REQUIRE(std::abs(pipe.mean()[c] - batch[c]) <= 1e-9 * std::abs(batch[c]));
    }
}

TEST_CASE("zero-loss rounds are passive", "[trainer]") {
    std::mt19937_64 rng(13);
    const LossParams params{0, 0.5, 16};
    HashLearner learner(HashModel(random_matrix(rng, 4, 16)), params, 0.1);
    const Vector x = random_vector(rng, 4);
    const Matrix before = learner.model().weights();
    const UpdateReport rep = learner.step(x, x, Label::Similar);
    REQUIRE(rep.similarity_loss == 0.0);
    REQUIRE_FALSE(rep.updated);
    REQUIRE(rep.tau == 0.0);
    REQUIRE(rep.flips.flips.empty());
    REQUIRE(learner.model().weights() == before);
}

TEST_CASE("closed-form update norm equals the explicit Frobenius norm", "[trainer]") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        Synthetic syn = lossy_instance(rng, 5, 12, 0.1, 1.0);
        const UpdateReport rep = syn.learner.step(syn.xi, syn.xj, syn.s);
        REQUIRE(rep.update_norm_sq == Approx(frobenius_oracle(syn.xi, syn.xj, rep.h, rep.g)).epsilon(1e-12));
    }
}

TEST_CASE("aggressive rounds satisfy the KKT identities", "[trainer][property]") {
    std::mt19937_64 rng(15);
    int below = 0;
    int capped = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const double scale = trial % 2 ? 1.0 : 0.05;
        Synthetic syn = lossy_instance(rng, 6, 16, 0.1, scale);
        const Matrix before = syn.learner.model().weights();
        const UpdateReport rep = syn.learner.step(syn.xi, syn.xj, syn.s);
        REQUIRE(rep.updated);
        REQUIRE(rep.tau >= 0.0);
        REQUIRE(rep.tau <= 0.1);
        const double after = prediction_loss(syn.learner.model(), syn.xi, syn.xj, rep.h, rep.g, rep.similarity_loss);
        const Matrix diff = syn.learner.model().weights() - before;
        const Matrix dir = update_direction(syn.xi, syn.xj, rep.h, rep.g);
        // Columns outside the flip plan are untouched.
        for (std::size_t k = 0; k < 16; ++k) {
            const bool flipped = rep.g.i.sign(k) != rep.h.i.sign(k) || rep.g.j.sign(k) != rep.h.j.sign(k);
            if (!flipped) {
                REQUIRE(syn.learner.model().weights().col(static_cast<Eigen::Index>(k)) ==
                        before.col(static_cast<Eigen::Index>(k)));
            }
        }
        REQUIRE((diff - rep.tau * dir).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + before.cwiseAbs().maxCoeff()));
        if (rep.tau < 0.1) {
            REQUIRE(std::abs(after) <= 1e-9);
            ++below;
        } else {
            REQUIRE(rep.tau == 0.1);
            REQUIRE(std::abs(after - (rep.prediction_loss - 0.1 * rep.update_norm_sq)) <= 1e-9);
            REQUIRE(diff.norm() == Approx(0.1 * std::sqrt(rep.update_norm_sq)).epsilon(1e-9));
            ++capped;
        }
    }
    REQUIRE(below > 100);
    REQUIRE(capped > 100);
}

TEST_CASE("closed form agrees with a numerical minimizer on a 2x4 instance", "[trainer]") {
    std::mt19937_64 rng(16);
    for (const double scale : {1.0, 0.1}) {
        Synthetic syn = lossy_instance(rng, 2, 4, 0.1, scale);
        const Matrix w0 = syn.learner.model().weights();
        const UpdateReport rep = syn.learner.step(syn.xi, syn.xj, syn.s);
        const Matrix dir = update_direction(syn.xi, syn.xj, rep.h, rep.g);
        const double ell0 = rep.prediction_loss;
        const double c = 0.1;
        // Objective of the PA problem with the slack eliminated: 1/2 ||W - W0||^2 + C max(0, l(W)).
        // l(W) is affine: l(W0) - <dir, W - W0>.
        auto objective = [&](const Matrix& w) {
            const Matrix delta = w - w0;
            const double loss = ell0 - (dir.array() * delta.array()).sum();
            return 0.5 * delta.squaredNorm() + c * std::max(0.0, loss);
        };
        // Projected subgradient descent with diminishing steps, keeping the best iterate.
        Matrix w = w0;
        Matrix best = w;
        double best_val = objective(w);
        for (int it = 1; it <= 400000; ++it) {
            const Matrix delta = w - w0;
            const double loss = ell0 - (dir.array() * delta.array()).sum();
            Matrix grad = delta;
            if (loss > 0.0) {
                grad -= c * dir;
            }
            w -= grad * (0.5 / std::sqrt(static_cast<double>(it)));
            const double val = objective(w);
            if (val < best_val) {
                best_val = val;
                best = w;
            }
        }
        REQUIRE(objective(syn.learner.model().weights()) <= best_val + 1e-9);
        REQUIRE((best - syn.learner.model().weights()).cwiseAbs().maxCoeff() < 2e-2);
    }
}

TEST_CASE("zero vectors on the flipped side give a degenerate round", "[trainer]") {
    const LossParams params{0, 0.5, 4};
    Matrix w(2, 4);
    w << 1, 1, 1, 1, 1, 1, 1, 1;
    HashLearner learner{HashModel(w), params, 0.1};
    const Vector zero = Vector::Zero(2);
    const UpdateReport rep = learner.step(zero, zero, Label::Dissimilar);
    REQUIRE(rep.similarity_loss == 2.0);
    REQUIRE(rep.degenerate);
    REQUIRE_FALSE(rep.updated);
    REQUIRE(rep.tau == 0.0);
    REQUIRE(learner.model().weights() == w);
}

TEST_CASE("trainer state size does not grow with steps", "[trainer]") {
    std::mt19937_64 rng(17);
    TrainerConfig cfg;
    cfg.bits = 32;
    cfg.warmup = 8;
    Trainer t(cfg, 16);
    for (int i = 0; i < 8; ++i) {
        t.ingest_warmup(random_vector(rng, 16));
    }
    t.step({random_vector(rng, 16), random_vector(rng, 16), Label::Dissimilar});
    const std::size_t bytes = t.footprint_bytes();
    for (int i = 0; i < 5000; ++i) {
        t.step({random_vector(rng, 16), random_vector(rng, 16), i % 2 ? Label::Similar : Label::Dissimilar});
    }
    REQUIRE(t.footprint_bytes() == bytes);
    REQUIRE(t.steps() == 5001);
}

TEST_CASE("trainer centers each side before its own update of the mean", "[trainer]") {
    TrainerConfig cfg;
    cfg.bits = 8;
    cfg.warmup = 1;
    Trainer t(cfg, 2);
    t.ingest_warmup(vec({0, 0}));
    t.step({vec({1, 0}), vec({0.5, 1}), Label::Similar});
    REQUIRE(t.last_pair().xi == vec({1, 0}));
    REQUIRE(t.last_pair().xj == vec({0, 1}));
    REQUIRE(t.pipeline().count() == 3);
}

TEST_CASE("config validation and defaults", "[trainer]") {
    const TrainerConfig def;
    REQUIRE(def.alpha == 0);
    REQUIRE(def.beta == 0.5);
    REQUIRE(def.bits == 48);
    REQUIRE(def.margin == 0.1);
    REQUIRE(kLargeMargin == 1.0);
    TrainerConfig bad = def;
    bad.margin = 0.0;
    REQUIRE_THROWS_AS(bad.validate(), InvalidArgument);
    bad = def;
    bad.warmup = 0;
    REQUIRE_THROWS_AS(bad.validate(), InvalidArgument);
    bad = def;
    bad.beta = 0.0;
    REQUIRE_THROWS_AS(bad.validate(), InvalidArgument);
}
