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

#include "catch_amalgamated.hpp"
#include "olhash/error.hpp"
#include "olhash/inference.hpp"
#include "olhash/loss.hpp"
#include "test_support.hpp"

using namespace olhash;
using namespace olhash::testing;
using Catch::Approx;

TEST_CASE("similarity_loss direct values", "[loss]") {
    const LossParams p{0, 0.5, 8};
    REQUIRE(similarity_loss(0, Label::Similar, p) == 0.0);
    REQUIRE(similarity_loss(3, Label::Similar, p) == 3.0);
    REQUIRE(similarity_loss(2, Label::Dissimilar, p) == 2.0);
    REQUIRE(similarity_loss(4, Label::Dissimilar, p) == 0.0);

    const LossParams frac{1, 0.3, 10};  // beta*r = 3 exactly despite 0.3*10 rounding
    REQUIRE(similarity_loss(3, Label::Dissimilar, frac) == 0.0);
    REQUIRE(frac.dissimilar_target() == 3);

    const LossParams odd{0, 0.45, 10};  // 4.5
    REQUIRE(similarity_loss(4, Label::Dissimilar, odd) == Approx(0.5));
    REQUIRE(odd.dissimilar_target() == 5);
}

TEST_CASE("similarity_loss is zero exactly on the satisfied region", "[loss][property]") {
    for (std::uint32_t r : {4u, 8u, 13u, 48u}) {
        for (std::uint32_t alpha = 0; alpha < r; ++alpha) {
            for (double beta : {0.2, 0.4, 0.5, 0.75, 1.0}) {
                const LossParams p{alpha, beta, r};
                if (!(beta * r > alpha)) {
                    REQUIRE_THROWS_AS(p.validate(), InvalidArgument);
                    continue;
                }
                REQUIRE_NOTHROW(p.validate());
                for (std::size_t d = 0; d <= r; ++d) {
                    REQUIRE((similarity_loss(d, Label::Similar, p) == 0.0) == (d <= alpha));
                    REQUIRE((similarity_loss(d, Label::Dissimilar, p) == 0.0) == (static_cast<double>(d) >= beta * r - 1e-9));
                    REQUIRE(similarity_loss(d, Label::Similar, p) >= 0.0);
                    REQUIRE(similarity_loss(d, Label::Dissimilar, p) >= 0.0);
                }
            }
        }
    }
}

TEST_CASE("LossParams validation", "[loss]") {
    REQUIRE_THROWS_AS((LossParams{5, 0.01, 64}.validate()), InvalidArgument);
    REQUIRE_THROWS_AS((LossParams{0, 0.0, 8}.validate()), InvalidArgument);
    REQUIRE_THROWS_AS((LossParams{0, 1.5, 8}.validate()), InvalidArgument);
    REQUIRE_THROWS_AS((LossParams{8, 1.0, 8}.validate()), InvalidArgument);
    REQUIRE_THROWS_AS((LossParams{0, 0.5, 0}.validate()), InvalidArgument);
    REQUIRE_NOTHROW((LossParams{0, 0.5, 48}.validate()));
    REQUIRE_THROWS_AS(label_from_int(0), InvalidArgument);
    REQUIRE(label_from_int(-1) == Label::Dissimilar);
}

TEST_CASE("pair_score matches explicit matrix products", "[loss]") {
    std::mt19937_64 rng(8);
    const HashModel model(random_matrix(rng, 5, 12));
    const Vector xi = random_vector(rng, 5);
    const Vector xj = random_vector(rng, 5);

    const CodePair own{encode(model, xi), encode(model, xj)};
    const Vector pi = model.weights().transpose() * xi;
    const Vector pj = model.weights().transpose() * xj;
    REQUIRE(pair_score(model, xi, xj, own) == Approx(pi.cwiseAbs().sum() + pj.cwiseAbs().sum()).epsilon(1e-12));
    const CodePair flipped{own.i.negated(), own.j.negated()};
    REQUIRE(pair_score(model, xi, xj, flipped) == Approx(-pair_score(model, xi, xj, own)).epsilon(1e-12));

    for (int trial = 0; trial < 20; ++trial) {
        const auto fi = random_signs(rng, 12);
        const auto fj = random_signs(rng, 12);
        // f_i^T W^T x_i as a full matrix product: (f^T W^T x) = x^T W f.
        Eigen::VectorXd vfi(12), vfj(12);
        for (int k = 0; k < 12; ++k) {
            vfi[k] = fi[static_cast<std::size_t>(k)];
            vfj[k] = fj[static_cast<std::size_t>(k)];
        }
        const double want = xi.dot(model.weights() * vfi) + xj.dot(model.weights() * vfj);
        REQUIRE(pair_score(model, xi, xj, {HashCode::from_signs(fi), HashCode::from_signs(fj)}) ==
                Approx(want).epsilon(1e-12));
    }
    REQUIRE_THROWS_AS(pair_score(model, Vector::Zero(4), xj, own), DimensionMismatch);
}

TEST_CASE("prediction_loss basics", "[loss]") {
    std::mt19937_64 rng(9);
    const HashModel model(random_matrix(rng, 4, 8));
    const Vector xi = random_vector(rng, 4);
    const Vector xj = random_vector(rng, 4);
    const CodePair h{encode(model, xi), encode(model, xj)};
    REQUIRE(prediction_loss(model, xi, xj, h, h, 0.0) == 0.0);
    REQUIRE(prediction_loss(model, xi, xj, h, h, 9.0) == Approx(3.0).epsilon(1e-12));
    REQUIRE_THROWS_AS(prediction_loss(model, xi, xj, h, h, -1.0), InvalidArgument);

    // Larger R strictly increases the loss for fixed codes.
    const CodePair g{h.i.negated(), h.j};
    double prev = prediction_loss(model, xi, xj, h, g, 0.0);
    for (double r : {1.0, 2.0, 5.0, 17.0}) {
        const double cur = prediction_loss(model, xi, xj, h, g, r);
        REQUIRE(cur > prev);
        REQUIRE(cur >= std::sqrt(r));
        prev = cur;
    }
}

TEST_CASE("prediction_loss equals the per-bit flip reformulation", "[loss][inference]") {
    std::mt19937_64 rng(10);
    const LossParams params{1, 0.5, 12};
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const HashModel model(random_matrix(rng, 5, 12));
        const Vector xi = random_vector(rng, 5);
        const Vector xj = random_vector(rng, 5);
        const CodePair h{encode(model, xi), encode(model, xj)};
        const Label s = trial % 2 ? Label::Similar : Label::Dissimilar;
        const double R = similarity_loss(h, s, params);
        if (R == 0.0) {
            continue;
        }
        const ZeroLossCodes z = infer_zero_loss_codes(model, xi, xj, h, s, params);
        double per_bit = std::sqrt(R);
        for (std::size_t k = 0; k < 12; ++k) {
            if (z.g.i.sign(k) != h.i.sign(k)) {
                per_bit += 2.0 * h.i.sign(k) * naive_dot_column(model.weights(), k, xi);
            }
            if (z.g.j.sign(k) != h.j.sign(k)) {
                per_bit += 2.0 * h.j.sign(k) * naive_dot_column(model.weights(), k, xj);
            }
        }
        const double ell = prediction_loss(model, xi, xj, h, z.g, R);
        REQUIRE(ell == Approx(per_bit).epsilon(1e-12));
        REQUIRE(ell >= std::sqrt(R) - 1e-12);
        ++checked;
    }
    REQUIRE(checked > 100);
}
