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
#include "olhash/kernel_map.hpp"
#include "olhash/pipeline.hpp"
#include "test_support.hpp"

using namespace olhash;
using namespace olhash::testing;
using Catch::Approx;

TEST_CASE("anchors are stored verbatim and in order", "[kernel]") {
    std::mt19937_64 rng(3);
    std::vector<Vector> samples = {random_vector(rng, 4), random_vector(rng, 4), random_vector(rng, 4)};
    samples.push_back(samples[1]);
    const KernelMapper km = fit_anchors(samples);
    REQUIRE(km.anchor_count() == 4);
    REQUIRE(km.input_dim() == 4);
    for (std::size_t p = 0; p < samples.size(); ++p) {
        REQUIRE(km.anchors().col(static_cast<Eigen::Index>(p)) == samples[p]);
    }
    REQUIRE(km.sigma() == 1.0);
    REQUIRE_THROWS_AS(fit_anchors(std::span<const Vector>{}), InvalidArgument);
}

TEST_CASE("map_one closed forms", "[kernel]") {
    Matrix anchors(2, 2);
    anchors << 0.0, 1.0, 0.0, 1.0;
    const KernelMapper km(anchors);
    Vector x(2);
    x << 1.0, 1.0;
    const Vector z = km.map_one(x);
    REQUIRE(z.size() == 2);
    REQUIRE(z[0] == Approx(std::exp(-1.0)).epsilon(1e-15));
    REQUIRE(z[0] == Approx(0.367879).margin(1e-6));
    REQUIRE(z[1] == 1.0);

    const KernelMapper wide(anchors, 2.0);
    REQUIRE(wide.map_one(x)[0] == Approx(std::exp(-0.25)).epsilon(1e-15));

    REQUIRE_THROWS_AS(km.map_one(Vector::Zero(3)), DimensionMismatch);
    REQUIRE_THROWS_AS(KernelMapper(anchors, 0.0), InvalidArgument);
    REQUIRE_THROWS_AS(KernelMapper(Matrix(2, 0)), InvalidArgument);
    Matrix bad = anchors;
    bad(0, 0) = std::nan("");
    REQUIRE_THROWS_AS(KernelMapper(bad), InvalidArgument);
}

TEST_CASE("map_one matches a scalar-loop oracle", "[kernel]") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix anchors = random_matrix(rng, 7, 10);
        const double sigma = 0.5 + static_cast<double>(trial % 4);
        const KernelMapper km(anchors, sigma);
        const Vector x = random_vector(rng, 7);
        const Vector z = km.map_one(x);
        for (int p = 0; p < 10; ++p) {
            double sq = 0.0;
            for (int c = 0; c < 7; ++c) {
                const double diff = x[c] - anchors(c, p);
                sq += diff * diff;
            }
            const double want = std::exp(-sq / (2.0 * sigma * sigma));
            REQUIRE(std::abs(z[p] - want) <= 1e-12);
        }
    }
}

TEST_CASE("mapped entries lie in (0,1] and shrink with distance", "[kernel][property]") {
    std::mt19937_64 rng(5);
    const Matrix anchors = random_matrix(rng, 3, 16);
    const KernelMapper km(anchors);
    for (int p = 0; p < 16; ++p) {
        REQUIRE(km.map_one(anchors.col(p))[p] == 1.0);
    }
    for (int trial = 0; trial < 200; ++trial) {
        const Vector x = random_vector(rng, 3, 2.0);
        const Vector z = km.map_one(x);
        REQUIRE((z.array() > 0.0).all());
        REQUIRE((z.array() <= 1.0).all());
        for (int a = 0; a < 16; ++a) {
            for (int b = 0; b < 16; ++b) {
                const double da = (x - anchors.col(a)).squaredNorm();
                const double db = (x - anchors.col(b)).squaredNorm();
                if (da < db) {
                    REQUIRE(z[a] >= z[b]);
                }
            }
        }
    }
}

TEST_CASE("kernel pipeline uses the warmup samples as anchors", "[kernel][pipeline]") {
    std::mt19937_64 rng(6);
    FeaturePipeline pipe(5, 256, true);
    std::vector<Vector> seen;
    for (int t = 0; t < 256; ++t) {
        seen.push_back(random_vector(rng, 5));
        REQUIRE(pipe.ingest_warmup(seen.back()) == (t == 255));
    }
    REQUIRE(pipe.feature_dim() == 256);
    REQUIRE(pipe.buffered() == 0);
    REQUIRE(pipe.kernel().has_value());
    for (std::size_t p = 0; p < seen.size(); ++p) {
        REQUIRE(pipe.kernel()->anchors().col(static_cast<Eigen::Index>(p)) == seen[p]);
    }
    // Mean over the warmup is taken in feature space.
    Vector mean = Vector::Zero(256);
    for (const Vector& s : seen) {
        mean += pipe.features(s);
    }
    mean /= 256.0;
    REQUIRE((pipe.mean() - mean).cwiseAbs().maxCoeff() < 1e-12);
    REQUIRE(pipe.apply(seen[0]).size() == 256);
}
