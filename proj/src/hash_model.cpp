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

#include "olhash/hash_model.hpp"

#include <random>
#include <string>

#include "olhash/error.hpp"

namespace olhash {

HashModel::HashModel(Matrix weights) : weights_(std::move(weights)) {
    if (weights_.rows() == 0 || weights_.cols() == 0) {
        throw InvalidArgument("hash model needs d >= 1 and r >= 1");
    }
    if (!weights_.allFinite()) {
        throw InvalidArgument("hash model weights must be finite");
    }
}

void
HashModel::add_to_column(std::size_t k, double coeff, const Vector& x) {
    detail::check_dim(static_cast<std::size_t>(x.size()), dim(), "add_to_column");
    weights_.col(static_cast<Eigen::Index>(k)).noalias() += coeff * x;
}

bool
HashModel::column_is_zero(std::size_t k) const {
    return weights_.col(static_cast<Eigen::Index>(k)).isZero(0.0);
}

HashModel
init_lsh(std::size_t dim, std::size_t bits, RngSeed seed) {
    if (dim == 0 || bits == 0) {
        throw InvalidArgument("init_lsh: d and r must be positive (got d=" + std::to_string(dim) +
                              ", r=" + std::to_string(bits) + ")");
    }
    std::mt19937_64 rng(seed.value);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix w(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(bits));
    // Column-major fill so a given (seed, d) yields the same leading columns for any r.
    for (Eigen::Index k = 0; k < w.cols(); ++k) {
        for (Eigen::Index i = 0; i < w.rows(); ++i) {
            w(i, k) = normal(rng);
        }
    }
    return HashModel(std::move(w));
}

Vector
project(const HashModel& model, const Vector& x) {
    detail::check_dim(static_cast<std::size_t>(x.size()), model.dim(), "project");
    return model.weights().transpose() * x;
}

HashCode
encode_projection(const Vector& projection) {
    HashCode code(static_cast<std::size_t>(projection.size()));
    for (Eigen::Index k = 0; k < projection.size(); ++k) {
        if (projection[k] >= 0.0) {
            code.set_sign(static_cast<std::size_t>(k), 1);
        }
    }
    return code;
}

HashCode
encode(const HashModel& model, const Vector& x) {
    return encode_projection(project(model, x));
}

double
structured_score(const Vector& projection, const HashCode& f) {
    detail::check_dim(f.size(), static_cast<std::size_t>(projection.size()), "structured_score");
    double score = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        score += f.sign(k) * projection[static_cast<Eigen::Index>(k)];
    }
    return score;
}

double
structured_score(const HashModel& model, const Vector& x, const HashCode& f) {
    return structured_score(project(model, x), f);
}

}  // namespace olhash
