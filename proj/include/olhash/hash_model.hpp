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

#include <Eigen/Dense>

#include "olhash/hash_code.hpp"

namespace olhash {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct RngSeed {
    std::uint64_t value = 0;
};

/// Linear hash model h(x) = sgn(W^T x) with W of shape d x r (column k is w_k).
/// Inputs are expected to be centered already; there is no per-bit threshold.
class HashModel {
 public:
    HashModel() = default;

    /// Throws InvalidArgument on an empty or non-finite matrix.
    explicit HashModel(Matrix weights);

    std::size_t
    dim() const noexcept {
        return static_cast<std::size_t>(weights_.rows());
    }

    std::size_t
    bits() const noexcept {
        return static_cast<std::size_t>(weights_.cols());
    }

    const Matrix&
    weights() const noexcept {
        return weights_;
    }

    /// w_k += coeff * x. The only mutation the learner performs.
    void
    add_to_column(std::size_t k, double coeff, const Vector& x);

    bool
    column_is_zero(std::size_t k) const;

 private:
    Matrix weights_;
};

/// W^1 with i.i.d. N(0,1) entries drawn from a 64-bit Mersenne twister seeded with `seed`.
HashModel
init_lsh(std::size_t dim, std::size_t bits, RngSeed seed);

/// W^T x.
Vector
project(const HashModel& model, const Vector& x);

/// Signs of a projection with sgn(0) = +1.
HashCode
encode_projection(const Vector& projection);

HashCode
encode(const HashModel& model, const Vector& x);

/// f^T W^T x. encode(model, x) maximizes this over all f.
double
structured_score(const HashModel& model, const Vector& x, const HashCode& f);

double
structured_score(const Vector& projection, const HashCode& f);

}  // namespace olhash
