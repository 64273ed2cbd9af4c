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

// Shared helpers for tests: seeded random vectors and naive reference computations that do not go
// through the library's code paths.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "olhash/hash_code.hpp"
#include "olhash/hash_model.hpp"

namespace olhash::testing {

inline Vector
random_vector(std::mt19937_64& rng, std::size_t dim, double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, scale);
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v[i] = normal(rng);
    }
    return v;
}

inline Matrix
random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            m(i, j) = normal(rng);
        }
    }
    return m;
}

inline std::vector<int>
random_signs(std::mt19937_64& rng, std::size_t bits) {
    std::bernoulli_distribution coin(0.5);
    std::vector<int> s(bits);
    for (auto& v : s) {
        v = coin(rng) ? 1 : -1;
    }
    return s;
}

inline HashCode
random_code(std::mt19937_64& rng, std::size_t bits) {
    const auto s = random_signs(rng, bits);
    return HashCode::from_signs(s);
}

// Scalar-loop w_k^T x, no Eigen products.
inline double
naive_dot_column(const Matrix& w, std::size_t k, const Vector& x) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
        sum += w(i, static_cast<Eigen::Index>(k)) * x[i];
    }
    return sum;
}

inline std::size_t
naive_hamming(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t d = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        d += a[k] != b[k] ? 1 : 0;
    }
    return d;
}

// sum_k f[k] * (w_k^T x) with scalar loops.
inline double
naive_score(const Matrix& w, const Vector& x, const std::vector<int>& f) {
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        s += f[k] * naive_dot_column(w, k, x);
    }
    return s;
}

inline std::vector<int>
bits_to_signs(std::uint64_t mask, std::size_t bits) {
    std::vector<int> s(bits);
    for (std::size_t k = 0; k < bits; ++k) {
        s[k] = (mask >> k) & 1u ? 1 : -1;
    }
    return s;
}

}  // namespace olhash::testing
