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
#include <span>
#include <vector>

#include "olhash/hash_code.hpp"
#include "olhash/pairs.hpp"
#include "olhash/snapshot.hpp"

namespace olhash {

/// Codes for n items under T models, stored item-major: item p owns codes [p*T, (p+1)*T).
struct CodeTable {
    std::size_t models = 1;
    std::size_t bits = 0;
    std::vector<HashCode> codes;

    std::size_t
    size() const noexcept {
        return models == 0 ? 0 : codes.size() / models;
    }

    std::span<const HashCode>
    item(std::size_t p) const {
        return std::span<const HashCode>(codes).subspan(p * models, models);
    }

    /// Throws DimensionMismatch if a code has the wrong length or the count is not a multiple of T.
    void
    validate() const;
};

CodeTable
encode_all(const ModelSnapshot& snapshot, const Dataset& data);

struct Ranked {
    std::uint32_t index = 0;
    std::uint32_t distance = 0;

    friend bool
    operator==(const Ranked&, const Ranked&) = default;
};

/// Orders items by ascending distance, ties by ascending index. Counting sort, O(n + max distance).
std::vector<Ranked>
rank_by_distance(std::span<const std::uint32_t> distances);

/// Full Hamming ranking of a single-model database.
std::vector<std::uint32_t>
linear_scan(const HashCode& query, std::span<const HashCode> database);

/// Full ranking by min-over-models Hamming distance (mm_distance).
std::vector<Ranked>
linear_scan(std::span<const HashCode> query_codes, const CodeTable& database);

/// First min(k, n) entries of the multi-model ranking.
std::vector<Ranked>
top_k(std::span<const HashCode> query_codes, const CodeTable& database, std::size_t k);

struct MapReport {
    double mean_ap = 0.0;
    /// One entry per query; NaN for excluded queries.
    std::vector<double> average_precision;
    /// Queries with an empty relevant set; they do not enter the mean.
    std::vector<std::size_t> excluded;
};

/// Mean over relevant items of the precision at their rank in the full ranking. Relevant items that
/// never appear contribute 0. Throws InvalidArgument on an empty relevant set.
double
average_precision(std::span<const std::uint32_t> ranking, std::span<const std::uint32_t> relevant);

/// Throws InvalidArgument if the counts differ or every query is excluded.
MapReport
mean_average_precision(std::span<const std::vector<std::uint32_t>> rankings, const GroundTruth& truth);

}  // namespace olhash
