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
#include <string_view>
#include <vector>

#include "olhash/dataset.hpp"
#include "olhash/loss.hpp"

namespace olhash {

/// How pair labels and retrieval ground truth are derived.
///  - Class: similar iff the two items share a class label.
///  - Metric: similar iff either item is among the other's `percentile` nearest neighbors (Euclidean).
struct LabelPolicy {
    enum class Kind { Class, Metric };
    Kind kind = Kind::Class;
    double percentile = 0.05;

    static LabelPolicy
    parse(std::string_view kind, double percentile = 0.05);
};

/// Size of a top-`percentile` neighbor list over `population` items: floor(percentile * population),
/// at least 1.
std::size_t
neighbor_count(std::size_t population, double percentile);

/// Precomputed labeler. Under the metric policy every item's neighbor list is built up front
/// (O(n^2 d) once); distance ties rank the lower index first.
class PairLabeler {
 public:
    /// Throws InvalidArgument on class policy without labels or an empty dataset.
    PairLabeler(const Dataset& data, LabelPolicy policy);

    Label
    label(std::size_t i, std::size_t j) const;

    const LabelPolicy&
    policy() const noexcept {
        return policy_;
    }

    std::size_t
    size() const noexcept {
        return size_;
    }

 private:
    bool
    in_top(std::size_t of, std::size_t candidate) const;

    LabelPolicy policy_;
    std::size_t size_;
    std::vector<std::uint32_t> classes_;
    std::vector<std::vector<std::uint32_t>> neighbors_;  // sorted ascending by index
};

/// One-off label without precomputation; O(n d) under the metric policy.
Label
pair_label(const Dataset& data, std::size_t i, std::size_t j, const LabelPolicy& policy);

struct PairRef {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    Label s = Label::Similar;

    friend bool
    operator==(const PairRef&, const PairRef&) = default;
};

/// Uniformly random pairs (i != j), deterministic in `seed`. With `balance`, each pair is
/// rejection-sampled to the kind that keeps the running similar fraction at `balance`
/// (similar iff similar_so_far < balance * (t + 1)). Throws InvalidArgument when a required kind
/// is not found within a bounded number of draws.
std::vector<PairRef>
pair_stream(const PairLabeler& labeler, RngSeed seed, std::size_t n_pairs, std::optional<double> balance = {});

PairSample
materialize(const Dataset& data, const PairRef& ref);

/// Per-query relevant database indices (ascending).
struct GroundTruth {
    std::vector<std::vector<std::uint32_t>> relevant;
};

/// Class policy: database items with the query's class. Metric policy: the query's
/// neighbor_count(database.size(), percentile) nearest database items.
GroundTruth
build_ground_truth(const Dataset& database, const Dataset& queries, const LabelPolicy& policy);

}  // namespace olhash
