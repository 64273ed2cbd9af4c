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

#include "olhash/pairs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "olhash/error.hpp"

namespace olhash {

namespace {

constexpr std::size_t kMaxDrawsPerPair = 100000;

// Indices of the k nearest rows of `data` to x, ordered by (distance, index), skipping `skip`.
std::vector<std::uint32_t>
nearest(const Dataset& data, const Vector& x, std::size_t k, std::optional<std::size_t> skip) {
    std::vector<std::pair<double, std::uint32_t>> dist;
    dist.reserve(data.size());
    for (std::size_t p = 0; p < data.size(); ++p) {
        if (skip && *skip == p) {
            continue;
        }
        dist.emplace_back((data.rows[p] - x).squaredNorm(), static_cast<std::uint32_t>(p));
    }
    k = std::min(k, dist.size());
    std::nth_element(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
    std::vector<std::uint32_t> out;
    out.reserve(k);
    for (std::size_t p = 0; p < k; ++p) {
        out.push_back(dist[p].second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void
check_percentile(double percentile) {
    if (!(percentile > 0.0 && percentile <= 1.0)) {
        throw InvalidArgument("neighbor percentile must lie in (0, 1]");
    }
}

}  // namespace

LabelPolicy
LabelPolicy::parse(std::string_view kind, double percentile) {
    check_percentile(percentile);
    if (kind == "class") {
        return {Kind::Class, percentile};
    }
    if (kind == "metric") {
        return {Kind::Metric, percentile};
    }
    throw InvalidArgument("unknown label policy '" + std::string(kind) + "' (expected class or metric)");
}

std::size_t
neighbor_count(std::size_t population, double percentile) {
    check_percentile(percentile);
    const auto k = static_cast<std::size_t>(std::floor(percentile * static_cast<double>(population) + 1e-9));
    return std::max<std::size_t>(1, k);
}

PairLabeler::PairLabeler(const Dataset& data, LabelPolicy policy) : policy_(policy), size_(data.size()) {
    if (data.size() < 2) {
        throw InvalidArgument("pair labeling needs at least two items");
    }
    if (policy_.kind == LabelPolicy::Kind::Class) {
        if (!data.labels) {
            throw InvalidArgument("class label policy requires a labeled dataset");
        }
        classes_ = *data.labels;
        return;
    }
    const std::size_t k = std::min(neighbor_count(data.size(), policy_.percentile), data.size() - 1);
    neighbors_.reserve(data.size());
    for (std::size_t p = 0; p < data.size(); ++p) {
        neighbors_.push_back(nearest(data, data.rows[p], k, p));
    }
}

bool
PairLabeler::in_top(std::size_t of, std::size_t candidate) const {
    const auto& list = neighbors_[of];
    return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(candidate));
}

Label
PairLabeler::label(std::size_t i, std::size_t j) const {
    if (i == j || i >= size_ || j >= size_) {
        throw InvalidArgument("pair label needs two distinct in-range indices");
    }
    if (policy_.kind == LabelPolicy::Kind::Class) {
        return classes_[i] == classes_[j] ? Label::Similar : Label::Dissimilar;
    }
    return in_top(i, j) || in_top(j, i) ? Label::Similar : Label::Dissimilar;
}

Label
pair_label(const Dataset& data, std::size_t i, std::size_t j, const LabelPolicy& policy) {
    if (i == j || i >= data.size() || j >= data.size()) {
        throw InvalidArgument("pair label needs two distinct in-range indices");
    }
    if (policy.kind == LabelPolicy::Kind::Class) {
        if (!data.labels) {
            throw InvalidArgument("class label policy requires a labeled dataset");
        }
        return (*data.labels)[i] == (*data.labels)[j] ? Label::Similar : Label::Dissimilar;
    }
    const std::size_t k = std::min(neighbor_count(data.size(), policy.percentile), data.size() - 1);
    // Rank of b among a's neighbors under the (distance, index) order.
    const auto within = [&](std::size_t a, std::size_t b) {
        const double db = (data.rows[b] - data.rows[a]).squaredNorm();
        std::size_t ahead = 0;
        for (std::size_t p = 0; p < data.size(); ++p) {
            if (p == a || p == b) {
                continue;
            }
            const double dp = (data.rows[p] - data.rows[a]).squaredNorm();
            if (dp < db || (dp == db && p < b)) {
                ++ahead;
            }
        }
        return ahead < k;
    };
    return within(i, j) || within(j, i) ? Label::Similar : Label::Dissimilar;
}

std::vector<PairRef>
pair_stream(const PairLabeler& labeler, RngSeed seed, std::size_t n_pairs, std::optional<double> balance) {
    if (balance && !(*balance >= 0.0 && *balance <= 1.0)) {
        throw InvalidArgument("pair balance must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed.value);
    std::uniform_int_distribution<std::uint32_t> pick_first(0, static_cast<std::uint32_t>(labeler.size() - 1));
    std::uniform_int_distribution<std::uint32_t> pick_other(0, static_cast<std::uint32_t>(labeler.size() - 2));
    const auto draw = [&] {
        const std::uint32_t i = pick_first(rng);
        std::uint32_t j = pick_other(rng);
        if (j >= i) {
            ++j;
        }
        return PairRef{i, j, labeler.label(i, j)};
    };

    std::vector<PairRef> out;
    out.reserve(n_pairs);
    std::size_t similar = 0;
    for (std::size_t t = 0; t < n_pairs; ++t) {
        PairRef pair = draw();
        if (balance) {
            const Label want = static_cast<double>(similar) < *balance * static_cast<double>(t + 1)
                                   ? Label::Similar
                                   : Label::Dissimilar;
            std::size_t draws = 1;
            while (pair.s != want) {
                if (++draws > kMaxDrawsPerPair) {
                    throw InvalidArgument(std::string("pair_stream: could not find a ") +
                                          (want == Label::Similar ? "similar" : "dissimilar") +
                                          " pair; requested balance is unreachable");
                }
                pair = draw();
            }
        }
        if (pair.s == Label::Similar) {
            ++similar;
        }
        out.push_back(pair);
    }
    return out;
}

PairSample
materialize(const Dataset& data, const PairRef& ref) {
    return {data.rows.at(ref.i), data.rows.at(ref.j), ref.s};
}

GroundTruth
build_ground_truth(const Dataset& database, const Dataset& queries, const LabelPolicy& policy) {
    GroundTruth truth;
    truth.relevant.resize(queries.size());
    if (policy.kind == LabelPolicy::Kind::Class) {
        if (!database.labels || !queries.labels) {
            throw InvalidArgument("class label policy requires labeled database and queries");
        }
        for (std::size_t q = 0; q < queries.size(); ++q) {
            for (std::size_t p = 0; p < database.size(); ++p) {
                if ((*database.labels)[p] == (*queries.labels)[q]) {
                    truth.relevant[q].push_back(static_cast<std::uint32_t>(p));
                }
            }
        }
        return truth;
    }
    if (!database.rows.empty()) {
        detail::check_dim(queries.dim, database.dim, "ground truth query");
    }
    const std::size_t k = neighbor_count(database.size(), policy.percentile);
    for (std::size_t q = 0; q < queries.size(); ++q) {
        truth.relevant[q] = nearest(database, queries.rows[q], k, std::nullopt);
    }
    return truth;
}

}  // namespace olhash
