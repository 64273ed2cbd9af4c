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

#include "olhash/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "olhash/ensemble.hpp"
#include "olhash/error.hpp"

namespace olhash {

void
CodeTable::validate() const {
    if (models == 0) {
        throw DimensionMismatch("code table needs at least one model");
    }
    if (codes.size() % models != 0) {
        throw DimensionMismatch("code table size is not a multiple of the model count");
    }
    for (const HashCode& c : codes) {
        detail::check_dim(c.size(), bits, "code table entry");
    }
}

CodeTable
encode_all(const ModelSnapshot& snapshot, const Dataset& data) {
    CodeTable table;
    table.models = snapshot.models.size();
    table.bits = snapshot.bits();
    table.codes.reserve(data.size() * table.models);
    for (const Vector& row : data.rows) {
        for (HashCode& c : snapshot.encode(row)) {
            table.codes.push_back(std::move(c));
        }
    }
    return table;
}

std::vector<Ranked>
rank_by_distance(std::span<const std::uint32_t> distances) {
    if (distances.empty()) {
        return {};
    }
    const std::uint32_t max_d = *std::max_element(distances.begin(), distances.end());
    std::vector<std::size_t> start(static_cast<std::size_t>(max_d) + 2, 0);
    for (const std::uint32_t d : distances) {
        ++start[d + 1];
    }
    for (std::size_t b = 1; b < start.size(); ++b) {
        start[b] += start[b - 1];
    }
    std::vector<Ranked> out(distances.size());
    for (std::size_t p = 0; p < distances.size(); ++p) {
        out[start[distances[p]]++] = {static_cast<std::uint32_t>(p), distances[p]};
    }
    return out;
}

std::vector<std::uint32_t>
linear_scan(const HashCode& query, std::span<const HashCode> database) {
    std::vector<std::uint32_t> distances(database.size());
    for (std::size_t p = 0; p < database.size(); ++p) {
        distances[p] = static_cast<std::uint32_t>(hamming_distance(query, database[p]));
    }
    std::vector<std::uint32_t> order;
    order.reserve(database.size());
    for (const Ranked& r : rank_by_distance(distances)) {
        order.push_back(r.index);
    }
    return order;
}

std::vector<Ranked>
linear_scan(std::span<const HashCode> query_codes, const CodeTable& database) {
    detail::check_dim(query_codes.size(), database.models, "linear_scan model count");
    std::vector<std::uint32_t> distances(database.size());
    for (std::size_t p = 0; p < database.size(); ++p) {
        distances[p] = static_cast<std::uint32_t>(mm_distance(database.item(p), query_codes));
    }
    return rank_by_distance(distances);
}

std::vector<Ranked>
top_k(std::span<const HashCode> query_codes, const CodeTable& database, std::size_t k) {
    std::vector<Ranked> ranked = linear_scan(query_codes, database);
    ranked.resize(std::min(k, ranked.size()));
    return ranked;
}

double
average_precision(std::span<const std::uint32_t> ranking, std::span<const std::uint32_t> relevant) {
    if (relevant.empty()) {
        throw InvalidArgument("average_precision: empty relevant set");
    }
    const std::unordered_set<std::uint32_t> wanted(relevant.begin(), relevant.end());
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t rank = 0; rank < ranking.size() && hits < wanted.size(); ++rank) {
        if (wanted.contains(ranking[rank])) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(rank + 1);
        }
    }
    return sum / static_cast<double>(wanted.size());
}

MapReport
mean_average_precision(std::span<const std::vector<std::uint32_t>> rankings, const GroundTruth& truth) {
    if (rankings.size() != truth.relevant.size()) {
        throw InvalidArgument("mean_average_precision: ranking and ground-truth counts differ");
    }
    MapReport report;
    report.average_precision.assign(rankings.size(), std::numeric_limits<double>::quiet_NaN());
    double sum = 0.0;
    std::size_t counted = 0;
    for (std::size_t q = 0; q < rankings.size(); ++q) {
        if (truth.relevant[q].empty()) {
            report.excluded.push_back(q);
            continue;
        }
        report.average_precision[q] = average_precision(rankings[q], truth.relevant[q]);
        sum += report.average_precision[q];
        ++counted;
    }
    if (counted == 0) {
        throw InvalidArgument("mean_average_precision: no query has a relevant item");
    }
    report.mean_ap = sum / static_cast<double>(counted);
    return report;
}

}  // namespace olhash
