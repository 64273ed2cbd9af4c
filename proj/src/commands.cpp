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

#include "olhash/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "olhash/bound_monitor.hpp"
#include "olhash/ensemble.hpp"
#include "olhash/error.hpp"
#include "olhash/formats.hpp"

namespace olhash::cli {

namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ull;

std::string
num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream
open_text(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw FormatError("cannot write " + path.string());
    }
    return out;
}

void
check_model_input(const ModelSnapshot& snap, const Dataset& data, const char* what) {
    if (data.size() > 0 || data.dim != 0) {
        if (data.dim != snap.input_dim) {
            throw DimensionMismatch(std::string(what) + " has dimension " + std::to_string(data.dim) +
                                    " but the model expects " + std::to_string(snap.input_dim));
        }
    }
}

}  // namespace

RngSeed
warmup_seed(RngSeed seed) {
    return {seed.value + kSeedStride};
}

RngSeed
stream_seed(RngSeed seed) {
    return {seed.value + 2 * kSeedStride};
}

TrainSummary
cmd_train(const TrainOptions& options, std::ostream& log) {
    options.config.validate();
    if (options.models == 0 || options.models > 0xFFFF) {
        throw InvalidArgument("model count must be between 1 and 65535");
    }
    const Dataset data = io::read_dataset(options.dataset);
    if (data.size() < 2) {
        throw FormatError("training needs at least two rows");
    }
    const PairLabeler labeler(data, options.policy);

    TrainerConfig config = options.config;
    if (config.warmup > data.size()) {
        log << "warning: warmup " << config.warmup << " exceeds dataset size; using " << data.size() << '\n';
        config.warmup = data.size();
    }

    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 shuffle_rng(warmup_seed(config.seed).value);
    std::shuffle(order.begin(), order.end(), shuffle_rng);

    Ensemble ensemble(config, options.models, data.dim);
    for (std::size_t p = 0; p < config.warmup; ++p) {
        ensemble.ingest_warmup(data.rows[order[p]]);
    }

    const std::vector<PairRef> stream = pair_stream(labeler, stream_seed(config.seed), options.pairs, options.balance);

    std::optional<std::ofstream> metrics;
    if (options.metrics_out) {
        metrics = open_text(*options.metrics_out);
        *metrics << "step,R,ell,tau,cumR,updated\n";
    }
    std::optional<std::ofstream> monitor_csv;
    if (options.monitor_out) {
        monitor_csv = open_text(*options.monitor_out);
        *monitor_csv << bound_csv_header() << '\n';
    }

    BoundMonitor monitor(config.margin, options.models);
    TrainSummary summary;
    summary.warmup = config.warmup;
    for (std::size_t t = 0; t < stream.size(); ++t) {
        const EnsembleReport report = ensemble.mm_step(materialize(data, stream[t]));
        monitor.monitor_step(report);

        double loss = 0.0;
        double ell = 0.0;
        double tau = 0.0;
        std::size_t updated = 0;
        for (std::size_t m = 0; m < report.reports.size(); ++m) {
            loss += report.r_star[m];
            if (const auto& r = report.reports[m]) {
                ell += r->prediction_loss;
                tau = std::max(tau, r->tau);
                updated += r->updated ? 1 : 0;
            }
        }
        summary.updates += updated;
        if (metrics) {
            *metrics << (t + 1) << ',' << num(loss) << ',' << num(ell) << ',' << num(tau) << ','
                     << num(monitor.cumulative_loss()) << ',' << updated << '\n';
        }
        if (monitor_csv) {
            *monitor_csv << bound_csv_row(monitor) << '\n';
        }
    }
    summary.steps = stream.size();
    summary.cumulative_loss = monitor.cumulative_loss();
    summary.c_floor = monitor.c_floor();
    if (!monitor.margin_sufficient()) {
        log << "note: C=" << config.margin << " is below the observed bound floor " << monitor.c_floor() << '\n';
    }

    io::save_model(options.out, ensemble.snapshot());
    return summary;
}

CodeTable
cmd_encode(const EncodeOptions& options) {
    const ModelSnapshot snap = io::load_model(options.model);
    const Dataset data = io::read_dataset(options.dataset);
    check_model_input(snap, data, "dataset");
    CodeTable table = encode_all(snap, data);
    io::write_codes(options.out, table);
    return table;
}

void
cmd_query(const QueryOptions& options, std::ostream& out, std::ostream& log) {
    const ModelSnapshot snap = io::load_model(options.model);
    const CodeTable table = io::read_codes(options.codes);
    const Dataset queries = io::read_dataset(options.queries);
    check_model_input(snap, queries, "query file");
    if (table.bits != snap.bits() || table.models != snap.models.size()) {
        throw DimensionMismatch("codes file (r=" + std::to_string(table.bits) + ", T=" +
                                std::to_string(table.models) + ") does not match the model (r=" +
                                std::to_string(snap.bits()) + ", T=" + std::to_string(snap.models.size()) + ")");
    }
    if (options.k > table.size()) {
        log << "warning: k=" << options.k << " exceeds database size " << table.size() << "; returning "
            << table.size() << " results per query\n";
    }
    for (std::size_t q = 0; q < queries.size(); ++q) {
        const std::vector<HashCode> codes = snap.encode(queries.rows[q]);
        const std::vector<Ranked> hits = top_k(codes, table, options.k);
        for (std::size_t rank = 0; rank < hits.size(); ++rank) {
            out << q << '\t' << rank + 1 << '\t' << hits[rank].index << '\t' << hits[rank].distance << '\n';
        }
    }
}

MapReport
cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& log) {
    const ModelSnapshot snap = io::load_model(options.model);
    const Dataset database = io::read_dataset(options.dataset);
    const Dataset queries = io::read_dataset(options.queries);
    check_model_input(snap, database, "dataset");
    check_model_input(snap, queries, "query file");

    const GroundTruth truth = build_ground_truth(database, queries, options.policy);
    const CodeTable table = encode_all(snap, database);
    std::vector<std::vector<std::uint32_t>> rankings;
    rankings.reserve(queries.size());
    for (const Vector& q : queries.rows) {
        std::vector<std::uint32_t> order;
        for (const Ranked& r : linear_scan(snap.encode(q), table)) {
            order.push_back(r.index);
        }
        rankings.push_back(std::move(order));
    }
    MapReport report = mean_average_precision(rankings, truth);
    for (const std::size_t q : report.excluded) {
        log << "warning: query " << q << " has no relevant items and is excluded from mAP\n";
    }
    out << "query,ap\n";
    for (std::size_t q = 0; q < report.average_precision.size(); ++q) {
        out << q << ',';
        if (!std::isnan(report.average_precision[q])) {
            out << num(report.average_precision[q]);
        }
        out << '\n';
    }
    out << "mean," << num(report.mean_ap) << '\n';
    return report;
}

void
cmd_pairgen(const PairgenOptions& options, std::ostream& out) {
    const Dataset data = io::read_dataset(options.dataset);
    const PairLabeler labeler(data, options.policy);
    for (const PairRef& p : pair_stream(labeler, stream_seed(options.seed), options.pairs, options.balance)) {
        out << p.i << '\t' << p.j << '\t' << static_cast<int>(p.s) << '\n';
    }
}

void
cmd_synth(const SynthOptions& options) {
    io::write_dataset(options.out, make_blobs(options.blobs, options.seed));
}

}  // namespace olhash::cli
