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
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "olhash/pairs.hpp"
#include "olhash/retrieval.hpp"
#include "olhash/trainer.hpp"

namespace olhash::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kInvariantViolation = 3 };

struct TrainOptions {
    std::filesystem::path dataset;
    std::filesystem::path out;
    TrainerConfig config;
    std::size_t models = kDefaultModels;
    std::size_t pairs = 10000;
    std::optional<double> balance;
    LabelPolicy policy;
    std::optional<std::filesystem::path> metrics_out;
    std::optional<std::filesystem::path> monitor_out;
};

struct TrainSummary {
    std::size_t warmup = 0;
    std::size_t steps = 0;
    std::size_t updates = 0;
    double cumulative_loss = 0.0;
    double c_floor = 0.0;
};

/// Warmup draws min(warmup, n) rows in a seeded random order; training then consumes the pair stream.
/// Metrics rows: step,R,ell,tau,cumR,updated where R sums R*_m over models, ell sums the prediction
/// losses of models that ran, tau is the largest step size and updated counts models changed.
TrainSummary
cmd_train(const TrainOptions& options, std::ostream& log);

struct EncodeOptions {
    std::filesystem::path model;
    std::filesystem::path dataset;
    std::filesystem::path out;
};

CodeTable
cmd_encode(const EncodeOptions& options);

struct QueryOptions {
    std::filesystem::path model;
    std::filesystem::path codes;
    std::filesystem::path queries;
    std::size_t k = 10;
};

/// Writes "query<TAB>rank<TAB>index<TAB>distance" per result.
void
cmd_query(const QueryOptions& options, std::ostream& out, std::ostream& log);

struct EvalOptions {
    std::filesystem::path model;
    std::filesystem::path dataset;
    std::filesystem::path queries;
    LabelPolicy policy;
};

/// Writes "query,ap" rows (empty ap for excluded queries) followed by "mean,<mAP>".
MapReport
cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& log);

struct PairgenOptions {
    std::filesystem::path dataset;
    LabelPolicy policy;
    RngSeed seed{};
    std::size_t pairs = 10000;
    std::optional<double> balance;
};

/// Writes "i<TAB>j<TAB>s" per pair with s in {1,-1}: the stream cmd_train uses for the same seed.
void
cmd_pairgen(const PairgenOptions& options, std::ostream& out);

struct SynthOptions {
    BlobSpec blobs;
    RngSeed seed{};
    std::filesystem::path out;
};

void
cmd_synth(const SynthOptions& options);

/// Seed of the warmup ordering and of the pair stream, derived from the model seed.
RngSeed
warmup_seed(RngSeed seed);

RngSeed
stream_seed(RngSeed seed);

}  // namespace olhash::cli
