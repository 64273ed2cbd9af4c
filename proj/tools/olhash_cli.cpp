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

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "olhash/commands.hpp"
#include "olhash/error.hpp"

namespace {

using namespace olhash;
using namespace olhash::cli;

void
add_policy_flags(CLI::App* cmd, std::string& policy, double& percentile) {
    cmd->add_option("--policy", policy, "Pair label policy: class or metric")
        ->check(CLI::IsMember({"class", "metric"}))
        ->capture_default_str();
    cmd->add_option("--percentile", percentile, "Neighbor fraction for the metric policy")->capture_default_str();
}

}  // namespace

int
main(int argc, char** argv) {
    CLI::App app{"Online hashing: learn binary codes from a stream of labeled pairs"};
    app.require_subcommand(1);

    std::string policy = "class";
    double percentile = 0.05;
    std::optional<double> balance;

    TrainOptions train;
    std::uint64_t train_seed = 1;
    auto* train_cmd = app.add_subcommand("train", "Train a model on a pair stream drawn from a dataset");
    train_cmd->add_option("dataset", train.dataset, "Dataset file (OHDS)")->required();
    train_cmd->add_option("-o,--out", train.out, "Model file to write (OHMD)")->required();
    train_cmd->add_option("--bits", train.config.bits, "Code length r")->capture_default_str();
    train_cmd->add_option("--alpha", train.config.alpha, "Similar-pair Hamming threshold")->capture_default_str();
    train_cmd->add_option("--beta", train.config.beta, "Dissimilar-pair ratio threshold")->capture_default_str();
    train_cmd->add_option("--C", train.config.margin, "Margin parameter C (step size cap)")->capture_default_str();
    train_cmd->add_option("--models", train.models, "Number of models T")->capture_default_str();
    train_cmd->add_option("--warmup", train.config.warmup, "Samples buffered before training (kernel anchors)")
        ->capture_default_str();
    train_cmd->add_flag("--kernel", train.config.use_kernel, "Use the RBF anchor kernel map");
    train_cmd->add_option("--seed", train_seed, "Random seed")->capture_default_str();
    train_cmd->add_option("--pairs", train.pairs, "Number of training pairs")->capture_default_str();
    train_cmd->add_option("--balance", balance, "Target fraction of similar pairs");
    train_cmd->add_option("--metrics-out", train.metrics_out, "Per-step metrics CSV");
    train_cmd->add_option("--monitor-out", train.monitor_out, "Per-step loss-bound monitor CSV");
    add_policy_flags(train_cmd, policy, percentile);

    EncodeOptions encode;
    auto* encode_cmd = app.add_subcommand("encode", "Encode every dataset row with a trained model");
    encode_cmd->add_option("model", encode.model, "Model file")->required();
    encode_cmd->add_option("dataset", encode.dataset, "Dataset file")->required();
    encode_cmd->add_option("-o,--out", encode.out, "Codes file to write (OHCB)")->required();

    QueryOptions query;
    auto* query_cmd = app.add_subcommand("query", "Rank database codes for each query vector");
    query_cmd->add_option("model", query.model, "Model file")->required();
    query_cmd->add_option("codes", query.codes, "Codes file")->required();
    query_cmd->add_option("queries", query.queries, "Query vectors (dataset file)")->required();
    query_cmd->add_option("-k", query.k, "Results per query")->capture_default_str();

    EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "Mean average precision of Hamming ranking");
    eval_cmd->add_option("model", eval.model, "Model file")->required();
    eval_cmd->add_option("dataset", eval.dataset, "Database (dataset file)")->required();
    eval_cmd->add_option("queries", eval.queries, "Queries (dataset file)")->required();
    add_policy_flags(eval_cmd, policy, percentile);

    PairgenOptions pairgen;
    std::uint64_t pairgen_seed = 1;
    auto* pairgen_cmd = app.add_subcommand("pairgen", "Print the labeled pair stream used by train");
    pairgen_cmd->add_option("dataset", pairgen.dataset, "Dataset file")->required();
    pairgen_cmd->add_option("--seed", pairgen_seed, "Random seed")->capture_default_str();
    pairgen_cmd->add_option("--pairs", pairgen.pairs, "Number of pairs")->capture_default_str();
    pairgen_cmd->add_option("--balance", balance, "Target fraction of similar pairs");
    add_policy_flags(pairgen_cmd, policy, percentile);

    SynthOptions synth;
    std::uint64_t synth_seed = 1;
    auto* synth_cmd = app.add_subcommand("synth", "Write a labeled Gaussian-blob dataset");
    synth_cmd->add_option("-o,--out", synth.out, "Dataset file to write")->required();
    synth_cmd->add_option("--classes", synth.blobs.classes, "Number of classes")->capture_default_str();
    synth_cmd->add_option("--points", synth.blobs.points, "Number of rows")->capture_default_str();
    synth_cmd->add_option("--dim", synth.blobs.dim, "Dimension")->capture_default_str();
    synth_cmd->add_option("--spread", synth.blobs.center_scale, "Standard deviation of class centers")
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth_seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*train_cmd) {
            train.config.seed = {train_seed};
            train.balance = balance;
            train.policy = LabelPolicy::parse(policy, percentile);
            const TrainSummary s = cmd_train(train, std::cerr);
            std::cerr << "trained " << s.steps << " pairs (" << s.updates << " model updates), cumulative loss "
                      << s.cumulative_loss << '\n';
        } else if (*encode_cmd) {
            const CodeTable table = cmd_encode(encode);
            std::cerr << "encoded " << table.size() << " items\n";
        } else if (*query_cmd) {
            cmd_query(query, std::cout, std::cerr);
        } else if (*eval_cmd) {
            eval.policy = LabelPolicy::parse(policy, percentile);
            const MapReport report = cmd_eval(eval, std::cout, std::cerr);
            std::cerr << "mAP " << report.mean_ap << '\n';
        } else if (*pairgen_cmd) {
            pairgen.seed = {pairgen_seed};
            pairgen.balance = balance;
            pairgen.policy = LabelPolicy::parse(policy, percentile);
            cmd_pairgen(pairgen, std::cout);
        } else if (*synth_cmd) {
            synth.seed = {synth_seed};
            cmd_synth(synth);
        }
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvariantViolation;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvariantViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kOk;
}
