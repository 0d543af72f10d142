#pragma once

#include <string>
#include <vector>

#include "szlab/report.hpp"

namespace szlab {

/// One flat configuration for every experiment; unused knobs are ignored by
/// experiments that do not consume them. Serializes canonically, and the
/// hash of that serialization is the run id.
struct ExperimentConfig {
    std::string experiment;
    int m = 3;   // q = 2^m
    int m0 = 1;  // subfield degree where relevant
    uint64_t seed = 42;
    int pairs = 100;
    uint64_t trials = 10000;
    uint64_t samples = 1000;
    int word_length = 20;
    uint64_t word_samples = 100;
    int ball_radius = 6;
    int walk_steps = 100;
    std::vector<int> n_schedule;  // empty = ceil(C log q), C in {5,10,20,40}
    double delta0 = 0.25;
    double tol = 1e-6;
    int max_iter = 3000;
    int budget = 16;
    int max_degree = 4;
    int attempts = 50;
    int conjugators = 2;
    std::string out_dir = "out";
    bool write_csv = true;
    bool write_json = true;

    Json to_json() const;
    std::string hash() const;
};

/// Experiment names accepted by run_experiment.
const std::vector<std::string>& experiment_names();

/// Dispatches one experiment, writes its JSON/CSV reports plus a manifest
/// into out_dir, and returns the manifest.
ReportManifest run_experiment(const ExperimentConfig& config);

/// Merges stored manifests (verifying file hashes) into one comparison
/// table keyed by (experiment, q, criterion).
Json summarize(const std::vector<std::string>& manifest_paths);

}  // namespace szlab
