#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace modnet {

// One experiment = one model family + one partition method, repeated over
// independent trials with per-trial seed = base_seed + trial_index.
//
// Config files use sectioned key = value lines ('#' and ';' start comments):
//
//   [model]
//   kind = pa          # regular | pa | spa
//   n = 100000
//   m = 8
//
//   [partition]
//   method = majority  # tree | forest | avgdeg | majority | strips | refine
//   eps = 0.05
//
//   [run]
//   trials = 20
//   base_seed = 1
//   csv = trials.csv
//   json = trials.json
//
// Unknown sections or keys are errors (typos should not silently vanish).
struct ExperimentConfig {
    // [model]
    std::string model = "regular";  // regular | pa | spa
    std::uint32_t n = 1000;
    std::uint32_t d = 3;          // regular: degree
    bool require_simple = false;  // regular: reject non-simple samples
    std::uint32_t m = 2;          // pa: edges per vertex
    std::uint32_t dim = 2;        // spa: torus dimension
    double a1 = 1.0;              // spa
    double a2 = 1.0;              // spa
    double p = 0.7;               // spa
    std::string norm = "linf";    // spa: linf | l2

    // [partition]
    std::string method = "avgdeg";  // tree | forest | avgdeg | majority | strips | refine
    double h = 0.0;                 // tree: volume cap (> 0 required)
    std::uint32_t omega = 0;        // strips: 0 = model-derived default
    double eps = 0.05;              // majority: seed fraction
    std::uint32_t refine_passes = 0;  // extra local-search passes after any method
    double gamma = 1.0;             // resolution multiplier on the degree tax

    // [run]
    std::uint32_t trials = 1;
    std::uint64_t base_seed = 1;
    bool spectral = false;   // also attach the eigenvalue upper bound (regular only)
    std::string csv_out;     // empty = do not write
    std::string json_out;    // empty = do not write
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

// Apply one "key = value" override using the same keys as the config file
// (section-qualified when ambiguous would not occur; plain keys accepted).
void apply_override(ExperimentConfig& cfg, const std::string& key, const std::string& value);

struct TrialRecord {
    std::uint32_t index = 0;
    std::uint64_t seed = 0;
    std::uint32_t n = 0;
    std::uint64_t edges = 0;
    std::uint32_t parts = 0;
    double q = 0.0;
    double edge_contribution = 0.0;
    double degree_tax = 0.0;
    // Theoretical reference values evaluated for this trial's instance.
    std::map<std::string, double> bounds;
    // name -> pass for the bounds that are theorems for this configuration
    // (deterministic lower bounds, and upper bounds on q via q <= q*).
    std::map<std::string, bool> asserted;
    bool all_pass = true;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<TrialRecord> trials;
    double mean_q = 0.0;
    double stddev_q = 0.0;
    double mean_edge_contribution = 0.0;
    double mean_degree_tax = 0.0;
    bool all_pass = true;
};

// Runs all trials sequentially (per-trial seed = base_seed + index), computes
// modularity of the configured partition, attaches applicable bounds, and
// writes the CSV/JSON outputs when paths are configured. Deterministic:
// identical config produces byte-identical files.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

void write_experiment_csv(std::ostream& out, const ExperimentResult& result);
std::string experiment_json(const ExperimentResult& result);  // schema_version 1

}  // namespace modnet
