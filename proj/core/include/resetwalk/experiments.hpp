#pragma once

#include <string>
#include <vector>

#include "resetwalk/config.hpp"

namespace resetwalk {

// Outcome of one experiment run.
struct RunReport {
    // 0: success. 3: numerical failure (an MFPT comparison produced censored
    // paths). Config problems throw ConfigError instead (the CLI maps those
    // to exit 2).
    int exit_code = 0;
    std::vector<std::string> artifacts; // CSV files written, in emission order
    std::string message;                // per-artifact summary lines
};

// Execute the experiment and write its CSV artifacts under cfg.out_dir
// (created if missing). Deterministic for a fixed config + seed: estimator
// substreams are keyed per path, so the emitted bytes do not depend on the
// worker count.
RunReport run_experiment(const ExperimentConfig& cfg);

} // namespace resetwalk
