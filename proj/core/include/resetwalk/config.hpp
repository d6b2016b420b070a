#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "resetwalk/model.hpp"
#include "resetwalk/simulate.hpp"

namespace resetwalk {

// Raised for any config-file problem; the message is line-anchored
// ("path:line: what") whenever the offending line is known.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { mfpt_curve, survival_curve, stationary, optimize, figure };

const char* to_string(ExperimentKind k);

// A parsed experiment description. File format: flat TOML-style text --
// `key = value` lines, dotted keys for the model block, double-quoted
// strings, [comma, separated] numeric arrays, # comments. `schema = 1` is
// required. Unknown keys and keys not used by the experiment kind are
// rejected with the offending line number.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::mfpt_curve;
    ModelParams model;
    double level = 1.0;       // passage level for mfpt/survival/optimize kinds
    std::uint64_t n_paths = 100000;
    std::uint64_t seed = 12345;
    std::string out_dir = ".";

    std::vector<double> lambda_grid; // mfpt-curve sweep of reset rates
    std::vector<double> t_grid;      // survival-curve time grid
    std::vector<double> rho_grid;    // optimize sweep; figure curve set
    std::vector<double> omega_grid;  // stationary: optional CF comparison

    double t_snapshot = 0.0; // stationary; 0 means the default 20/reset_rate
    HistogramSpec hist;      // stationary histogram window

    std::string figure; // "fig2" | "fig4" | "fig6" when kind == figure

    // Parse + semantically validate a config file. Throws ConfigError.
    static ExperimentConfig load(const std::string& path);

    // Built-in figure presets: named parameter grids for the standard plots
    // (fig2/fig4/fig6). n_paths/seed/out_dir are taken from the arguments.
    static ExperimentConfig figure_preset(const std::string& name, std::uint64_t n_paths,
                                          std::uint64_t seed, const std::string& out_dir);
};

} // namespace resetwalk
