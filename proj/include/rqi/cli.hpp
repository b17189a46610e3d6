#pragma once

// Command-line driver layer: JSON configs, parameter sweeps with CSV output,
// and the textual scenario / CHSH reports. Everything here is deterministic:
// floats are printed with 17 significant digits and rows are emitted in grid
// order regardless of how they were computed.

#include <map>
#include <string>
#include <vector>

#include "rqi/relboost.hpp"

namespace rqi {

std::string format_g17(double x);

std::string read_text_file(const std::string& path);  // throws IoError
void write_text_file(const std::string& path, const std::string& content);

// ---- sweeps ----

struct SweepAxis {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    int steps = 1;
};

struct SweepSpec {
    std::string family; // "wigner_angle" | "bell" | "triplet"
    std::vector<SweepAxis> axes; // 1 or 2; first axis is the slow (outer) one
    std::map<std::string, double> fixed;
    std::vector<std::string> partitions; // family sweeps only
    std::string out; // default output path; empty = stdout
};

// Built-in grids: fig1 = Wigner angle over (v, w); fig2 = four-factor
// entanglement gain over (alpha, beta) at delta = pi/2; fig3 = spin-vs-momentum
// entanglement at delta = pi/4; fig4 = triplet family over (theta, phi).
SweepSpec preset_sweep(const std::string& name); // throws ConfigError

SweepSpec sweep_from_json(const std::string& json_text, bool degrees);

// CSV text (header + one row per grid point, LF endings). Rows are computed
// independently (OpenMP when available and parallel = true) and joined in
// grid order, so the bytes never depend on scheduling.
std::string run_sweep(const SweepSpec& spec, bool parallel = true);

// ---- scenario report ----

struct ScenarioConfig {
    ScenarioParams params;
    bool from_speeds = false; // echo v, w in the report
};

ScenarioConfig scenario_from_json(const std::string& json_text, bool degrees);

struct ScenarioOutcome {
    std::string report;
    double max_residual = 0.0; // worst |numeric - closed form|
};

ScenarioOutcome run_scenario(const ScenarioConfig& config);

// ---- CHSH report ----

struct ChshOutcome {
    std::string report;
    double deviation = 0.0; // | |S_transformed| - 2 sqrt 2 |
};

ChshOutcome run_chsh(double v, double w);

// Full argv-level entry point used by main(); returns the process exit code
// (0 success, 2 configuration error, 3 tolerance failure).
int cli_main(int argc, char** argv);

} // namespace rqi
