#pragma once

#include "ecoroute/forecast.hpp"
#include "ecoroute/linkstate.hpp"
#include "ecoroute/microsim.hpp"
#include "ecoroute/routing.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ecoroute {

// Experiment definition, read from a flat `key = value` file:
//
//   network      = desk/network.csv          (required)
//   demand       = desk/demand.csv           (required)
//   opmode       = opmode_default.csv        (optional; built-in table otherwise)
//   speed_model  = models/speed.json | oracle | identity
//   ghg_model    = models/ghg.json | oracle | identity
//   strategies   = TT_m, GHG_m, TT&GHG_m, TT_a, GHG_a, TT&GHG_a
//   costing      = 5                          (one or more of 1..5)
//   seeds        = 1, 2, 3, 4, 5
//   w_t = 0.5, w_e = 0.5 (one key per line)
//   output_dir   = out/desk
//   threads      = 0                          (0 = hardware concurrency)
//   guard_multiple, guard_floor_s, heterogeneity, check_invariants = true|false
//
// Relative paths are resolved against the directory of the config file.
struct ExperimentConfig {
    std::string network_path, demand_path, opmode_path;
    std::string speed_model, ghg_model;
    std::vector<std::string> strategies;
    std::vector<GhgCosting> costings{GhgCosting::marginal};
    std::vector<std::uint64_t> seeds;
    double w_t = 0.5, w_e = 0.5;
    std::string output_dir;
    unsigned threads = 0;
    SimOptions sim;

    // Throws ValidationError: no strategy, no seed, unknown strategy, or a
    // referenced file that does not exist.
    void validate() const;
};

ExperimentConfig parse_experiment_config(const std::string &text, const std::string &base_dir = ".");
ExperimentConfig load_experiment_config(const std::string &path);

// One (strategy, costing, seed) cell.
struct CellResult {
    std::string strategy; // published name
    GhgCosting costing = GhgCosting::marginal;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string diagnostic;

    double mean_tt_min = 0.0;
    double mean_vkt_km = 0.0;
    double total_ghg_kg = 0.0;
    double total_nox_kg = 0.0;
    std::size_t vehicles = 0;
    int duration_s = 0;
    std::size_t guidance_changes = 0;

    SimulationLog log;

    // Strategy name, suffixed with the costing approach when it is not the marginal one.
    std::string label() const;
};

struct MetricsReport {
    std::vector<CellResult> cells;

    const CellResult *find(const std::string &label, std::uint64_t seed) const;
    std::vector<std::string> labels() const;
};

// Shared, immutable inputs for a batch of cells.
struct ExperimentInputs {
    Scenario scenario;
    std::shared_ptr<const PredictorModel> speed_model;
    std::shared_ptr<const PredictorModel> ghg_model;
};

ExperimentInputs load_inputs(const ExperimentConfig &cfg);

// Resolves a model reference: "oracle", "identity", or a model file path.
std::shared_ptr<const PredictorModel> resolve_model(const std::string &ref, PredictTarget target);

// Runs one cell; failures are captured in the result rather than thrown.
CellResult run_cell(const ExperimentInputs &inputs, const ExperimentConfig &cfg, const std::string &strategy,
                    GhgCosting costing, std::uint64_t seed);

// Fills the four indicators from a finished log.
void summarize(CellResult &cell);

// Runs every (strategy, costing, seed) cell, concurrently up to cfg.threads,
// and writes the report files when cfg.output_dir is set.
MetricsReport run_experiment(const ExperimentConfig &cfg);
MetricsReport run_experiment(const ExperimentConfig &cfg, const ExperimentInputs &inputs);

// summary.csv plus per-cell series_, paths_, vehicles_ and links_ files.
void write_report(const std::string &dir, const MetricsReport &report);
// Reads summary.csv back (indicator columns only).
MetricsReport read_summary(const std::string &dir);

struct IndicatorDelta {
    double mean = 0.0; // (baseline - target) / baseline, averaged over seeds
    double min = 0.0;
    double max = 0.0;
};

struct Comparison {
    std::string baseline, target;
    std::vector<std::uint64_t> seeds;
    IndicatorDelta tt, vkt, ghg, nox;
};

// Throws ValidationError when either strategy has no successful cell or
// the two share no seed.
Comparison compare(const MetricsReport &report, const std::string &baseline, const std::string &target);
void write_comparison(std::ostream &out, const Comparison &c);

// Ordered links with entry times for one vehicle; throws ValidationError for
// an unknown cell or vehicle.
std::vector<PathEntry> extract_path(const MetricsReport &report, VehicleId vehicle, const std::string &label,
                                    std::uint64_t seed);

} // namespace ecoroute
