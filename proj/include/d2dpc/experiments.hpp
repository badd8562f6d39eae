// Scenario generation, per-run metrics and the sweep/comparison drivers.
// Everything is seeded and deterministic: identical specs produce identical
// rows, independent of sweep parallelism.

#ifndef D2DPC_EXPERIMENTS_HPP
#define D2DPC_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "d2dpc/game.hpp"
#include "d2dpc/rules.hpp"

namespace d2dpc {

enum class GainModel { DistancePower, Explicit };

struct ScenarioSpec {
    int n_devices = 20;
    int cellular_count = 2;  // leading devices marked Cellular, rest D2dPair
    double cell_radius_m = 500.0;
    double path_loss_exponent = 3.5;
    GainModel gain_model = GainModel::DistancePower;
    std::vector<double> explicit_gains;  // used by GainModel::Explicit
    double noise_power = 5e-15;
    double p_max = 0.1;
    std::uint64_t seed = 1;

    void validate() const;
    bool operator==(const ScenarioSpec&) const = default;
};

// Devices placed uniformly at random in the disk of cell_radius_m around the
// receiver, distances floored at 1 m; DistancePower gains are d^-exponent,
// so gains land in (0, 1]. Deterministic per seed.
NetworkScenario generate_scenario(const ScenarioSpec& spec);

enum class SweepAxis { Alpha, Price, DeviceCount };

struct SweepSpec {
    SweepAxis axis = SweepAxis::Alpha;
    std::vector<double> values;  // non-empty, strictly increasing
    std::string rule = "priced";
    int repetitions = 20;  // distinct derived seeds per axis value
    double sinr_slack = 0.05;
    int threads = 1;  // sweep-cell parallelism; 0 = hardware concurrency

    void validate() const;
    bool operator==(const SweepSpec&) const = default;
};

struct MetricsRow {
    SweepAxis axis = SweepAxis::Alpha;
    double axis_value = 0.0;
    int repetition = 0;
    std::uint64_t seed = 0;  // derived scenario seed for this cell
    double mean_power_w = 0.0;
    double mean_sinr = 0.0;
    int iterations = 0;
    bool converged = false;
    int admitted = 0;
    // sum_i log2(1 + gamma_i) / sum_i p_i; a bits-per-joule shaped proxy,
    // not a published formula (flagged in the CSV header name too)
    double energy_efficiency_proxy = 0.0;

    bool operator==(const MetricsRow&) const = default;
};

// Devices whose final SINR is >= (1 - sinr_slack) * effective target.
int admitted_count(const RunResult& result, const GameParams& params,
                   double sinr_slack = 0.05);

// Scenario seed for one sweep repetition: a fixed mixing of the base seed.
// Deliberately independent of the axis value, so every axis value is run on
// the same scenario set and rows are comparable along the axis.
std::uint64_t sweep_cell_seed(std::uint64_t base, int repetition);

MetricsRow metrics_from_run(const RunResult& result, const GameParams& params,
                            double sinr_slack);

// One row per (axis value, repetition), ordered by (axis index, repetition).
// Throws std::invalid_argument when sweep.rule is not registered.
std::vector<MetricsRow> run_sweep(const SweepSpec& sweep,
                                  const ScenarioSpec& scenario_spec,
                                  const GameParams& params,
                                  const RuleRegistry& registry,
                                  double p0_watts);

struct CompareRow {
    std::string rule;
    double mean_power_w = 0.0;
    int iterations = 0;
    double mean_sinr = 0.0;
    bool converged = false;

    bool operator==(const CompareRow&) const = default;
};

// Runs every named rule on the same seeded scenario from the same start.
std::vector<CompareRow> compare_rules(const std::vector<std::string>& names,
                                      const ScenarioSpec& scenario_spec,
                                      const GameParams& params,
                                      const RuleRegistry& registry,
                                      double p0_watts);

}  // namespace d2dpc

#endif  // D2DPC_EXPERIMENTS_HPP
