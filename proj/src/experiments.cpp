#include "d2dpc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "d2dpc/rng.hpp"

namespace d2dpc {

void ScenarioSpec::validate() const {
    if (n_devices < 1) throw std::invalid_argument("scenario: n_devices >= 1");
    if (cellular_count < 0) {
        throw std::invalid_argument("scenario: cellular_count >= 0");
    }
    if (!(cell_radius_m > 0.0)) {
        throw std::invalid_argument("scenario: cell_radius_m > 0");
    }
    if (!(path_loss_exponent >= 2.0 && path_loss_exponent <= 6.0)) {
        throw std::invalid_argument(
            "scenario: path_loss_exponent must lie in [2, 6]");
    }
    if (gain_model == GainModel::Explicit) {
        if (explicit_gains.size() != static_cast<std::size_t>(n_devices)) {
            throw std::invalid_argument(
                "scenario: explicit_gains length must equal n_devices");
        }
        for (double g : explicit_gains) {
            if (!(g > 0.0)) {
                throw std::invalid_argument("scenario: gains must be > 0");
            }
        }
    }
    if (!(noise_power > 0.0)) {
        throw std::invalid_argument("scenario: noise_power > 0");
    }
    if (!(p_max > 0.0)) throw std::invalid_argument("scenario: p_max > 0");
}

NetworkScenario generate_scenario(const ScenarioSpec& spec) {
    spec.validate();
    NetworkScenario scenario;
    scenario.noise_power = spec.noise_power;
    scenario.p_max = spec.p_max;
    scenario.devices.resize(static_cast<std::size_t>(spec.n_devices));
    scenario.gains.resize(static_cast<std::size_t>(spec.n_devices));

    std::mt19937_64 rng(spec.seed);
    for (int i = 0; i < spec.n_devices; ++i) {
        Device& dev = scenario.devices[static_cast<std::size_t>(i)];
        dev.id = i;
        dev.kind = i < spec.cellular_count ? DeviceKind::Cellular
                                           : DeviceKind::D2dPair;
        if (spec.gain_model == GainModel::DistancePower) {
            const double radius = spec.cell_radius_m * std::sqrt(uniform01(rng));
            const double angle = 2.0 * M_PI * uniform01(rng);
            dev.x_m = radius * std::cos(angle);
            dev.y_m = radius * std::sin(angle);
            const double dist = std::max(1.0, std::hypot(dev.x_m, dev.y_m));
            scenario.gains[static_cast<std::size_t>(i)] =
                std::pow(dist, -spec.path_loss_exponent);
        } else {
            scenario.gains[static_cast<std::size_t>(i)] =
                spec.explicit_gains[static_cast<std::size_t>(i)];
        }
    }
    scenario.validate();
    return scenario;
}

void SweepSpec::validate() const {
    if (values.empty()) throw std::invalid_argument("sweep: values non-empty");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) {
            throw std::invalid_argument(
                "sweep: values must be strictly increasing");
        }
    }
    if (axis == SweepAxis::DeviceCount) {
        for (double v : values) {
            if (v < 1.0 || v != std::floor(v)) {
                throw std::invalid_argument(
                    "sweep: device-count values must be positive integers");
            }
        }
    }
    if (repetitions < 1) throw std::invalid_argument("sweep: repetitions >= 1");
    if (rule.empty()) throw std::invalid_argument("sweep: rule name required");
    if (!(sinr_slack >= 0.0 && sinr_slack < 1.0)) {
        throw std::invalid_argument("sweep: sinr_slack must lie in [0, 1)");
    }
    if (threads < 0) throw std::invalid_argument("sweep: threads >= 0");
}

int admitted_count(const RunResult& result, const GameParams& params,
                   double sinr_slack) {
    const double threshold = (1.0 - sinr_slack) * params.effective_target();
    int admitted = 0;
    for (double g : result.final_sinrs) {
        if (g >= threshold) ++admitted;
    }
    return admitted;
}

std::uint64_t sweep_cell_seed(std::uint64_t base, int repetition) {
    return splitmix64(base ^
                      splitmix64(static_cast<std::uint64_t>(repetition) + 1));
}

MetricsRow metrics_from_run(const RunResult& result, const GameParams& params,
                            double sinr_slack) {
    MetricsRow row;
    const std::size_t n = result.final_powers.size();
    double power_sum = 0.0;
    double sinr_sum = 0.0;
    double rate_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        power_sum += result.final_powers[i];
        sinr_sum += result.final_sinrs[i];
        rate_sum += std::log2(1.0 + result.final_sinrs[i]);
    }
    row.mean_power_w = n > 0 ? power_sum / static_cast<double>(n) : 0.0;
    row.mean_sinr = n > 0 ? sinr_sum / static_cast<double>(n) : 0.0;
    row.iterations = result.iterations_used;
    row.converged = result.converged;
    row.admitted = admitted_count(result, params, sinr_slack);
    row.energy_efficiency_proxy = power_sum > 0.0 ? rate_sum / power_sum : 0.0;
    return row;
}

std::vector<MetricsRow> run_sweep(const SweepSpec& sweep,
                                  const ScenarioSpec& scenario_spec,
                                  const GameParams& params,
                                  const RuleRegistry& registry,
                                  double p0_watts) {
    sweep.validate();
    scenario_spec.validate();
    params.validate();
    const UpdateRule& rule = registry.get(sweep.rule);
    if (!(p0_watts > 0.0 && p0_watts <= scenario_spec.p_max)) {
        throw std::invalid_argument("p0 must lie in (0, p_max]");
    }

    const std::size_t n_cells =
        sweep.values.size() * static_cast<std::size_t>(sweep.repetitions);
    std::vector<MetricsRow> rows(n_cells);

    auto run_cell = [&](std::size_t cell) {
        const std::size_t axis_index =
            cell / static_cast<std::size_t>(sweep.repetitions);
        const int rep =
            static_cast<int>(cell % static_cast<std::size_t>(sweep.repetitions));
        const double value = sweep.values[axis_index];

        ScenarioSpec cell_scenario = scenario_spec;
        GameParams cell_params = params;
        switch (sweep.axis) {
            case SweepAxis::Alpha: cell_params.alpha = value; break;
            case SweepAxis::Price: cell_params.price = value; break;
            case SweepAxis::DeviceCount:
                cell_scenario.n_devices = static_cast<int>(value);
                break;
        }
        cell_scenario.seed = sweep_cell_seed(scenario_spec.seed, rep);
        cell_params.validate();

        const NetworkScenario scenario = generate_scenario(cell_scenario);
        const PowerVector p0(scenario.n(), p0_watts);
        const RunResult result =
            run_to_convergence(scenario, cell_params, rule, p0);

        MetricsRow row = metrics_from_run(result, cell_params, sweep.sinr_slack);
        row.axis = sweep.axis;
        row.axis_value = value;
        row.repetition = rep;
        row.seed = cell_scenario.seed;
        rows[cell] = row;
    };

    unsigned threads = sweep.threads == 0
                           ? std::max(1u, std::thread::hardware_concurrency())
                           : static_cast<unsigned>(sweep.threads);
    if (threads <= 1 || n_cells <= 1) {
        for (std::size_t cell = 0; cell < n_cells; ++cell) run_cell(cell);
    } else {
        // cells are independent; each worker owns a strided slice and writes
        // into its preassigned row slots, so the merge order is fixed
        std::vector<std::future<void>> workers;
        for (unsigned w = 0; w < threads; ++w) {
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t cell = w; cell < n_cells; cell += threads) {
                    run_cell(cell);
                }
            }));
        }
        for (auto& f : workers) f.get();
    }
    return rows;
}

std::vector<CompareRow> compare_rules(const std::vector<std::string>& names,
                                      const ScenarioSpec& scenario_spec,
                                      const GameParams& params,
                                      const RuleRegistry& registry,
                                      double p0_watts) {
    scenario_spec.validate();
    params.validate();
    for (const auto& name : names) registry.get(name);  // fail fast
    if (!(p0_watts > 0.0 && p0_watts <= scenario_spec.p_max)) {
        throw std::invalid_argument("p0 must lie in (0, p_max]");
    }

    const NetworkScenario scenario = generate_scenario(scenario_spec);
    const PowerVector p0(scenario.n(), p0_watts);

    std::vector<CompareRow> rows;
    rows.reserve(names.size());
    for (const auto& name : names) {
        const RunResult result =
            run_to_convergence(scenario, params, registry.get(name), p0);
        const MetricsRow m = metrics_from_run(result, params, 0.05);
        rows.push_back({name, m.mean_power_w, m.iterations, m.mean_sinr,
                        m.converged});
    }
    return rows;
}

}  // namespace d2dpc
