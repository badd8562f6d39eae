#include "d2dpc/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "d2dpc/analysis.hpp"
#include "d2dpc/csv.hpp"

namespace d2dpc {

namespace {

namespace fs = std::filesystem;

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& dir, const std::string& name,
                const std::string& contents) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw io_error("cannot create output directory '" + dir +
                       "': " + ec.message());
    }
    const fs::path path = fs::path(dir) / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << contents;
    out.flush();
    if (!out) throw io_error("cannot write '" + path.string() + "'");
}

std::string flag(bool b) { return b ? "1" : "0"; }

// shared exception-to-exit-code policy
template <typename Fn>
int guarded(std::ostream& log, Fn&& fn) {
    try {
        return fn();
    } catch (const io_error& e) {
        log << "error: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        log << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        log << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int cmd_run(const Config& config, std::ostream& log) {
    return guarded(log, [&] {
        config.validate();
        const RuleRegistry registry = builtin_rules();
        const NetworkScenario scenario = generate_scenario(config.scenario);
        const PowerVector p0(scenario.n(), config.p0_watts);
        const RunResult result = run_to_convergence(
            scenario, config.game, registry.get(config.rule), p0);

        std::string csv = csv_line({"k", "device_id", "power_w", "sinr",
                                    "utility"});
        for (const TraceRecord& rec : result.trace) {
            for (std::size_t i = 0; i < rec.powers.size(); ++i) {
                csv += csv_line({std::to_string(rec.k), std::to_string(i),
                                 format_double(rec.powers[i]),
                                 format_double(rec.sinrs[i]),
                                 format_double(rec.utilities[i])});
            }
        }
        write_file(config.output.dir, "run.csv", csv);

        const MetricsRow m = metrics_from_run(result, config.game, 0.05);
        log << "rule=" << config.rule << " converged=" << result.converged
            << " iterations=" << result.iterations_used
            << " mean_power_w=" << format_double(m.mean_power_w)
            << " mean_sinr=" << format_double(m.mean_sinr) << "\n";
        return 0;
    });
}

int cmd_sweep(const Config& config, std::ostream& log) {
    return guarded(log, [&] {
        config.validate();
        if (!config.sweep) {
            throw config_error("sweep requested but no sweep.* keys configured");
        }
        const RuleRegistry registry = builtin_rules();
        const std::vector<MetricsRow> rows =
            run_sweep(*config.sweep, config.scenario, config.game, registry,
                      config.p0_watts);

        std::string csv = csv_line({"axis", "axis_value", "repetition", "seed",
                                    "mean_power_w", "mean_sinr", "iterations",
                                    "converged", "admitted",
                                    "energy_efficiency_proxy"});
        for (const MetricsRow& row : rows) {
            const char* axis = row.axis == SweepAxis::Alpha   ? "alpha"
                               : row.axis == SweepAxis::Price ? "price"
                                                              : "device-count";
            csv += csv_line({axis, format_double(row.axis_value),
                             std::to_string(row.repetition),
                             std::to_string(row.seed),
                             format_double(row.mean_power_w),
                             format_double(row.mean_sinr),
                             std::to_string(row.iterations),
                             flag(row.converged), std::to_string(row.admitted),
                             format_double(row.energy_efficiency_proxy)});
        }
        write_file(config.output.dir, "sweep.csv", csv);
        log << "sweep rows=" << rows.size() << " rule=" << config.sweep->rule
            << "\n";
        return 0;
    });
}

int cmd_compare(const Config& config, std::ostream& log) {
    return guarded(log, [&] {
        config.validate();
        const RuleRegistry registry = builtin_rules();
        const std::vector<CompareRow> rows =
            compare_rules(config.compare_rules, config.scenario, config.game,
                          registry, config.p0_watts);

        std::string csv = csv_line({"rule", "mean_power_w", "iterations"});
        for (const CompareRow& row : rows) {
            csv += csv_line({row.rule, format_double(row.mean_power_w),
                             std::to_string(row.iterations)});
        }
        write_file(config.output.dir, "compare.csv", csv);
        for (const CompareRow& row : rows) {
            log << row.rule << ": mean_power_w="
                << format_double(row.mean_power_w)
                << " iterations=" << row.iterations << "\n";
        }
        return 0;
    });
}

int cmd_check(const Config& config, std::ostream& log) {
    return guarded(log, [&] {
        config.validate();
        const RuleRegistry registry = builtin_rules();
        const UpdateRule& rule = registry.get(config.rule);
        const NetworkScenario scenario = generate_scenario(config.scenario);

        const StandardFunctionReport sf = check_standard_function(
            scenario, config.game, rule, config.check_samples,
            config.scenario.seed);

        const PowerVector p0(scenario.n(), config.p0_watts);
        const RunResult run =
            run_to_convergence(scenario, config.game, rule, p0);
        const JacobianReport jac =
            jacobian_at(scenario, config.game, rule, run.final_powers);

        std::string csv = csv_line(
            {"positivity_ok", "monotonicity_ok", "scalability_ok",
             "floor_clamps", "counterexample_condition",
             "counterexample_device", "counterexample_lambda", "jacobian_n",
             "jacobian_det", "jacobian_det_row_scaled", "jacobian_nonsingular"});
        const std::string cex_cond =
            sf.counterexample ? sf.counterexample->condition : "";
        const std::string cex_dev =
            sf.counterexample ? std::to_string(sf.counterexample->device) : "";
        const std::string cex_lambda =
            sf.counterexample ? format_double(sf.counterexample->lambda) : "";
        csv += csv_line({flag(sf.positivity_ok), flag(sf.monotonicity_ok),
                         flag(sf.scalability_ok),
                         std::to_string(sf.floor_clamps), cex_cond, cex_dev,
                         cex_lambda, std::to_string(jac.n),
                         format_double(jac.determinant),
                         format_double(jac.determinant_row_scaled),
                         flag(jac.nonsingular)});
        write_file(config.output.dir, "check.csv", csv);

        std::string jac_csv;
        for (const auto& row : jac.matrix) {
            std::vector<std::string> fields;
            fields.reserve(row.size());
            for (double v : row) fields.push_back(format_double(v));
            jac_csv += csv_line(fields);
        }
        write_file(config.output.dir, "jacobian.csv", jac_csv);

        const bool ok = sf.all_ok() && jac.nonsingular;
        log << "rule=" << config.rule << " positivity=" << sf.positivity_ok
            << " monotonicity=" << sf.monotonicity_ok
            << " scalability=" << sf.scalability_ok
            << " floor_clamps=" << sf.floor_clamps
            << " jacobian_nonsingular=" << jac.nonsingular << "\n";
        return ok ? 0 : 1;
    });
}

}  // namespace d2dpc
