// d2dpc — uplink power-control game simulator.
// Subcommands: run | sweep | compare | check. See README for the config
// file grammar and output schemas.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "d2dpc/commands.hpp"

namespace {

int load_config(const std::string& path, d2dpc::Config& config) {
    std::string text;
    if (!path.empty()) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read config file '" << path << "'\n";
            return 3;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        config = d2dpc::parse_config(text);
    } catch (const d2dpc::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uplink power-control game simulator"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = -1;

    app.add_option("--config", config_path, "configuration file");
    app.add_option("--out", out_dir, "output directory (overrides output.dir)");
    app.add_option("--seed", seed, "seed override for all scenario generation")
        ->each([&seed_set](const std::string&) { seed_set = true; });

    auto* run = app.add_subcommand("run", "single run, per-iteration trace CSV");
    auto* sweep = app.add_subcommand("sweep", "axis sweep, metrics CSV");
    sweep->add_option("--threads", threads, "sweep parallelism (0 = hardware)");
    auto* compare = app.add_subcommand("compare",
                                       "run several rules on one scenario");
    auto* check = app.add_subcommand(
        "check", "standard-function and Jacobian verification");

    CLI11_PARSE(app, argc, argv);

    d2dpc::Config config;
    if (const int rc = load_config(config_path, config); rc != 0) return rc;
    if (seed_set) config.scenario.seed = seed;
    if (!out_dir.empty()) config.output.dir = out_dir;
    if (threads >= 0) {
        if (!config.sweep) config.sweep.emplace();
        config.sweep->threads = threads;
    }

    if (run->parsed()) return d2dpc::cmd_run(config, std::cout);
    if (sweep->parsed()) return d2dpc::cmd_sweep(config, std::cout);
    if (compare->parsed()) return d2dpc::cmd_compare(config, std::cout);
    if (check->parsed()) return d2dpc::cmd_check(config, std::cout);
    return 2;
}
