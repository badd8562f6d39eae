#include <doctest.h>

#include <cmath>

#include "d2dpc/experiments.hpp"
#include "helpers.hpp"

using namespace d2dpc;
using testutil::make_scenario;

namespace {

GameParams params_with(double target, double alpha, double price) {
    GameParams g;
    g.target = target;
    g.alpha = alpha;
    g.price = price;
    return g;
}

ScenarioSpec feasible_spec() {
    // common target 0.04 needs a (n-1) < 1, comfortably met for n = 20
    ScenarioSpec spec;
    spec.n_devices = 20;
    spec.seed = 9001;
    return spec;
}

}  // namespace

TEST_CASE("generate_scenario: deterministic per seed") {
    const ScenarioSpec spec = feasible_spec();
    const NetworkScenario a = generate_scenario(spec);
    const NetworkScenario b = generate_scenario(spec);
    REQUIRE(a.n() == 20);
    CHECK(a.gains == b.gains);
    for (std::size_t i = 0; i < a.n(); ++i) {
        CHECK(a.devices[i].x_m == b.devices[i].x_m);
        CHECK(a.devices[i].y_m == b.devices[i].y_m);
    }

    ScenarioSpec other = spec;
    other.seed = 9002;
    CHECK(generate_scenario(other).gains != a.gains);
}

TEST_CASE("generate_scenario: explicit gains pass through") {
    ScenarioSpec spec;
    spec.n_devices = 3;
    spec.gain_model = GainModel::Explicit;
    spec.explicit_gains = {0.5, 0.25, 0.125};
    const NetworkScenario s = generate_scenario(spec);
    CHECK(s.gains == spec.explicit_gains);
}

TEST_CASE("generate_scenario: gains stay in (0, 1] across many seeds") {
    ScenarioSpec spec = feasible_spec();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        spec.seed = seed;
        const NetworkScenario s = generate_scenario(spec);
        for (std::size_t i = 0; i < s.n(); ++i) {
            CHECK(std::isfinite(s.gains[i]));
            CHECK(s.gains[i] > 0.0);
            CHECK(s.gains[i] <= 1.0);
            CHECK(s.devices[i].id == static_cast<int>(i));
        }
    }
}

TEST_CASE("generate_scenario: 1 m distance floor caps the gain at 1") {
    ScenarioSpec spec = feasible_spec();
    spec.cell_radius_m = 0.5;  // every draw lands inside the floor
    const NetworkScenario s = generate_scenario(spec);
    for (double h : s.gains) CHECK(h == 1.0);
}

TEST_CASE("generate_scenario: device kinds split cellular then d2d") {
    const NetworkScenario s = generate_scenario(feasible_spec());
    CHECK(s.devices[0].kind == DeviceKind::Cellular);
    CHECK(s.devices[1].kind == DeviceKind::Cellular);
    for (std::size_t i = 2; i < s.n(); ++i) {
        CHECK(s.devices[i].kind == DeviceKind::D2dPair);
    }
}

TEST_CASE("scenario spec validation") {
    ScenarioSpec spec;
    spec.n_devices = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec = ScenarioSpec{};
    spec.path_loss_exponent = 7.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec = ScenarioSpec{};
    spec.gain_model = GainModel::Explicit;
    spec.explicit_gains = {1.0};  // wrong length for 20 devices
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("admitted_count: feasible run admits everyone") {
    const auto s = make_scenario({1.0, 0.5, 0.25}, 1e-3);
    const auto g = params_with(0.2, 0.0, 0.0);
    const auto run = run_to_convergence(s, g, update_unpriced,
                                        PowerVector(3, 8e-3));
    REQUIRE(run.converged);
    CHECK(admitted_count(run, g) == 3);
}

TEST_CASE("admitted_count: empty result admits nobody") {
    CHECK(admitted_count(RunResult{}, GameParams{}) == 0);
}

TEST_CASE("admitted_count: infeasible overload admits strictly fewer") {
    // symmetric 2-user feasibility requires target < 1
    const auto s = make_scenario({1.0, 1.0}, 1e-3);
    const auto g = params_with(2.0, 0.0, 0.0);
    const auto run = run_to_convergence(s, g, update_unpriced,
                                        PowerVector(2, 8e-3));
    CHECK(admitted_count(run, g) < 2);
}

TEST_CASE("admitted_count: monotone non-increasing in the target") {
    const auto s = make_scenario({1.0, 0.5, 0.25}, 1e-3);
    const auto g = params_with(0.2, 0.0, 0.0);
    const auto run = run_to_convergence(s, g, update_unpriced,
                                        PowerVector(3, 8e-3));
    int previous = 4;
    for (double target : {0.05, 0.1, 0.2, 0.5, 1.0, 2.0}) {
        const auto probe = params_with(target, 0.0, 0.0);
        const int count = admitted_count(run, probe);
        CHECK(count <= previous);
        previous = count;
    }
}

TEST_CASE("sweep validation") {
    SweepSpec sweep;
    sweep.values = {};
    CHECK_THROWS_AS(sweep.validate(), std::invalid_argument);

    sweep.values = {0.5, 0.5};
    CHECK_THROWS_AS(sweep.validate(), std::invalid_argument);

    sweep.axis = SweepAxis::DeviceCount;
    sweep.values = {2.5, 3.0};
    CHECK_THROWS_AS(sweep.validate(), std::invalid_argument);

    sweep.values = {2.0, 4.0};
    CHECK_NOTHROW(sweep.validate());
}

TEST_CASE("run_sweep: unknown rule is a configuration error") {
    SweepSpec sweep;
    sweep.values = {0.0, 0.02};
    sweep.rule = "norm2";
    sweep.repetitions = 1;
    CHECK_THROWS_WITH_AS(run_sweep(sweep, feasible_spec(), GameParams{},
                                   builtin_rules(), 8e-3),
                         "unknown rule 'norm2'", std::invalid_argument);
}

TEST_CASE("run_sweep: alpha sweep lowers mean power") {
    SweepSpec sweep;
    sweep.axis = SweepAxis::Alpha;
    sweep.values = {0.0, 0.02};
    sweep.rule = "unpriced";
    sweep.repetitions = 5;
    const auto g = params_with(0.04, 0.0, 0.0);
    const auto rows =
        run_sweep(sweep, feasible_spec(), g, builtin_rules(), 8e-3);
    REQUIRE(rows.size() == 10);

    double mean_at[2] = {0.0, 0.0};
    int iters_at[2] = {0, 0};
    for (const auto& row : rows) {
        REQUIRE(row.converged);
        const int bucket = row.axis_value == 0.0 ? 0 : 1;
        mean_at[bucket] += row.mean_power_w / 5.0;
        iters_at[bucket] += row.iterations;
    }
    CHECK(mean_at[1] < mean_at[0]);
    CHECK(iters_at[1] != iters_at[0]);  // convergence speed shifts with alpha
}

TEST_CASE("run_sweep: price sweep lowers mean SINR") {
    SweepSpec sweep;
    sweep.axis = SweepAxis::Price;
    sweep.values = {0.0, 5100.0};
    sweep.rule = "priced";
    sweep.repetitions = 5;
    const auto g = params_with(0.04, 0.0, 0.0);
    const auto rows =
        run_sweep(sweep, feasible_spec(), g, builtin_rules(), 8e-3);

    double sinr_at[2] = {0.0, 0.0};
    for (const auto& row : rows) {
        const int bucket = row.axis_value == 0.0 ? 0 : 1;
        sinr_at[bucket] += row.mean_sinr / 5.0;
    }
    CHECK(sinr_at[1] < sinr_at[0]);
}

TEST_CASE("run_sweep: mean power non-increasing across the alpha set") {
    SweepSpec sweep;
    sweep.axis = SweepAxis::Alpha;
    sweep.values = {0.0, 0.02, 0.5};
    sweep.rule = "unpriced";
    sweep.repetitions = 5;
    const auto g = params_with(0.04, 0.0, 0.0);
    const auto rows =
        run_sweep(sweep, feasible_spec(), g, builtin_rules(), 8e-3);

    // per repetition the scenario seeds coincide, so compare pairwise
    for (int rep = 0; rep < 5; ++rep) {
        double previous = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < 3; ++a) {
            const auto& row = rows[a * 5 + static_cast<std::size_t>(rep)];
            CHECK(row.seed == rows[static_cast<std::size_t>(rep)].seed);
            CHECK(row.mean_power_w <= previous);
            previous = row.mean_power_w;
        }
    }
}

TEST_CASE("run_sweep: degenerate sweep equals a direct run") {
    SweepSpec sweep;
    sweep.axis = SweepAxis::Price;
    sweep.values = {100.0};
    sweep.rule = "priced";
    sweep.repetitions = 1;
    const auto g = params_with(0.04, 0.0, 0.0);
    const ScenarioSpec spec = feasible_spec();
    const auto rows = run_sweep(sweep, spec, g, builtin_rules(), 8e-3);
    REQUIRE(rows.size() == 1);

    ScenarioSpec cell = spec;
    cell.seed = sweep_cell_seed(spec.seed, 0);
    auto cell_params = g;
    cell_params.price = 100.0;
    const auto direct = run_to_convergence(
        generate_scenario(cell), cell_params,
        builtin_rules().get("priced"), PowerVector(20, 8e-3));
    const MetricsRow expected =
        metrics_from_run(direct, cell_params, sweep.sinr_slack);

    CHECK(rows[0].mean_power_w == expected.mean_power_w);
    CHECK(rows[0].mean_sinr == expected.mean_sinr);
    CHECK(rows[0].iterations == expected.iterations);
    CHECK(rows[0].admitted == expected.admitted);
    CHECK(rows[0].energy_efficiency_proxy == expected.energy_efficiency_proxy);
}

TEST_CASE("run_sweep: byte-reproducible and parallelism-independent") {
    SweepSpec sweep;
    sweep.axis = SweepAxis::Alpha;
    sweep.values = {0.0, 0.02, 0.5};
    sweep.rule = "unpriced";
    sweep.repetitions = 4;
    const auto g = params_with(0.04, 0.0, 0.0);

    const auto serial = run_sweep(sweep, feasible_spec(), g, builtin_rules(),
                                  8e-3);
    const auto again = run_sweep(sweep, feasible_spec(), g, builtin_rules(),
                                 8e-3);
    CHECK(serial == again);

    SweepSpec parallel = sweep;
    parallel.threads = 4;
    const auto threaded =
        run_sweep(parallel, feasible_spec(), g, builtin_rules(), 8e-3);
    CHECK(serial == threaded);
}

TEST_CASE("run_sweep: device-count axis regenerates scenarios") {
    SweepSpec sweep;
    sweep.axis = SweepAxis::DeviceCount;
    sweep.values = {2.0, 8.0, 20.0};
    sweep.rule = "unpriced";
    sweep.repetitions = 2;
    const auto g = params_with(0.04, 0.0, 0.0);
    const auto rows =
        run_sweep(sweep, feasible_spec(), g, builtin_rules(), 8e-3);
    REQUIRE(rows.size() == 6);
    for (const auto& row : rows) {
        CHECK(row.converged);
        CHECK(row.admitted == static_cast<int>(row.axis_value));
    }
}

TEST_CASE("compare_rules: priced undercuts cdpc on a common scenario") {
    const auto g = params_with(0.04, 0.0, 200.0);
    const auto rows = compare_rules({"priced", "cdpc"}, feasible_spec(), g,
                                    builtin_rules(), 8e-3);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].rule == "priced");
    CHECK(rows[1].rule == "cdpc");
    CHECK(rows[0].mean_power_w < rows[1].mean_power_w);
}

TEST_CASE("compare_rules: single rule equals a direct run") {
    const auto g = params_with(0.04, 0.0, 0.0);
    const ScenarioSpec spec = feasible_spec();
    const auto rows =
        compare_rules({"unpriced"}, spec, g, builtin_rules(), 8e-3);
    REQUIRE(rows.size() == 1);

    const auto direct =
        run_to_convergence(generate_scenario(spec), g,
                           builtin_rules().get("unpriced"),
                           PowerVector(20, 8e-3));
    const MetricsRow m = metrics_from_run(direct, g, 0.05);
    CHECK(rows[0].mean_power_w == m.mean_power_w);
    CHECK(rows[0].iterations == m.iterations);
}

TEST_CASE("compare_rules: unknown rule fails before any run") {
    CHECK_THROWS_AS(compare_rules({"cdpc", "hyperbolic"}, feasible_spec(),
                                  GameParams{}, builtin_rules(), 8e-3),
                    std::invalid_argument);
}
