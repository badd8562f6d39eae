// Flat key-value run configuration ("section.key = value" lines). Every key
// is optional and falls back to the simulation defaults; unknown keys are
// hard errors that name the key and line.

#ifndef D2DPC_CONFIG_HPP
#define D2DPC_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "d2dpc/experiments.hpp"

namespace d2dpc {

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputSpec {
    std::string dir = "out";
    std::string format = "csv";

    bool operator==(const OutputSpec&) const = default;
};

struct Config {
    ScenarioSpec scenario;
    GameParams game;
    double p0_watts = 8e-3;  // common initial transmit power
    std::string rule = "priced";
    std::optional<SweepSpec> sweep;  // engaged by any sweep.* key
    std::vector<std::string> compare_rules = {"priced", "cdpc"};
    int check_samples = 1000;
    OutputSpec output;

    // Cross-field checks on top of the per-struct validators.
    void validate() const;

    bool operator==(const Config&) const = default;
};

// Parses and fully validates. Throws config_error with "line N: ..." context.
Config parse_config(const std::string& text);

// Emits every field explicitly; parse_config(serialize_config(c)) == c.
std::string serialize_config(const Config& config);

}  // namespace d2dpc

#endif  // D2DPC_CONFIG_HPP
