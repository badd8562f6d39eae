#include "d2dpc/config.hpp"

#include <charconv>
#include <cmath>

#include "d2dpc/csv.hpp"

namespace d2dpc {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw config_error("line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line, const std::string& key) {
    double out = 0.0;
    const char* begin = v.data();
    const char* end = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end) {
        fail(line, "key '" + key + "': expected a number, got '" + v + "'");
    }
    return out;
}

long long parse_int(const std::string& v, int line, const std::string& key) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        fail(line, "key '" + key + "': expected an integer, got '" + v + "'");
    }
    return out;
}

std::uint64_t parse_u64(const std::string& v, int line, const std::string& key) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        fail(line,
             "key '" + key + "': expected a non-negative integer, got '" + v +
                 "'");
    }
    return out;
}

std::vector<double> parse_list(const std::string& v, int line,
                               const std::string& key) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        const std::size_t comma = v.find(',', pos);
        const std::string item =
            trim(v.substr(pos, comma == std::string::npos ? std::string::npos
                                                          : comma - pos));
        if (item.empty()) {
            fail(line, "key '" + key + "': empty list element");
        }
        out.push_back(parse_double(item, line, key));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::string> parse_names(const std::string& v, int line,
                                     const std::string& key) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        const std::size_t comma = v.find(',', pos);
        const std::string item =
            trim(v.substr(pos, comma == std::string::npos ? std::string::npos
                                                          : comma - pos));
        if (item.empty()) fail(line, "key '" + key + "': empty list element");
        out.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

void Config::validate() const {
    scenario.validate();
    game.validate();
    if (!(p0_watts > 0.0) || p0_watts > scenario.p_max) {
        throw config_error("game.p0 must lie in (0, scenario.p_max]");
    }
    if (rule.empty()) throw config_error("rule must not be empty");
    if (sweep) sweep->validate();
    if (compare_rules.empty()) {
        throw config_error("compare.rules must not be empty");
    }
    if (check_samples < 1) throw config_error("check.samples must be >= 1");
    if (output.dir.empty()) throw config_error("output.dir must not be empty");
    if (output.format != "csv") {
        throw config_error("output.format: only 'csv' is supported");
    }
}

Config parse_config(const std::string& text) {
    Config config;
    bool sweep_rule_set = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string raw =
            text.substr(pos, nl == std::string::npos ? std::string::npos
                                                     : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string content = trim(raw);
        if (content.empty()) continue;

        const std::size_t eq = content.find('=');
        if (eq == std::string::npos) {
            fail(line_no, "expected 'key = value', got '" + content + "'");
        }
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty()) fail(line_no, "missing key");
        if (value.empty()) fail(line_no, "key '" + key + "': missing value");

        auto& sc = config.scenario;
        auto& gm = config.game;
        if (key == "scenario.n_devices") {
            sc.n_devices = static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "scenario.cellular_count") {
            sc.cellular_count = static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "scenario.cell_radius_m") {
            sc.cell_radius_m = parse_double(value, line_no, key);
        } else if (key == "scenario.path_loss_exponent") {
            sc.path_loss_exponent = parse_double(value, line_no, key);
        } else if (key == "scenario.gain_model") {
            if (value == "distance-power") {
                sc.gain_model = GainModel::DistancePower;
            } else if (value == "explicit") {
                sc.gain_model = GainModel::Explicit;
            } else {
                fail(line_no, "key '" + key +
                                  "': expected distance-power|explicit, got '" +
                                  value + "'");
            }
        } else if (key == "scenario.gains") {
            sc.explicit_gains = parse_list(value, line_no, key);
        } else if (key == "scenario.noise_power") {
            sc.noise_power = parse_double(value, line_no, key);
        } else if (key == "scenario.p_max") {
            sc.p_max = parse_double(value, line_no, key);
        } else if (key == "scenario.seed") {
            sc.seed = parse_u64(value, line_no, key);
        } else if (key == "game.target") {
            gm.target = parse_double(value, line_no, key);
        } else if (key == "game.alpha") {
            gm.alpha = parse_double(value, line_no, key);
        } else if (key == "game.price") {
            gm.price = parse_double(value, line_no, key);
        } else if (key == "game.tol") {
            gm.tol = parse_double(value, line_no, key);
        } else if (key == "game.max_iters") {
            gm.max_iters = static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "game.pricing_sign") {
            if (value == "reduce") {
                gm.pricing_sign = PricingSign::Reduce;
            } else if (value == "literal") {
                gm.pricing_sign = PricingSign::Literal;
            } else {
                fail(line_no, "key '" + key + "': expected reduce|literal, got '" +
                                  value + "'");
            }
        } else if (key == "game.p0") {
            config.p0_watts = parse_double(value, line_no, key);
        } else if (key == "rule") {
            config.rule = value;
        } else if (key == "sweep.axis") {
            if (!config.sweep) config.sweep.emplace();
            if (value == "alpha") {
                config.sweep->axis = SweepAxis::Alpha;
            } else if (value == "price") {
                config.sweep->axis = SweepAxis::Price;
            } else if (value == "device-count") {
                config.sweep->axis = SweepAxis::DeviceCount;
            } else {
                fail(line_no, "key '" + key +
                                  "': expected alpha|price|device-count, got '" +
                                  value + "'");
            }
        } else if (key == "sweep.values") {
            if (!config.sweep) config.sweep.emplace();
            config.sweep->values = parse_list(value, line_no, key);
        } else if (key == "sweep.rule") {
            if (!config.sweep) config.sweep.emplace();
            config.sweep->rule = value;
            sweep_rule_set = true;
        } else if (key == "sweep.repetitions") {
            if (!config.sweep) config.sweep.emplace();
            config.sweep->repetitions =
                static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "sweep.sinr_slack") {
            if (!config.sweep) config.sweep.emplace();
            config.sweep->sinr_slack = parse_double(value, line_no, key);
        } else if (key == "sweep.threads") {
            if (!config.sweep) config.sweep.emplace();
            config.sweep->threads =
                static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "compare.rules") {
            config.compare_rules = parse_names(value, line_no, key);
        } else if (key == "check.samples") {
            config.check_samples =
                static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "output.dir") {
            config.output.dir = value;
        } else if (key == "output.format") {
            config.output.format = value;
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }

    if (config.sweep && !sweep_rule_set) config.sweep->rule = config.rule;

    try {
        config.validate();
    } catch (const config_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
    return config;
}

std::string serialize_config(const Config& config) {
    std::string out;
    auto emit = [&out](const std::string& key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    auto num = [](double v) { return format_double(v); };

    const auto& sc = config.scenario;
    emit("scenario.n_devices", std::to_string(sc.n_devices));
    emit("scenario.cellular_count", std::to_string(sc.cellular_count));
    emit("scenario.cell_radius_m", num(sc.cell_radius_m));
    emit("scenario.path_loss_exponent", num(sc.path_loss_exponent));
    emit("scenario.gain_model", sc.gain_model == GainModel::DistancePower
                                    ? "distance-power"
                                    : "explicit");
    if (!sc.explicit_gains.empty()) {
        std::string list;
        for (std::size_t i = 0; i < sc.explicit_gains.size(); ++i) {
            if (i > 0) list += ", ";
            list += num(sc.explicit_gains[i]);
        }
        emit("scenario.gains", list);
    }
    emit("scenario.noise_power", num(sc.noise_power));
    emit("scenario.p_max", num(sc.p_max));
    emit("scenario.seed", std::to_string(sc.seed));

    const auto& gm = config.game;
    emit("game.target", num(gm.target));
    emit("game.alpha", num(gm.alpha));
    emit("game.price", num(gm.price));
    emit("game.tol", num(gm.tol));
    emit("game.max_iters", std::to_string(gm.max_iters));
    emit("game.pricing_sign",
         gm.pricing_sign == PricingSign::Reduce ? "reduce" : "literal");
    emit("game.p0", num(config.p0_watts));

    emit("rule", config.rule);

    if (config.sweep) {
        const auto& sw = *config.sweep;
        switch (sw.axis) {
            case SweepAxis::Alpha: emit("sweep.axis", "alpha"); break;
            case SweepAxis::Price: emit("sweep.axis", "price"); break;
            case SweepAxis::DeviceCount:
                emit("sweep.axis", "device-count");
                break;
        }
        std::string list;
        for (std::size_t i = 0; i < sw.values.size(); ++i) {
            if (i > 0) list += ", ";
            list += num(sw.values[i]);
        }
        emit("sweep.values", list);
        emit("sweep.rule", sw.rule);
        emit("sweep.repetitions", std::to_string(sw.repetitions));
        emit("sweep.sinr_slack", num(sw.sinr_slack));
        emit("sweep.threads", std::to_string(sw.threads));
    }

    std::string names;
    for (std::size_t i = 0; i < config.compare_rules.size(); ++i) {
        if (i > 0) names += ", ";
        names += config.compare_rules[i];
    }
    emit("compare.rules", names);
    emit("check.samples", std::to_string(config.check_samples));
    emit("output.dir", config.output.dir);
    emit("output.format", config.output.format);
    return out;
}

}  // namespace d2dpc
