#include "d2dpc/model.hpp"

#include <algorithm>
#include <cmath>

namespace d2dpc {

void NetworkScenario::validate() const {
    if (gains.size() != devices.size()) {
        throw std::invalid_argument(
            "scenario: gains.size() != devices.size()");
    }
    for (std::size_t i = 0; i < devices.size(); ++i) {
        if (devices[i].id != static_cast<int>(i)) {
            throw std::invalid_argument(
                "scenario: device ids must be contiguous from 0");
        }
        if (!(gains[i] > 0.0) || !std::isfinite(gains[i])) {
            throw std::invalid_argument("scenario: gain " + std::to_string(i) +
                                        " must be finite and > 0");
        }
    }
    if (!(noise_power > 0.0) || !std::isfinite(noise_power)) {
        throw std::invalid_argument("scenario: noise_power must be > 0");
    }
    if (!(p_max > 0.0) || !std::isfinite(p_max)) {
        throw std::invalid_argument("scenario: p_max must be > 0");
    }
}

double clamp_power(double p, double p_max) {
    return std::min(std::max(p, kPowerFloor), p_max);
}

static void check_index(const NetworkScenario& scenario, const PowerVector& p,
                        std::size_t i) {
    if (p.size() != scenario.n()) {
        throw std::invalid_argument("power vector length != device count");
    }
    if (i >= scenario.n()) {
        throw std::out_of_range("device index out of range");
    }
}

double interference(const NetworkScenario& scenario, const PowerVector& p,
                    std::size_t i) {
    check_index(scenario, p, i);
    double acc = scenario.noise_power;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j != i) acc += p[j] * scenario.gains[j];
    }
    return acc;
}

double sinr(const NetworkScenario& scenario, const PowerVector& p,
            std::size_t i) {
    // validates the index before p[i] is touched;
    // denominator >= noise_power > 0, so the ratio is always finite
    const double denom = interference(scenario, p, i);
    return p[i] * scenario.gains[i] / denom;
}

SinrVector sinr_all(const NetworkScenario& scenario, const PowerVector& p) {
    SinrVector out(scenario.n());
    for (std::size_t i = 0; i < scenario.n(); ++i) out[i] = sinr(scenario, p, i);
    return out;
}

}  // namespace d2dpc
