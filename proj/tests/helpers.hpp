// Shared test fixtures: tiny hand-built scenarios and bit-level compares.

#ifndef D2DPC_TESTS_HELPERS_HPP
#define D2DPC_TESTS_HELPERS_HPP

#include <cstdint>
#include <cstring>
#include <vector>

#include "d2dpc/model.hpp"

namespace testutil {

inline d2dpc::NetworkScenario make_scenario(std::vector<double> gains,
                                            double noise_power,
                                            double p_max = 0.1) {
    d2dpc::NetworkScenario s;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        s.devices.push_back({static_cast<int>(i), d2dpc::DeviceKind::D2dPair,
                             0.0, 0.0});
    }
    s.gains = std::move(gains);
    s.noise_power = noise_power;
    s.p_max = p_max;
    return s;
}

// Distance in representable doubles between two same-sign finite values.
inline std::int64_t ulp_distance(double a, double b) {
    std::int64_t ia = 0;
    std::int64_t ib = 0;
    std::memcpy(&ia, &a, sizeof a);
    std::memcpy(&ib, &b, sizeof b);
    const std::int64_t d = ia - ib;
    return d < 0 ? -d : d;
}

inline bool bit_equal(double a, double b) {
    return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace testutil

#endif  // D2DPC_TESTS_HELPERS_HPP
