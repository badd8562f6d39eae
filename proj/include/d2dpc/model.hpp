// Physical layer quantities for the uplink power-control game: devices,
// path gains, interference and SINR. All types are immutable value objects
// after construction; all operations are pure.

#ifndef D2DPC_MODEL_HPP
#define D2DPC_MODEL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace d2dpc {

// Transmit powers are kept strictly positive: update rules clamp their
// output to (kPowerFloor, p_max].
inline constexpr double kPowerFloor = 1e-18;  // watts

enum class DeviceKind { Cellular, D2dPair };

struct Device {
    int id = 0;
    DeviceKind kind = DeviceKind::Cellular;
    double x_m = 0.0;  // used only by scenario generation
    double y_m = 0.0;
};

using PowerVector = std::vector<double>;  // per-device transmit power, watts
using SinrVector = std::vector<double>;   // per-device SINR, dimensionless

// One cell: device set, per-device path gain h_i to its receiver,
// receiver noise power and the common transmit power cap.
struct NetworkScenario {
    std::vector<Device> devices;
    std::vector<double> gains;  // h_i, dimensionless, > 0
    double noise_power = 5e-15; // sigma^2, watts
    double p_max = 0.1;         // watts

    std::size_t n() const { return devices.size(); }

    // Throws std::invalid_argument if any structural invariant is broken:
    // gains.size() == devices.size(), gains > 0, noise_power > 0, p_max > 0,
    // device ids contiguous from 0.
    void validate() const;
};

// Clamp an update-rule output into the admissible power range.
double clamp_power(double p, double p_max);

// Receiver-side interference-plus-noise for device i:
//   I_i = sigma^2 + sum_{j != i} p_j * h_j
// Strictly positive, strictly increasing in every p_j (j != i) and
// independent of p_i.
double interference(const NetworkScenario& scenario, const PowerVector& p,
                    std::size_t i);

// gamma_i = p_i * h_i / I_i. Positive whenever p_i > 0.
double sinr(const NetworkScenario& scenario, const PowerVector& p,
            std::size_t i);

SinrVector sinr_all(const NetworkScenario& scenario, const PowerVector& p);

}  // namespace d2dpc

#endif  // D2DPC_MODEL_HPP
