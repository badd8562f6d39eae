// The power-control game: per-device cost functions, the two fixed-point
// update rules (with and without pricing), the synchronous iteration engine
// and the Nash-equilibrium probe.

#ifndef D2DPC_GAME_HPP
#define D2DPC_GAME_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "d2dpc/model.hpp"

namespace d2dpc {

// The priced update as printed in the source algebra adds (c/2)*(p/gamma)^2,
// which makes pricing raise power. Reduce is the cost-minimising form that
// subtracts it; Literal keeps the additive form for comparison runs.
enum class PricingSign { Reduce, Literal };

struct GameParams {
    double target = 5.0;    // Gamma, SINR target, > 0
    double alpha = 0.0;     // cost coefficient, in [0, 1)
    double price = 5100.0;  // c, per-watt charge, >= 0
    double tol = 1e-9;      // convergence tolerance on max relative power change
    int max_iters = 500;
    PricingSign pricing_sign = PricingSign::Reduce;

    // Gamma / (alpha * Gamma + 1): the SINR value at which the squared-error
    // cost term vanishes.
    double effective_target() const { return target / (alpha * target + 1.0); }

    void validate() const;

    bool operator==(const GameParams&) const = default;
};

enum class UtilityKind { Base, Priced };

// Cost terms, minimised by each player.
//   base:   (Gamma/(alpha*Gamma+1) - gamma_i)^2
//   priced: base + c * p_i
double utility_base(const GameParams& params, double gamma_i);
double utility_priced(const GameParams& params, double gamma_i, double p_i);

// Snapshot after one completed synchronous iteration.
struct TraceRecord {
    int k = 0;  // iteration index, 1-based
    PowerVector powers;
    SinrVector sinrs;
    std::vector<double> utilities;
    std::vector<std::uint8_t> priced_out;  // 1 where the power floor clamp hit
};

struct RunResult {
    PowerVector final_powers;
    SinrVector final_sinrs;
    int iterations_used = 0;
    bool converged = false;
    std::vector<TraceRecord> trace;
};

// Thrown by run_to_convergence when an update produces a non-finite power.
class diverged_error : public std::runtime_error {
public:
    diverged_error(int iteration, const std::string& what)
        : std::runtime_error(what), iteration_(iteration) {}
    int iteration() const { return iteration_; }

private:
    int iteration_;
};

using UpdateRule = std::function<PowerVector(
    const NetworkScenario&, const GameParams&, const PowerVector&)>;

// p_i' = (Gamma/(alpha*Gamma+1)) * p_i/gamma_i, clamped to (kPowerFloor, p_max].
// With alpha = 0 this is the classical DPC map (Gamma/gamma) * p.
// Requires every p_i > 0; throws std::domain_error otherwise.
PowerVector update_unpriced(const NetworkScenario& scenario,
                            const GameParams& params, const PowerVector& p);

// With r_i = p_i/gamma_i:
//   p_i' = A*r_i - (c/2)*r_i^2   (PricingSign::Reduce, default)
//   p_i' = A*r_i + (c/2)*r_i^2   (PricingSign::Literal)
// where A = Gamma/(alpha*Gamma+1). Reduces to update_unpriced at c = 0.
PowerVector update_priced(const NetworkScenario& scenario,
                          const GameParams& params, const PowerVector& p);

// Applies `rule` synchronously (every device reads the same p^k) until the
// max per-device relative power change drops below params.tol or
// params.max_iters is reached. Deterministic given (scenario, params, p0).
RunResult run_to_convergence(const NetworkScenario& scenario,
                             const GameParams& params, const UpdateRule& rule,
                             const PowerVector& p0);

// Per-device probe powers used by the equilibrium check: log-spaced points
// in (kPowerFloor, p_max].
struct ProbeGrid {
    int points = 64;
    std::vector<double> powers(double p_max) const;
};

struct NashReport {
    bool is_equilibrium = true;
    int worst_device = -1;      // -1 when no improving deviation was found
    double worst_probe_power = 0.0;
    double worst_improvement = 0.0;  // cost reduction achieved by the probe
};

// Best unilateral deviation for one device over the probe grid: the probe
// power minimising that device's cost, and the cost reduction it achieves
// relative to staying at p[device].
struct Deviation {
    double probe_power = 0.0;
    double improvement = 0.0;
};
Deviation best_unilateral_deviation(const NetworkScenario& scenario,
                                    const GameParams& params, UtilityKind kind,
                                    const PowerVector& p, std::size_t device,
                                    const ProbeGrid& grid = {});

// True when no unilateral grid deviation lowers any device's cost by more
// than utility_tol.
NashReport is_nash_equilibrium(const NetworkScenario& scenario,
                               const GameParams& params, UtilityKind kind,
                               const PowerVector& p, const ProbeGrid& grid = {},
                               double utility_tol = 1e-9);

}  // namespace d2dpc

#endif  // D2DPC_GAME_HPP
